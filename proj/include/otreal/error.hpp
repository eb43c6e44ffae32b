#pragma once

#include <stdexcept>
#include <string>

namespace otreal {

enum class ErrorCode {
  invalid_argument,
  parameter_domain,
  unsupported_family,
  singular_matrix,
  not_fibered,
  internal_consistency,
  monotonicity,
  invalid_move,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace otreal
