#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace otreal {

// mpq_class keeps values canonical (den > 0, reduced, zero as 0/1) after every
// arithmetic operation, which is all the kernel relies on.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  BigRational r(BigInteger(std::to_string(num)), BigInteger(std::to_string(den)));
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

// Throws std::overflow_error when x is not an integer in int64 range.
std::int64_t to_int64(const BigRational& x);
std::int64_t to_int64(const BigInteger& x);

inline std::string to_string(const BigRational& x) { return x.get_str(); }

}  // namespace otreal
