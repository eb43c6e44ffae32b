#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "otreal/rational.hpp"

namespace otreal {

/// Dense row-major matrix over Q. Rectangular shapes are allowed; most
/// operations below require square input.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix zero(std::size_t n) { return RationalMatrix(n, n); }
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_ints(const std::vector<std::vector<std::int64_t>>& rows);
  static RationalMatrix from_ints(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool symmetric() const;
  bool integral() const;
  RationalMatrix transpose() const;

  /// Integer entries as int64 (throws std::overflow_error otherwise).
  std::vector<std::vector<std::int64_t>> to_ints() const;

  /// Right-aligned grid, one row per line.
  std::string grid() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

using RationalVector = std::vector<BigRational>;

RationalVector to_rational(const std::vector<std::int64_t>& v);

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::int64_t sigma() const {
    return static_cast<std::int64_t>(n_plus) - static_cast<std::int64_t>(n_minus);
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Fraction-free (Bareiss) elimination; rows are scaled to integers first.
BigRational determinant(const RationalMatrix& m);

Inertia signature(const RationalMatrix& m);

/// T and diagonal D with T * m * T^T = D (T invertible, rational).
struct Congruence {
  RationalMatrix transform;
  RationalVector diagonal;
};
Congruence congruence_diagonalize(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Solves m x = b exactly. Throws singular_matrix.
RationalVector solve(const RationalMatrix& m, const RationalVector& b);
RationalMatrix inverse(const RationalMatrix& m);

/// w^T m^{-1} w.
BigRational quadratic_form_inverse(const RationalMatrix& m, const RationalVector& w);

// J_n: 2 on the diagonal, -1 beside it. J~_n = -J_n.
RationalMatrix j_block(std::size_t n);
RationalMatrix j_tilde_block(std::size_t n);

}  // namespace otreal
