#include "otreal/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "otreal/error.hpp"

namespace otreal {

std::int64_t to_int64(const BigInteger& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

std::int64_t to_int64(const BigRational& x) {
  if (!is_integer(x)) throw std::overflow_error("not an integer: " + x.get_str());
  return to_int64(BigInteger(x.get_num()));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::invalid_argument, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = make_rational(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto row : rows) v.emplace_back(row);
  return from_ints(v);
}

bool RationalMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigRational& x) { return is_integer(x); });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<std::int64_t>> RationalMatrix::to_ints() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_int64((*this)(i, j));
  return out;
}

std::string RationalMatrix::grid() const {
  std::size_t width = 1;
  for (const auto& x : data_) width = std::max(width, x.get_str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::string s = (*this)(i, j).get_str();
      if (j) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::invalid_argument, "shape mismatch in product");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::invalid_argument, "shape mismatch in sum");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalVector to_rational(const std::vector<std::int64_t>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_rational(x));
  return out;
}

namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.square()) throw Error(ErrorCode::invalid_argument, std::string(what) + ": matrix is not square");
}

}  // namespace

BigRational determinant(const RationalMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row: det(m) = det(A) / prod(scale).
  std::vector<std::vector<BigInteger>> a(n, std::vector<BigInteger>(n));
  BigInteger scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInteger l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }

  int sign = 1;
  BigInteger prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  BigRational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Congruence congruence_diagonalize(const RationalMatrix& m) {
  if (!m.symmetric()) throw Error(ErrorCode::invalid_argument, "congruence diagonalization needs a symmetric matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix t = RationalMatrix::identity(n);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(t(i, c), t(j, c));
  };
  // row/col i += row/col j
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
    for (std::size_t c = 0; c < n; ++c) t(i, c) += t(j, c);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, s) == 0) ++s;
      if (s < n) {
        swap_index(k, s);
      } else {
        // every remaining diagonal entry is zero
        s = k + 1;
        while (s < n && a(k, s) == 0) ++s;
        if (s == n) continue;  // row k already zero
        add_index(k, s);       // a(k,k) becomes 2 a(k,s)
      }
    }
    const BigRational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t c = 0; c < n; ++c) t(i, c) -= f * t(k, c);
      a(i, k) = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
    // keep the trailing block symmetric (row updates above already did it)
  }

  Congruence out{std::move(t), RationalVector(n)};
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  return out;
}

Inertia signature(const RationalMatrix& m) {
  if (!m.symmetric()) throw Error(ErrorCode::invalid_argument, "signature needs a symmetric matrix");
  Inertia in;
  for (const auto& d : congruence_diagonalize(m).diagonal) {
    int s = sgn(d);
    if (s > 0) ++in.n_plus;
    else if (s < 0) ++in.n_minus;
    else ++in.n_zero;
  }
  return in;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t s = r;
    while (s < a.rows() && a(s, c) == 0) ++s;
    if (s == a.rows()) continue;
    if (s != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(s, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      BigRational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// Gauss-Jordan on [m | rhs]; rhs is overwritten with the solution.
void gauss_jordan(RationalMatrix a, RationalMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t s = c;
    while (s < n && a(s, c) == 0) ++s;
    if (s == n) throw Error(ErrorCode::singular_matrix, "matrix is singular");
    if (s != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(s, j), a(c, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(s, j), rhs(c, j));
    }
    BigRational inv = 1 / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      BigRational f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(c, j);
    }
  }
}

}  // namespace

RationalVector solve(const RationalMatrix& m, const RationalVector& b) {
  require_square(m, "solve");
  if (b.size() != m.rows()) throw Error(ErrorCode::invalid_argument, "solve: dimension mismatch");
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  gauss_jordan(m, rhs);
  RationalVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  RationalMatrix rhs = RationalMatrix::identity(m.rows());
  gauss_jordan(m, rhs);
  return rhs;
}

BigRational quadratic_form_inverse(const RationalMatrix& m, const RationalVector& w) {
  RationalVector x = solve(m, w);
  BigRational acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
  return acc;
}

RationalMatrix j_block(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
  }
  return m;
}

RationalMatrix j_tilde_block(std::size_t n) {
  RationalMatrix m = j_block(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -m(i, j);
  return m;
}

}  // namespace otreal
