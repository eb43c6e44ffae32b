#include <doctest.h>

#include <random>

#include "otreal/error.hpp"
#include "otreal/linalg.hpp"

using namespace otreal;

namespace {

RationalMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  // product of elementary integer shears and sign flips; det = +-1
  std::uniform_int_distribution<int> coef(-2, 2), idx(0, static_cast<int>(n) - 1);
  RationalMatrix t = RationalMatrix::identity(n);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    auto i = static_cast<std::size_t>(idx(rng)), j = static_cast<std::size_t>(idx(rng));
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
  }
  if (n > 0 && coef(rng) < 0)
    for (std::size_t k = 0; k < n; ++k) t(0, k) = -t(0, k);
  return t;
}

RationalMatrix random_symmetric(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = e(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(determinant(j_block(5)) == 6);
  CHECK(determinant(j_tilde_block(4)) == 5);
  CHECK(determinant(RationalMatrix::identity(3)) == 1);
  CHECK(determinant(RationalMatrix::zero(0)) == 1);
  CHECK(determinant(RationalMatrix::zero(3)) == 0);
}

TEST_CASE("det J_n and J~_n up to 30") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    CHECK(determinant(j_block(n)) == n + 1);
    CHECK(determinant(j_tilde_block(n)) == (n % 2 ? -1 : 1) * (n + 1));
  }
}

TEST_CASE("determinant with rational entries and pivoting") {
  RationalMatrix m(2, 2);
  m(0, 0) = 0;
  m(0, 1) = BigRational(1, 2);
  m(1, 0) = BigRational(2, 3);
  m(1, 1) = 5;
  CHECK(determinant(m) == BigRational(-1, 3));

  auto a = RationalMatrix::from_ints({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}});
  CHECK(determinant(a) == -6);
}

TEST_CASE("determinant matches cofactor expansion on small random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = e(rng);
    BigRational ref = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == ref);
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(j_block(7)) == Inertia{7, 0, 0});
  CHECK(signature(j_tilde_block(7)) == Inertia{0, 7, 0});
  CHECK(signature(RationalMatrix::zero(4)) == Inertia{0, 0, 4});
  CHECK(signature(RationalMatrix::zero(0)) == Inertia{0, 0, 0});
  // hyperbolic plane: zero diagonal, needs the off-diagonal pivot
  CHECK(signature(RationalMatrix::from_ints({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(signature(RationalMatrix::from_ints({{-2, -1}, {-1, 0}})) == Inertia{1, 1, 0});
}

TEST_CASE("signature rejects asymmetric input") {
  auto m = RationalMatrix::from_ints({{1, 2}, {0, 1}});
  CHECK_THROWS_AS(signature(m), Error);
  try {
    signature(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("congruence diagonalization reproduces the matrix") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      RationalMatrix m = random_symmetric(n, rng);
      if (trial == 0)
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
      Congruence c = congruence_diagonalize(m);
      RationalMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = c.diagonal[i];
      CHECK(c.transform * m * c.transform.transpose() == d);
      CHECK(determinant(c.transform) != 0);
    }
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(2024);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      RationalMatrix m = random_symmetric(n, rng);
      RationalMatrix t = random_unimodular(n, rng);
      REQUIRE(abs(determinant(t)) == 1);
      CHECK(signature(t.transpose() * m * t) == signature(m));
    }
  }
}

namespace {

// lower triangular, entry (i, j) = j / i for i >= j (1-based)
RationalMatrix s_block(std::size_t n) {
  RationalMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) s(i, j) = make_rational(j + 1, i + 1);
  return s;
}

RationalMatrix d_block(std::size_t n) {
  RationalMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = make_rational(i + 2, i + 1);
  return d;
}

}  // namespace

TEST_CASE("S_n diagonalizes J_n by congruence") {
  for (std::size_t n = 1; n <= 12; ++n) {
    RationalMatrix s = s_block(n), d = d_block(n);
    CHECK(s * j_block(n) * s.transpose() == d);
    RationalMatrix minus_d = d;
    for (std::size_t i = 0; i < n; ++i) minus_d(i, i) = -d(i, i);
    CHECK(s * j_tilde_block(n) * s.transpose() == minus_d);

    // so J_n = L D_n L^T with L = S_n^{-1}, unit lower bidiagonal
    RationalMatrix l = inverse(s);
    CHECK(l * d * l.transpose() == j_block(n));
    for (std::size_t i = 1; i < n; ++i) CHECK(l(i, i - 1) == make_rational(-static_cast<std::int64_t>(i), i + 1));
  }
}

TEST_CASE("S_n D_n S_n^T itself is not J_n beyond n = 1") {
  CHECK(s_block(1) * d_block(1) * s_block(1).transpose() == j_block(1));
  for (std::size_t n = 2; n <= 12; ++n)
    CHECK_FALSE(s_block(n) * d_block(n) * s_block(n).transpose() == j_block(n));
}

TEST_CASE("congruence diagonalization of J_n lands on D_n") {
  for (std::size_t n = 1; n <= 12; ++n) {
    Congruence c = congruence_diagonalize(j_block(n));
    for (std::size_t i = 0; i < n; ++i) CHECK(c.diagonal[i] == make_rational(i + 2, i + 1));
    CHECK(c.transform == s_block(n));
  }
}

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix::from_ints({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank(RationalMatrix::from_ints({{1, 0}, {0, 1}, {1, 1}})) == 2);
}

TEST_CASE("quadratic form against the inverse") {
  auto qi = RationalMatrix::from_ints({{-2, -1}, {-1, 0}});
  CHECK(quadratic_form_inverse(qi, to_rational({0, 2})) == 8);
  CHECK(quadratic_form_inverse(j_block(4), to_rational({0, 0, 0, 0})) == 0);

  // Q_II at q = 3
  auto qii = RationalMatrix::from_ints({{2, -1, 0}, {-1, 2, 1}, {0, 1, 1}});
  CHECK(quadratic_form_inverse(qii, to_rational({0, 0, 3})) == 27);

  CHECK_THROWS_AS(quadratic_form_inverse(RationalMatrix::zero(2), to_rational({1, 1})), Error);
  try {
    solve(RationalMatrix::from_ints({{1, 2}, {2, 4}}), to_rational({1, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_matrix);
  }
}

TEST_CASE("det times quadratic form is integral for integer input") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix m = random_symmetric(5, rng);
    BigRational det = determinant(m);
    if (det == 0) continue;
    RationalVector w = to_rational({1, -2, 0, 3, 1});
    CHECK(is_integer(quadratic_form_inverse(m, w) * det));
  }
}

TEST_CASE("inverse") {
  auto m = RationalMatrix::from_ints({{2, 1}, {1, 1}});
  CHECK(inverse(m) * m == RationalMatrix::identity(2));
  CHECK(inverse(j_block(6)) * j_block(6) == RationalMatrix::identity(6));
}

TEST_CASE("grid output") {
  auto m = RationalMatrix::from_ints({{-2, 1}, {1, 10}});
  CHECK(m.grid() == "-2  1\n 1 10\n");
}
