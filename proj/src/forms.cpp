#include "otreal/forms.hpp"

#include "otreal/error.hpp"

namespace otreal {

namespace {

struct Block {
  std::int64_t size;
  int sign;  // +1 for J, -1 for J~
};

enum class End { first, last };

struct BlockCoupling {
  std::size_t extra;
  std::size_t block;
  End end;
  std::int64_t value;
};

struct ExtraCoupling {
  std::size_t i, j;
  std::int64_t value;
};

// Chains of J / J~ blocks followed by extra rows. Couplings into an empty block
// are dropped; the extra-extra couplings carry the degenerate cases.
RationalMatrix assemble(const std::vector<Block>& blocks, const std::vector<std::int64_t>& extra_diag,
                        const std::vector<BlockCoupling>& couplings,
                        const std::vector<ExtraCoupling>& extra_couplings) {
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const auto& b : blocks) {
    offset.push_back(n);
    n += static_cast<std::size_t>(b.size);
  }
  const std::size_t base = n;
  n += extra_diag.size();
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto sz = static_cast<std::size_t>(blocks[k].size);
    for (std::size_t i = 0; i < sz; ++i) {
      m(offset[k] + i, offset[k] + i) = 2 * blocks[k].sign;
      if (i + 1 < sz)
        m(offset[k] + i, offset[k] + i + 1) = m(offset[k] + i + 1, offset[k] + i) = -blocks[k].sign;
    }
  }
  for (std::size_t e = 0; e < extra_diag.size(); ++e) m(base + e, base + e) = make_rational(extra_diag[e]);
  for (const auto& c : couplings) {
    const auto sz = static_cast<std::size_t>(blocks[c.block].size);
    if (sz == 0) continue;
    std::size_t idx = offset[c.block] + (c.end == End::first ? 0 : sz - 1);
    m(base + c.extra, idx) = m(idx, base + c.extra) = make_rational(c.value);
  }
  for (const auto& c : extra_couplings) {
    if (c.value == 0) continue;
    m(base + c.i, base + c.j) = m(base + c.j, base + c.i) = make_rational(c.value);
  }
  return m;
}

std::int64_t sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

RationalMatrix intersection_matrix(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  switch (family) {
    case FamilyId::I: {
      const auto p = params.p();
      return assemble({{p - 1, -1}, {p - 2, 1}}, {0},
                      {{0, 0, End::last, -1}, {0, 1, End::first, 1}}, {});
    }
    case FamilyId::II: {
      const auto q = params.q();
      return assemble({{q - 1, 1}}, {1}, {{0, 0, End::last, 1}}, {});
    }
    case FamilyId::III:
      return RationalMatrix::from_ints({{-2, 1, 0, 0}, {1, -2, 0, -1}, {0, 0, -2, -1}, {0, -1, -1, -1}});
    case FamilyId::I_I: {
      const auto p = params.p(), q = params.q();
      const std::int64_t a = q == p + 1 ? -1 : 0;
      return assemble({{p - 2, 1}, {q - p - 1, 1}, {q - 1, -1}}, {2, 0},
                      {{0, 0, End::last, 1},
                       {0, 1, End::first, 1},
                       {1, 1, End::last, 1},
                       {1, 2, End::first, -1}},
                      {{0, 1, a}});
    }
    case FamilyId::I_I_I: {
      const auto p = params.p(), q = params.q(), r = params.r();
      const std::int64_t a = q == p + 1 ? -1 : 0;
      const std::int64_t b = r == q + 1 ? -1 : 0;
      return assemble({{p - 2, 1}, {q - p - 1, 1}, {r - q - 1, 1}, {r - 1, -1}}, {2, 2, 0},
                      {{0, 0, End::last, 1},
                       {0, 1, End::first, 1},
                       {1, 1, End::last, 1},
                       {1, 2, End::first, 1},
                       {2, 2, End::last, 1},
                       {2, 3, End::first, -1}},
                      {{0, 1, a}, {1, 2, b}});
    }
    case FamilyId::II_I: {
      const auto p = params.p();
      const std::int64_t a = p == 3 ? 1 : 0;
      return assemble({{p - 2, 1}, {p - 3, -1}, {1, 1}}, {0, -1},
                      {{0, 0, End::last, 1},
                       {0, 1, End::first, -1},
                       {1, 1, End::last, -1},
                       {1, 2, End::first, 1}},
                      {{0, 1, a}});
    }
    case FamilyId::III_I: {
      const auto p = params.p();
      if (p == 2) {
        // single gamma twist of square -1 ties the two singular chains together
        return RationalMatrix::from_ints(
            {{-2, 0, -1, 0}, {0, -2, 0, -1}, {-1, 0, -2, 1}, {0, -1, 1, -1}});
      }
      const std::int64_t a = p == 4 ? -1 : 0;
      return assemble({{p - 1, -1}, {p - 4, 1}, {1, -1}}, {0, 1},
                      {{0, 0, End::last, -1},
                       {0, 1, End::first, 1},
                       {1, 1, End::last, 1},
                       {1, 2, End::first, -1}},
                      {{0, 1, a}});
    }
    case FamilyId::II_III:
      return RationalMatrix::from_ints({{2, 0, 1, 0}, {0, -2, 0, -1}, {1, 0, -1, 1}, {0, -1, 1, -1}});
  }
  throw Error(ErrorCode::internal_consistency, "unhandled family");
}

std::vector<std::int64_t> chern_vector(FamilyId family, const FamilyParams& params) {
  const std::size_t n = intersection_matrix(family, params).rows();
  std::vector<std::int64_t> tail;
  switch (family) {
    case FamilyId::I: tail = {2 * params.u()}; break;
    case FamilyId::II: tail = {2 * params.u() - 1}; break;
    case FamilyId::III: tail = {2 * params.u() + 1}; break;
    case FamilyId::I_I: tail = {-2 * params.u(), -2 * params.v()}; break;
    case FamilyId::I_I_I: tail = {-2 * params.u(), -2 * params.v(), -2 * params.w()}; break;
    case FamilyId::II_I: tail = {-2 * params.u(), -(2 * params.v() - 1)}; break;
    case FamilyId::III_I: tail = {2 * params.u(), 2 * params.v() + 1}; break;
    case FamilyId::II_III: tail = {2 * params.u() - 1, 2 * params.v() + 1}; break;
  }
  std::vector<std::int64_t> w(n - tail.size(), 0);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

std::int64_t euler_characteristic(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  switch (family) {
    case FamilyId::I: return 2 * params.p() - 1;
    case FamilyId::II: return params.q() + 1;
    case FamilyId::III: return 5;
    case FamilyId::I_I: return 2 * params.q() - 1;
    case FamilyId::I_I_I: return 2 * params.r() - 1;
    case FamilyId::II_I: return 2 * params.p() - 1;
    case FamilyId::III_I: return params.p() == 2 ? 5 : 2 * params.p() - 1;
    case FamilyId::II_III: return 5;
  }
  return 0;
}

std::int64_t handle_k(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  switch (family) {
    case FamilyId::I: return params.p() + params.u() - 1;
    case FamilyId::II: return params.q() + params.u();
    case FamilyId::III: return params.u() + 1;
    case FamilyId::I_I: return params.q() + params.u() + params.v() - 1;
    case FamilyId::I_I_I: return params.r() + params.u() + params.v() + params.w() - 1;
    case FamilyId::II_I: return params.p() + params.u() + params.v();
    case FamilyId::III_I:
      return params.p() == 2 ? params.u() + params.v() + 1 : params.p() + params.u() + params.v() - 2;
    case FamilyId::II_III: return params.u() + params.v() + 2;
  }
  return 0;
}

RationalMatrix chain_boundary_matrix(FamilyId family, const FamilyParams& params) {
  if (family != FamilyId::I)
    throw Error(ErrorCode::unsupported_family, "boundary map is only tabulated for family I");
  validate(family, params);
  const auto p = static_cast<std::size_t>(params.p());
  const auto u = static_cast<std::size_t>(params.u());
  const std::size_t X = 0, Y = 1;
  auto Z = [](std::size_t i) { return 1 + i; };  // Z_i, 1-based
  RationalMatrix d(2 * u + 1, 2 * p - 1 + 2 * u);
  std::size_t col = 0;
  for (std::size_t j = 0; j < p; ++j) d(X, col++) = 1;
  for (std::size_t j = 0; j + 1 < p; ++j) d(Y, col++) = 1;
  for (std::size_t i = 1; i <= u; ++i, ++col) {
    d(Z(i), col) = 1;
    d(i == 1 ? X : Z(i - 1), col) = -1;
  }
  for (std::size_t i = 1; i <= u; ++i, ++col) {
    if (i == u) {
      d(Y, col) = 1;
      d(Z(2 * u - 1), col) = -1;
    } else {
      d(Z(u + i), col) = 1;
      d(Z(u + i - 1), col) = -1;
    }
  }
  return d;
}

FormInvariants form_invariants(const RationalMatrix& q) {
  if (!q.symmetric()) throw Error(ErrorCode::invalid_argument, "intersection form must be symmetric");
  return {determinant(q), signature(q).sigma()};
}

BigInteger c_squared(FamilyId family, const FamilyParams& params) {
  BigRational c2 = quadratic_form_inverse(intersection_matrix(family, params),
                                          to_rational(chern_vector(family, params)));
  if (!is_integer(c2))
    throw Error(ErrorCode::internal_consistency,
                "c^2 is not an integer for " + std::string(family_name(family)) + " " + params.to_string());
  return c2.get_num();
}

HandleData handle_data(FamilyId family, const FamilyParams& params) {
  HandleData h;
  h.family = family;
  h.params = params;
  h.chi = euler_characteristic(family, params);
  h.k = handle_k(family, params);
  h.q = intersection_matrix(family, params);
  h.w = chern_vector(family, params);
  return h;
}

FormClosedForm expected_form(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  auto Z = [](std::int64_t x) { return BigInteger(std::to_string(x)); };
  FormClosedForm f;
  switch (family) {
    case FamilyId::I: {
      BigInteger p = Z(params.p()), u = Z(params.u());
      f = {Z(sign_pow(params.p() - 1)), 0, 4 * u * u * p * (p - 1)};
      break;
    }
    case FamilyId::II: {
      BigInteger q = Z(params.q()), u = Z(params.u());
      f = {1, params.q(), (2 * u - 1) * (2 * u - 1) * q};
      break;
    }
    case FamilyId::III: {
      BigInteger u = Z(params.u());
      f = {-1, -2, 6 * (2 * u + 1) * (2 * u + 1)};
      break;
    }
    case FamilyId::I_I: {
      BigInteger p = Z(params.p()), q = Z(params.q()), u = Z(params.u()), v = Z(params.v());
      f = {Z(sign_pow(params.q() - 1)), 0,
           4 * u * u * p * (p - 1) + 8 * u * v * q * (p - 1) + 4 * v * v * q * (q - 1)};
      break;
    }
    case FamilyId::I_I_I: {
      BigInteger p = Z(params.p()), q = Z(params.q()), r = Z(params.r());
      BigInteger u = Z(params.u()), v = Z(params.v()), w = Z(params.w());
      f = {Z(sign_pow(params.r() - 1)), 0,
           4 * u * u * p * (p - 1) + 4 * v * v * q * (q - 1) + 4 * w * w * r * (r - 1) +
               8 * u * v * q * (p - 1) + 8 * u * w * r * (p - 1) + 8 * v * w * r * (q - 1)};
      break;
    }
    case FamilyId::II_I: {
      BigInteger p = Z(params.p()), u = Z(params.u()), v = Z(params.v());
      f = {Z(sign_pow(params.p())), 2,
           4 * u * u * p * (p - 1) + 8 * v * v + 16 * u * v * (p - 1) - 8 * v - 8 * u * (p - 1) + 2};
      break;
    }
    case FamilyId::III_I: {
      BigInteger p = Z(params.p()), u = Z(params.u()), v = Z(params.v());
      f = {params.p() == 2 ? Z(-1) : Z(sign_pow(params.p())), -2,
           4 * u * u * p * (p - 1) + 24 * v * v + 8 * u * p * (2 * v + 1) + 24 * v + 6};
      break;
    }
    case FamilyId::II_III: {
      BigInteger u = Z(params.u()), v = Z(params.v());
      f = {1, 0, 8 * u * u + 24 * v * v + 32 * u * v + 8 * u + 8 * v};
      break;
    }
  }
  return f;
}

FormClosedForm printed_table_row(FamilyId family, const FamilyParams& params) {
  FormClosedForm f = expected_form(family, params);
  if (family == FamilyId::I_I_I) {
    f.det = sign_pow(params.q() - 1);
  } else if (family == FamilyId::III_I) {
    BigInteger u(std::to_string(params.u())), v(std::to_string(params.v()));
    f = {1, 0, 8 * u * u + 24 * v * v + 32 * u * v + 8 * u + 8 * v};
  }
  return f;
}

}  // namespace otreal
