#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otreal/family.hpp"
#include "otreal/linalg.hpp"

namespace otreal {

/// Intersection form of the 4-manifold built from the family's open book, in
/// the block basis: J / J~ chains first, then the 1-3 extra classes whose
/// Chern evaluations are nonzero.
RationalMatrix intersection_matrix(FamilyId family, const FamilyParams& params);

/// Evaluation of PD(c(W)) on the basis above; zero except the last 1-3 slots.
std::vector<std::int64_t> chern_vector(FamilyId family, const FamilyParams& params);

std::int64_t euler_characteristic(FamilyId family, const FamilyParams& params);

/// Number of +1-framed 2-handles (left-handed twists in the monodromy).
std::int64_t handle_k(FamilyId family, const FamilyParams& params);

/// Cellular boundary C2 -> C1 for family I. Rows X, Y, Z1..Z(2u-1); columns
/// a1..ap, b1..b(p-1), c1..cu, d1..du.
RationalMatrix chain_boundary_matrix(FamilyId family, const FamilyParams& params);

struct FormInvariants {
  BigRational det;
  std::int64_t sigma = 0;
};
FormInvariants form_invariants(const RationalMatrix& q);

/// w^T Q^{-1} w from the matrix; must be an integer.
BigInteger c_squared(FamilyId family, const FamilyParams& params);

struct HandleData {
  FamilyId family{};
  FamilyParams params;
  std::int64_t chi = 0;
  std::int64_t k = 0;
  RationalMatrix q;
  std::vector<std::int64_t> w;
};
HandleData handle_data(FamilyId family, const FamilyParams& params);

struct FormClosedForm {
  BigInteger det;
  std::int64_t sigma = 0;
  BigInteger c2;
};

/// det, sigma, c^2 as derived family by family.
FormClosedForm expected_form(FamilyId family, const FamilyParams& params);

/// The summary table's row for the family, verbatim. Differs from
/// expected_form for I-I-I (det exponent) and III-I (whole row).
FormClosedForm printed_table_row(FamilyId family, const FamilyParams& params);

}  // namespace otreal
