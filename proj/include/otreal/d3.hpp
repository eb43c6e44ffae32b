#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "otreal/family.hpp"
#include "otreal/forms.hpp"
#include "otreal/splice.hpp"

namespace otreal {

/// d = d3 + 1/2; d3 itself is (2d - 1) / 2.
struct D3Value {
  std::int64_t d = 0;

  std::int64_t d3_numerator() const { return 2 * d - 1; }
  static constexpr std::int64_t d3_denominator() { return 2; }
  friend auto operator<=>(const D3Value&, const D3Value&) = default;
};

D3Value d3_closed_form(FamilyId family, const FamilyParams& params);

/// Closed form without domain validation or overflow checks. Only for the
/// search's inner loops where parameters are already in range.
std::int64_t closed_form_d_unchecked(FamilyId family, const FamilyParams& params) noexcept;

struct D3Breakdown {
  D3Value value;
  BigInteger c2;
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  BigRational det;
  std::int64_t k = 0;
  MonodromyWord word;
};

/// d from c^2, chi, sigma of the intersection form and k of the monodromy
/// word. Throws internal_consistency if 4d is not divisible by 4.
D3Breakdown d3_from_matrix(FamilyId family, const FamilyParams& params);

struct ClosedFormMismatch {
  FamilyId family{};
  FamilyParams params;
  std::string what;  // "d", "det", "sigma", "c2", "k", "dim"
  std::string expected;
  std::string actual;
};

/// Per family: how many tuples disagree with the tabulated summary row.
struct TableRowDiscrepancy {
  FamilyId family{};
  std::size_t tuples = 0;
  std::size_t det_differs = 0;
  std::size_t sigma_differs = 0;
  std::size_t c2_differs = 0;
  FamilyParams example;  // first disagreeing tuple
};

struct CrossValidationReport {
  std::int64_t weight_bound = 0;
  std::int64_t count_bound = 0;
  std::size_t tuples_checked = 0;
  std::vector<ClosedFormMismatch> mismatches;         // sorted by family, params
  std::vector<TableRowDiscrepancy> table_discrepancies;  // only rows that differ

  bool ok() const { return mismatches.empty(); }
};

/// All in-domain tuples with p,q,r <= weight_bound and u,v,w <= count_bound.
CrossValidationReport cross_validate(std::int64_t weight_bound, std::int64_t count_bound,
                                     unsigned workers = 1);

struct MonotonicityViolation {
  FamilyId family{};
  FamilyParams params;
  Slot slot{};
  std::int64_t before = 0;
  std::int64_t after = 0;
};

/// Checks d(x + e_slot) >= d(x) (next admissible slot value) over the grid.
std::vector<MonotonicityViolation> verify_monotonicity(FamilyId family, std::int64_t weight_bound,
                                                       std::int64_t count_bound);

}  // namespace otreal
