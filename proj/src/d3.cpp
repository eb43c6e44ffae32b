#include "otreal/d3.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "otreal/error.hpp"

namespace otreal {

namespace {

struct Slots {
  std::int64_t p = 0, q = 0, r = 0, u = 0, v = 0, w = 0;
};

Slots unpack(const FamilyParams& params) {
  auto g = [&](Slot s) { return params.get(s).value_or(0); };
  return {g(Slot::p), g(Slot::q), g(Slot::r), g(Slot::u), g(Slot::v), g(Slot::w)};
}

template <class T>
T closed_form(FamilyId family, const T& p, const T& q, const T& r, const T& u, const T& v,
              const T& w) {
  switch (family) {
    case FamilyId::I: return u * u * p * (p - 1) + u;
    case FamilyId::II: return u * (u - 1) * q + u;
    case FamilyId::III: return 6 * u * (u + 1) + u + 2;
    case FamilyId::I_I:
      return u * u * p * (p - 1) + v * v * q * (q - 1) + 2 * u * v * q * (p - 1) + u + v;
    case FamilyId::I_I_I:
      return u * u * p * (p - 1) + v * v * q * (q - 1) + w * w * r * (r - 1) +
             2 * u * v * q * (p - 1) + 2 * u * w * r * (p - 1) + 2 * v * w * r * (q - 1) + u + v + w;
    case FamilyId::II_I:
      return u * u * p * (p - 1) + 4 * u * v * (p - 1) - 2 * u * (p - 1) + 2 * v * v - v + u;
    case FamilyId::III_I:
      return u * u * p * (p - 1) + 6 * v * v + 2 * p * u * (2 * v + 1) + 6 * v + u + v + 2;
    case FamilyId::II_III:
      return 2 * u * u + 6 * v * v + 8 * u * v + 3 * u + 3 * v;
  }
  return T(0);
}

BigInteger big(std::int64_t x) { return BigInteger(std::to_string(x)); }

}  // namespace

D3Value d3_closed_form(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  Slots s = unpack(params);
  BigInteger d = closed_form<BigInteger>(family, big(s.p), big(s.q), big(s.r), big(s.u), big(s.v),
                                         big(s.w));
  return {to_int64(d)};
}

std::int64_t closed_form_d_unchecked(FamilyId family, const FamilyParams& params) noexcept {
  Slots s = unpack(params);
  return closed_form<std::int64_t>(family, s.p, s.q, s.r, s.u, s.v, s.w);
}

D3Breakdown d3_from_matrix(FamilyId family, const FamilyParams& params) {
  D3Breakdown out;
  HandleData h = handle_data(family, params);
  out.word = monodromy_word(family, params);
  out.k = negative_twist_count(out.word);
  out.chi = h.chi;
  FormInvariants inv = form_invariants(h.q);
  out.det = inv.det;
  out.sigma = inv.sigma;
  out.c2 = c_squared(family, params);
  // 4d = c^2 - 2 chi - 3 sigma + 4k + 2
  BigInteger four_d = out.c2 - 2 * out.chi - 3 * out.sigma + 4 * out.k + 2;
  if (four_d % 4 != 0)
    throw Error(ErrorCode::internal_consistency,
                "d3 is not a half-integer for " + std::string(family_name(family)) + " " +
                    params.to_string() + " (4d = " + four_d.get_str() + ")");
  out.value.d = to_int64(BigInteger(four_d / 4));
  return out;
}

namespace {

struct FamilyResult {
  std::size_t tuples = 0;
  std::vector<ClosedFormMismatch> mismatches;
  TableRowDiscrepancy table;
};

FamilyResult validate_family(FamilyId family, std::int64_t weight_bound, std::int64_t count_bound) {
  FamilyResult res;
  res.table.family = family;
  bool example_set = false;
  auto add = [&](const FamilyParams& params, const char* what, const std::string& expected,
                 const std::string& actual) {
    res.mismatches.push_back({family, params, what, expected, actual});
  };
  for (const auto& params : enumerate_domain(family, weight_bound, count_bound)) {
    ++res.tuples;
    D3Value closed = d3_closed_form(family, params);
    D3Breakdown m = d3_from_matrix(family, params);
    if (closed != m.value)
      add(params, "d", std::to_string(closed.d), std::to_string(m.value.d));

    FormClosedForm expect = expected_form(family, params);
    if (expect.det != m.det) add(params, "det", expect.det.get_str(), m.det.get_str());
    if (expect.sigma != m.sigma)
      add(params, "sigma", std::to_string(expect.sigma), std::to_string(m.sigma));
    if (expect.c2 != m.c2) add(params, "c2", expect.c2.get_str(), m.c2.get_str());

    std::int64_t k_table = handle_k(family, params);
    if (k_table != m.k) add(params, "k", std::to_string(k_table), std::to_string(m.k));
    auto dim = static_cast<std::int64_t>(intersection_matrix(family, params).rows());
    if (dim != m.chi - 1) add(params, "dim", std::to_string(m.chi - 1), std::to_string(dim));

    FormClosedForm printed = printed_table_row(family, params);
    bool det_diff = printed.det != m.det;
    bool sigma_diff = printed.sigma != m.sigma;
    bool c2_diff = printed.c2 != m.c2;
    res.table.det_differs += det_diff;
    res.table.sigma_differs += sigma_diff;
    res.table.c2_differs += c2_diff;
    if ((det_diff || sigma_diff || c2_diff) && !example_set) {
      res.table.example = params;
      example_set = true;
    }
  }
  res.table.tuples = res.tuples;
  return res;
}

}  // namespace

CrossValidationReport cross_validate(std::int64_t weight_bound, std::int64_t count_bound,
                                     unsigned workers) {
  if (weight_bound < 2 || count_bound < 1)
    throw Error(ErrorCode::invalid_argument, "cross validation needs weight bound >= 2 and count bound >= 1");
  workers = std::max(1u, workers);

  std::vector<FamilyResult> results(kAllFamilies.size());
  std::size_t next = 0;
  while (next < kAllFamilies.size()) {
    std::vector<std::future<FamilyResult>> batch;
    std::size_t first = next;
    for (unsigned t = 0; t < workers && next < kAllFamilies.size(); ++t, ++next)
      batch.push_back(std::async(std::launch::async, validate_family, kAllFamilies[next],
                                 weight_bound, count_bound));
    for (std::size_t i = 0; i < batch.size(); ++i) results[first + i] = batch[i].get();
  }

  CrossValidationReport report;
  report.weight_bound = weight_bound;
  report.count_bound = count_bound;
  for (auto& r : results) {
    report.tuples_checked += r.tuples;
    for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
    if (r.table.det_differs || r.table.sigma_differs || r.table.c2_differs)
      report.table_discrepancies.push_back(r.table);
  }
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(),
                   [](const ClosedFormMismatch& a, const ClosedFormMismatch& b) {
                     if (a.family != b.family) return a.family < b.family;
                     return a.params < b.params;
                   });
  return report;
}

std::vector<MonotonicityViolation> verify_monotonicity(FamilyId family, std::int64_t weight_bound,
                                                       std::int64_t count_bound) {
  std::vector<MonotonicityViolation> out;
  for (const auto& params : enumerate_domain(family, weight_bound, count_bound)) {
    const std::int64_t before = closed_form_d_unchecked(family, params);
    for (Slot s : family_slots(family)) {
      FamilyParams next = params;
      std::int64_t x = params.at(s) + 1;
      while (slot_value_excluded(family, s, x)) ++x;
      next.set(s, x);
      if (!in_domain(family, next)) continue;
      const std::int64_t after = closed_form_d_unchecked(family, next);
      if (after < before) out.push_back({family, params, s, before, after});
    }
  }
  return out;
}

}  // namespace otreal
