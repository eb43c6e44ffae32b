#include "otreal/otreal.h"

#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "otreal/d3.hpp"
#include "otreal/error.hpp"
#include "otreal/search.hpp"

using json = nlohmann::ordered_json;
using namespace otreal;

struct otr_context {
  std::string last_error;
  unsigned workers = 1;
};

struct otr_result {
  std::string text;
  bool passed = true;
};

namespace {

otr_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return OTR_ERR_INVALID_ARGUMENT;
    case ErrorCode::parameter_domain: return OTR_ERR_PARAMETER_DOMAIN;
    case ErrorCode::unsupported_family: return OTR_ERR_UNSUPPORTED_FAMILY;
    case ErrorCode::singular_matrix: return OTR_ERR_SINGULAR_MATRIX;
    case ErrorCode::not_fibered: return OTR_ERR_NOT_FIBERED;
    case ErrorCode::internal_consistency: return OTR_ERR_INTERNAL;
    case ErrorCode::monotonicity: return OTR_ERR_MONOTONICITY;
    case ErrorCode::invalid_move: return OTR_ERR_INVALID_MOVE;
  }
  return OTR_ERR_UNKNOWN;
}

// a required pointer argument was null
struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class Fn>
otr_status guarded(otr_context* ctx, Fn&& fn) {
  if (!ctx) return OTR_ERR_NULL;
  ctx->last_error.clear();
  try {
    fn();
    return OTR_OK;
  } catch (const NullArgument& e) {
    ctx->last_error = e.what();
    return OTR_ERR_NULL;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return OTR_ERR_UNKNOWN;
  }
}

FamilyId family_arg(const char* name) {
  if (!name) throw NullArgument("family name is null");
  auto f = parse_family(name);
  if (!f) throw Error(ErrorCode::invalid_argument, std::string("unknown family '") + name + "'");
  return *f;
}

FamilyParams params_arg(const otr_params* p) {
  if (!p) throw NullArgument("params is null");
  FamilyParams out;
  const std::int64_t values[6] = {p->p, p->q, p->r, p->u, p->v, p->w};
  for (std::size_t i = 0; i < 6; ++i)
    if (p->present & (1u << i)) out.set(kAllSlots[i], values[i]);
  return out;
}

void require_out(otr_result** out) {
  if (!out) throw NullArgument("output pointer is null");
  *out = nullptr;
}

void emit(otr_result** out, const json& j, bool passed = true) {
  *out = new otr_result{j.dump(2), passed};
}

json params_json(const FamilyParams& params) {
  json j = json::object();
  for (Slot s : kAllSlots)
    if (auto v = params.get(s)) j[std::string(1, slot_name(s))] = *v;
  return j;
}

json witness_json(const Witness& w) {
  return {{"family", std::string(family_name(w.family))}, {"params", params_json(w.params)}};
}

json ints_json(const std::vector<std::int64_t>& v) { return json(v); }

}  // namespace

extern "C" {

const char* otr_version(void) { return "1.0.0"; }

const char* otr_status_name(otr_status status) {
  switch (status) {
    case OTR_OK: return "ok";
    case OTR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OTR_ERR_PARAMETER_DOMAIN: return "parameter domain";
    case OTR_ERR_UNSUPPORTED_FAMILY: return "unsupported family";
    case OTR_ERR_SINGULAR_MATRIX: return "singular matrix";
    case OTR_ERR_NOT_FIBERED: return "not fibered";
    case OTR_ERR_INTERNAL: return "internal consistency";
    case OTR_ERR_MONOTONICITY: return "monotonicity";
    case OTR_ERR_INVALID_MOVE: return "invalid move";
    case OTR_ERR_NULL: return "null handle";
    case OTR_ERR_UNKNOWN: break;
  }
  return "unknown error";
}

otr_context* otr_context_new(void) {
  try {
    return new otr_context;
  } catch (...) {
    return nullptr;
  }
}

void otr_context_free(otr_context* ctx) { delete ctx; }

const char* otr_last_error(const otr_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void otr_set_workers(otr_context* ctx, unsigned workers) {
  if (ctx) ctx->workers = workers ? workers : 1;
}

const char* otr_result_json(const otr_result* res) { return res ? res->text.c_str() : ""; }
int otr_result_passed(const otr_result* res) { return res && res->passed ? 1 : 0; }
void otr_result_free(otr_result* res) { delete res; }

otr_status otr_compute(otr_context* ctx, const char* family, const otr_params* params, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    FamilyId f = family_arg(family);
    FamilyParams p = params_arg(params);
    D3Value closed = d3_closed_form(f, p);
    D3Breakdown m = d3_from_matrix(f, p);
    if (closed != m.value)
      throw Error(ErrorCode::internal_consistency,
                  "closed form d=" + std::to_string(closed.d) + " but matrix d=" + std::to_string(m.value.d));
    json j;
    j["family"] = std::string(family_name(f));
    j["params"] = params_json(p);
    j["d"] = m.value.d;
    j["d3_numerator"] = m.value.d3_numerator();
    j["d3_denominator"] = D3Value::d3_denominator();
    j["chi"] = m.chi;
    j["sigma"] = m.sigma;
    j["det"] = m.det.get_str();
    j["c2"] = m.c2.get_str();
    j["k"] = m.k;
    j["monodromy_word"] = m.word.to_string();
    j["page_punctures"] = m.word.page_punctures;
    emit(out, j);
  });
}

otr_status otr_compute_values(otr_context* ctx, const char* family, const otr_params* params, int64_t* d_out) {
  return guarded(ctx, [&] {
    if (!d_out) throw NullArgument("output pointer is null");
    *d_out = d3_closed_form(family_arg(family), params_arg(params)).d;
  });
}

otr_status otr_matrix(otr_context* ctx, const char* family, const otr_params* params, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    FamilyId f = family_arg(family);
    FamilyParams p = params_arg(params);
    HandleData h = handle_data(f, p);
    FormInvariants inv = form_invariants(h.q);
    json j;
    j["family"] = std::string(family_name(f));
    j["params"] = params_json(p);
    j["dimension"] = h.q.rows();
    j["rows"] = h.q.to_ints();
    j["w"] = ints_json(h.w);
    j["det"] = inv.det.get_str();
    j["sigma"] = inv.sigma;
    j["c2"] = c_squared(f, p).get_str();
    j["grid"] = h.q.grid();
    emit(out, j);
  });
}

otr_status otr_diagram_json(otr_context* ctx, const char* family, const otr_params* params, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    FamilyId f = family_arg(family);
    FamilyParams p = params_arg(params);
    SpliceDiagram d = build_family_diagram(f, p);
    json j;
    j["family"] = std::string(family_name(f));
    j["params"] = params_json(p);
    j["diagram"] = json::parse(diagram_to_json(d));
    json degrees = json::array();
    for (std::size_t v = 0; v < d.node_count(); ++v) degrees.push_back(fiber_degree(d, v));
    j["fiber_degrees"] = degrees;
    json twists = json::array();
    for (std::size_t i = 0; i < d.leaves().size(); ++i)
      twists.push_back({{"label", d.leaves()[i].label}, {"twist", boundary_twist(d, i).get_str()}});
    j["boundary_twists"] = twists;
    json taus = json::array();
    for (std::size_t e = 0; e < d.edges().size(); ++e)
      taus.push_back({{"label", d.edges()[e].label}, {"tau", separating_torus_twist(d, e).get_str()}});
    j["separating_twists"] = taus;
    MonodromyWord word = monodromy_word(f, p);
    j["monodromy_word"] = word.to_string();
    j["page_punctures"] = word.page_punctures;
    try {
      j["real_algebraic"] = real_algebraic_representative(f, p);
      j["eta_order"] = eta_root_order(f, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::unsupported_family) throw;
    }
    emit(out, j);
  });
}

otr_status otr_search(otr_context* ctx, int64_t d_max, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    SearchOptions opts;
    opts.workers = ctx->workers;
    RealizationTable t = enumerate_realizations(d_max, opts);
    json j;
    j["d_max"] = t.d_max;
    json entries = json::array();
    for (const auto& [d, list] : t.entries) {
      json ws = json::array();
      for (const auto& w : list) ws.push_back(witness_json(w));
      entries.push_back({{"d", d}, {"witnesses", ws}});
    }
    j["entries"] = entries;
    std::vector<std::int64_t> missing;
    for (std::int64_t d = 1; d <= d_max; ++d)
      if (!t.realized(d)) missing.push_back(d);
    j["unrealized"] = missing;
    json cert = json::array();
    for (const auto& b : t.certificate) {
      json maxes = json::object();
      for (Slot s : family_slots(b.family)) maxes[std::string(1, slot_name(s))] = b.max_value[static_cast<std::size_t>(s)];
      cert.push_back({{"family", std::string(family_name(b.family))},
                      {"witnesses", b.tuples},
                      {"max_values", maxes},
                      {"frontier_checks", b.frontier_checks},
                      {"note", b.note}});
    }
    j["certificate"] = cert;
    emit(out, j);
  });
}

otr_status otr_verify_exceptions(otr_context* ctx, int64_t d_max, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    SearchOptions opts;
    opts.workers = ctx->workers;
    std::vector<std::int64_t> missing = verify_exceptions(d_max, opts);
    std::vector<std::int64_t> expected;
    for (auto e : kKnownExceptions)
      if (e <= d_max) expected.push_back(e);
    bool passed = missing == expected;
    json j;
    j["check"] = "exceptions";
    j["d_max"] = d_max;
    j["passed"] = passed;
    j["unrealized"] = missing;
    j["expected"] = expected;
    emit(out, j, passed);
  });
}

otr_status otr_verify_moves(otr_context* ctx, int64_t grid_bound, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    MoveReport r = verify_move_increments(grid_bound);
    json j;
    j["check"] = "moves";
    j["grid_bound"] = r.grid_bound;
    j["passed"] = r.ok();
    j["states_checked"] = r.states_checked;
    j["quoted_checked"] = r.quoted_checked;
    j["initial_checked"] = r.initial_checked;
    j["scripted_checked"] = r.scripted_checked;
    j["failures"] = r.failures;
    emit(out, j, r.ok());
  });
}

otr_status otr_verify_iii_coverage(otr_context* ctx, int64_t d_lo, int64_t d_hi, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    SearchOptions opts;
    opts.workers = ctx->workers;
    CoverageReport r = verify_iii_coverage(d_lo, d_hi, opts);
    std::vector<std::int64_t> expected;
    if (d_lo <= 461 && 461 <= d_hi) expected.push_back(461);
    bool passed = r.missing == expected;
    for (auto d : r.missing) passed = passed && r.missing_elsewhere.count(d) != 0;
    json j;
    j["check"] = "iii_coverage";
    j["d_lo"] = d_lo;
    j["d_hi"] = d_hi;
    j["passed"] = passed;
    j["missing"] = r.missing;
    json elsewhere = json::array();
    for (const auto& [d, w] : r.missing_elsewhere) {
      json e = witness_json(w);
      e["d"] = d;
      elsewhere.push_back(e);
    }
    j["missing_realized_by"] = elsewhere;
    j["d431_iii_witness"] = r.witness_431 ? witness_json(*r.witness_431) : json(nullptr);
    emit(out, j, passed);
  });
}

otr_status otr_verify_table1(otr_context* ctx, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    SearchOptions opts;
    opts.workers = ctx->workers;
    Table1Report r = reproduce_table1(opts);
    json j;
    j["check"] = "table1";
    j["passed"] = r.ok();
    j["listed_checked"] = r.listed_checked;
    json listed = json::array();
    for (const auto& [f, d] : r.listed_missing) listed.push_back({{"family", std::string(family_name(f))}, {"d", d}});
    j["listed_missing"] = listed;
    json sporadic = json::array();
    for (const auto& s : sporadic_states())
      sporadic.push_back({{"state", s.state.to_string()}, {"quoted_d", s.quoted_d}, {"d", iii_d(s.state)}});
    j["sporadic_states"] = sporadic;
    j["other_cases_max"] = r.other_cases_max;
    j["other_cases_missing"] = r.other_cases_missing;
    emit(out, j, r.ok());
  });
}

otr_status otr_cross_validate(otr_context* ctx, int64_t weight_bound, int64_t count_bound, otr_result** out) {
  return guarded(ctx, [&] {
    require_out(out);
    CrossValidationReport r = cross_validate(weight_bound, count_bound, ctx->workers);
    json j;
    j["check"] = "cross_validate";
    j["weight_bound"] = r.weight_bound;
    j["count_bound"] = r.count_bound;
    j["passed"] = r.ok();
    j["tuples_checked"] = r.tuples_checked;
    json mism = json::array();
    for (const auto& m : r.mismatches)
      mism.push_back({{"family", std::string(family_name(m.family))},
                      {"params", params_json(m.params)},
                      {"quantity", m.what},
                      {"expected", m.expected},
                      {"actual", m.actual}});
    j["mismatches"] = mism;
    json table = json::array();
    for (const auto& t : r.table_discrepancies)
      table.push_back({{"family", std::string(family_name(t.family))},
                       {"tuples", t.tuples},
                       {"det_differs", t.det_differs},
                       {"sigma_differs", t.sigma_differs},
                       {"c2_differs", t.c2_differs},
                       {"example", params_json(t.example)}});
    j["printed_table_discrepancies"] = table;
    emit(out, j, r.ok());
  });
}

}  // extern "C"
