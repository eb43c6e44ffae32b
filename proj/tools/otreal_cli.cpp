// Command line front end. Talks to the library only through otreal.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "otreal/otreal.h"

using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kRuntime = 4 };

struct ContextDeleter {
  void operator()(otr_context* c) const { otr_context_free(c); }
};
struct ResultDeleter {
  void operator()(otr_result* r) const { otr_result_free(r); }
};
using Context = std::unique_ptr<otr_context, ContextDeleter>;
using Result = std::unique_ptr<otr_result, ResultDeleter>;

struct FamilyArgs {
  std::string family;
  std::optional<int64_t> p, q, r, u, v, w;

  otr_params to_c() const {
    otr_params out{};
    auto put = [&](const std::optional<int64_t>& x, int64_t& slot, uint32_t bit) {
      if (x) {
        slot = *x;
        out.present |= bit;
      }
    };
    put(p, out.p, OTR_P);
    put(q, out.q, OTR_Q);
    put(r, out.r, OTR_R);
    put(u, out.u, OTR_U);
    put(v, out.v, OTR_V);
    put(w, out.w, OTR_W);
    return out;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("-f,--family", a.family, "I, II, III, I-I, I-I-I, II-I, III-I, II-III")->required();
  cmd->add_option("-p", a.p, "node weight p");
  cmd->add_option("-q", a.q, "node weight q");
  cmd->add_option("-r", a.r, "node weight r");
  cmd->add_option("-u", a.u, "count u");
  cmd->add_option("-v", a.v, "count v");
  cmd->add_option("-w", a.w, "count w");
}

int fail(otr_context* ctx, otr_status st) {
  std::cerr << "error: " << otr_last_error(ctx) << " (" << otr_status_name(st) << ")\n";
  switch (st) {
    case OTR_ERR_PARAMETER_DOMAIN: return kDomain;
    case OTR_ERR_INVALID_ARGUMENT: return kUsage;
    default: return kRuntime;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string params_text(const json& params, const char* sep) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += sep;
    s += k + "=" + std::to_string(v.get<int64_t>());
  }
  return s;
}

void render_search(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    os << "d,witness_count,family,params\n";
    for (const auto& e : j["entries"]) {
      const auto& w = e["witnesses"][0];
      os << e["d"].get<int64_t>() << ',' << e["witnesses"].size() << ',' << w["family"].get<std::string>()
         << ',' << params_text(w["params"], ";") << '\n';
    }
    return;
  }
  if (format == "md") {
    os << "| d | witnesses | minimal witness |\n|---:|---:|---|\n";
    for (const auto& e : j["entries"]) {
      const auto& w = e["witnesses"][0];
      os << "| " << e["d"].get<int64_t>() << " | " << e["witnesses"].size() << " | "
         << w["family"].get<std::string>() << " (" << params_text(w["params"], ", ") << ") |\n";
    }
    os << "\nUnrealized: " << j["unrealized"].dump() << '\n';
    return;
  }
  for (const auto& e : j["entries"]) {
    const auto& w = e["witnesses"][0];
    os << e["d"].get<int64_t>() << ": " << w["family"].get<std::string>() << " ("
       << params_text(w["params"], ", ") << ")";
    if (e["witnesses"].size() > 1) os << " +" << e["witnesses"].size() - 1;
    os << '\n';
  }
  os << "unrealized: " << j["unrealized"].dump() << '\n';
}

void render_compute(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << '\n';
    return;
  }
  os << "family " << j["family"].get<std::string>() << " (" << params_text(j["params"], ", ") << ")\n"
     << "d      " << j["d"] << "  (d3 = " << j["d3_numerator"] << "/" << j["d3_denominator"] << ")\n"
     << "chi    " << j["chi"] << "\nsigma  " << j["sigma"] << "\ndet Q  " << j["det"].get<std::string>()
     << "\nc^2    " << j["c2"].get<std::string>() << "\nk      " << j["k"] << "\nword   "
     << j["monodromy_word"].get<std::string>() << "\npage punctures " << j["page_punctures"] << '\n';
}

void render_matrix(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << '\n';
    return;
  }
  os << j["grid"].get<std::string>() << "w      " << j["w"].dump() << "\ndet    " << j["det"].get<std::string>()
     << "\nsigma  " << j["sigma"] << "\nc^2    " << j["c2"].get<std::string>() << '\n';
}

unsigned env_workers() {
  const char* s = std::getenv("OTREAL_WORKERS");
  if (!s) return 1;
  try {
    long n = std::stol(s);
    return n > 0 ? static_cast<unsigned>(n) : 1;
  } catch (...) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d3 invariants of real algebraic overtwisted structures on S^3"};
  app.require_subcommand(1);

  FamilyArgs compute_args, matrix_args, diagram_args;
  std::string compute_format = "json", matrix_format = "plain";

  auto* compute = app.add_subcommand("compute", "d, d3, chi, sigma, det, c^2, k for one tuple");
  add_family_options(compute, compute_args);
  compute->add_option("--format", compute_format)->check(CLI::IsMember({"json", "plain"}));

  auto* matrix = app.add_subcommand("matrix", "intersection matrix, Chern vector, det, sigma");
  add_family_options(matrix, matrix_args);
  matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"json", "plain"}));

  auto* diagram = app.add_subcommand("diagram", "splice diagram, twists and monodromy as JSON");
  add_family_options(diagram, diagram_args);

  int64_t search_max = 0;
  std::string search_format = "json", search_out;
  auto* search = app.add_subcommand("search", "realized d values up to --max-d");
  search->add_option("--max-d", search_max)->required()->check(CLI::PositiveNumber);
  search->add_option("--format", search_format)->check(CLI::IsMember({"json", "csv", "md", "plain"}));
  search->add_option("--out", search_out, "write to FILE instead of stdout");

  bool v_exceptions = false, v_moves = false, v_table1 = false;
  int64_t v_max_d = 500, v_grid = 40, v_cross = 0, v_count_bound = 4;
  std::vector<int64_t> v_cov;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run the realization checks; exit 1 on any failure");
  verify->add_flag("--exceptions", v_exceptions, "unrealized d up to --max-d are exactly the nine exceptions");
  verify->add_option("--max-d", v_max_d, "bound for --exceptions")->check(CLI::PositiveNumber);
  verify->add_flag("--moves", v_moves, "move increments, start polynomials, scripted operations");
  verify->add_option("--grid", v_grid, "r bound for --moves")->check(CLI::Range(int64_t{10}, int64_t{200}));
  verify->add_option("--iii-coverage", v_cov, "LO HI: I-I-I alone realizes [LO, HI] except 461")->expected(2);
  verify->add_flag("--table1", v_table1, "every table entry is realized in its family");
  verify->add_option("--cross-validate", v_cross, "closed forms vs matrices for weights <= N")
      ->check(CLI::Range(int64_t{2}, int64_t{40}));
  verify->add_option("--count-bound", v_count_bound, "u,v,w bound for --cross-validate")
      ->check(CLI::Range(int64_t{1}, int64_t{20}));
  verify->add_option("--out", verify_out, "write the JSON report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Context ctx(otr_context_new());
  if (!ctx) return kRuntime;
  otr_set_workers(ctx.get(), env_workers());

  try {
    if (compute->parsed() || matrix->parsed() || diagram->parsed()) {
      const FamilyArgs& a = compute->parsed() ? compute_args : matrix->parsed() ? matrix_args : diagram_args;
      otr_params p = a.to_c();
      otr_result* raw = nullptr;
      otr_status st = compute->parsed()  ? otr_compute(ctx.get(), a.family.c_str(), &p, &raw)
                      : matrix->parsed() ? otr_matrix(ctx.get(), a.family.c_str(), &p, &raw)
                                         : otr_diagram_json(ctx.get(), a.family.c_str(), &p, &raw);
      if (st != OTR_OK) return fail(ctx.get(), st);
      Result res(raw);
      json j = json::parse(otr_result_json(res.get()));
      if (compute->parsed()) render_compute(j, compute_format, std::cout);
      else if (matrix->parsed()) render_matrix(j, matrix_format, std::cout);
      else std::cout << j.dump(2) << '\n';
      return kOk;
    }

    if (search->parsed()) {
      otr_result* raw = nullptr;
      otr_status st = otr_search(ctx.get(), search_max, &raw);
      if (st != OTR_OK) return fail(ctx.get(), st);
      Result res(raw);
      Output out(search_out);
      render_search(json::parse(otr_result_json(res.get())), search_format, out.stream());
      return kOk;
    }

    // verify
    if (!v_exceptions && !v_moves && !v_table1 && v_cov.empty() && v_cross == 0) {
      std::cerr << "verify: choose at least one of --exceptions --moves --iii-coverage --table1 --cross-validate\n";
      return kUsage;
    }
    json reports = json::array();
    bool all_passed = true;
    auto run = [&](otr_status st, otr_result* raw) -> bool {
      if (st != OTR_OK) return false;
      Result res(raw);
      json j = json::parse(otr_result_json(res.get()));
      bool passed = otr_result_passed(res.get()) != 0;
      all_passed = all_passed && passed;
      std::cerr << (passed ? "PASS " : "FAIL ") << j["check"].get<std::string>() << '\n';
      reports.push_back(std::move(j));
      return true;
    };
    otr_result* raw = nullptr;
    if (v_exceptions) {
      otr_status st = otr_verify_exceptions(ctx.get(), v_max_d, &raw);
      if (!run(st, raw)) return fail(ctx.get(), st);
    }
    if (v_moves) {
      otr_status st = otr_verify_moves(ctx.get(), v_grid, &raw);
      if (!run(st, raw)) return fail(ctx.get(), st);
    }
    if (!v_cov.empty()) {
      otr_status st = otr_verify_iii_coverage(ctx.get(), v_cov[0], v_cov[1], &raw);
      if (!run(st, raw)) return fail(ctx.get(), st);
    }
    if (v_table1) {
      otr_status st = otr_verify_table1(ctx.get(), &raw);
      if (!run(st, raw)) return fail(ctx.get(), st);
    }
    if (v_cross) {
      otr_status st = otr_cross_validate(ctx.get(), v_cross, v_count_bound, &raw);
      if (!run(st, raw)) return fail(ctx.get(), st);
    }
    Output out(verify_out);
    out.stream() << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return all_passed ? kOk : kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
}
