#include "otreal/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "otreal/d3.hpp"
#include "otreal/error.hpp"

namespace otreal {

bool RealizationTable::realized_by(std::int64_t d, FamilyId family) const {
  return minimal_witness(d, family).has_value();
}

std::optional<Witness> RealizationTable::minimal_witness(std::int64_t d) const {
  auto it = entries.find(d);
  if (it == entries.end() || it->second.empty()) return std::nullopt;
  return it->second.front();
}

std::optional<Witness> RealizationTable::minimal_witness(std::int64_t d, FamilyId family) const {
  auto it = entries.find(d);
  if (it == entries.end()) return std::nullopt;
  for (const auto& w : it->second)
    if (w.family == family) return w;
  return std::nullopt;
}

std::size_t RealizationTable::witness_count() const {
  std::size_t n = 0;
  for (const auto& [d, list] : entries) n += list.size();
  return n;
}

namespace {

struct Task {
  FamilyId family{};
  std::int64_t leading = 0;
};

struct TaskResult {
  std::vector<Witness> witnesses;
  FamilyBounds bounds;
};

class FamilyScan {
 public:
  FamilyScan(FamilyId family, std::int64_t d_max)
      : family_(family), slots_(family_slots(family)), d_max_(d_max) {
    bounds_.family = family;
  }

  // Smallest d over all completions of the first depth+1 slots of `prefix`.
  std::int64_t min_completion(FamilyParams prefix, std::size_t depth) const {
    for (std::size_t k = depth + 1; k < slots_.size(); ++k) {
      std::int64_t lb = slot_lower_bound(family_, slots_[k], prefix);
      while (slot_value_excluded(family_, slots_[k], lb)) ++lb;
      prefix.set(slots_[k], lb);
    }
    return closed_form_d_unchecked(family_, prefix);
  }

  std::int64_t next_value(Slot s, std::int64_t x) const {
    ++x;
    while (slot_value_excluded(family_, s, x)) ++x;
    return x;
  }

  // Admissible values of the slot at `depth`, given the prefix. Stops at the
  // first value whose minimal completion exceeds d_max, after checking that
  // the next value does not come back down.
  std::vector<std::int64_t> slot_range(FamilyParams prefix, std::size_t depth) {
    const Slot s = slots_[depth];
    std::vector<std::int64_t> values;
    std::int64_t x = slot_lower_bound(family_, s, prefix);
    while (slot_value_excluded(family_, s, x)) ++x;
    for (;; x = next_value(s, x)) {
      if (x > d_max_) {
        ++bounds_.cap_hits[static_cast<std::size_t>(s)];
        break;
      }
      prefix.set(s, x);
      const std::int64_t m = min_completion(prefix, depth);
      if (m > d_max_) {
        FamilyParams after = prefix;
        after.set(s, next_value(s, x));
        const std::int64_t m_next = min_completion(after, depth);
        ++bounds_.frontier_checks;
        if (m_next < m) {
          std::ostringstream os;
          os << "pruning is not monotone for family " << family_name(family_) << " in "
             << slot_name(s) << " at " << prefix.to_string() << ": " << m << " -> " << m_next;
          throw Error(ErrorCode::monotonicity, os.str());
        }
        break;
      }
      values.push_back(x);
    }
    return values;
  }

  void scan(FamilyParams prefix, std::size_t depth, std::vector<Witness>& out) {
    for (std::int64_t x : slot_range(prefix, depth)) {
      prefix.set(slots_[depth], x);
      auto& mx = bounds_.max_value[static_cast<std::size_t>(slots_[depth])];
      mx = std::max(mx, x);
      if (depth + 1 == slots_.size()) {
        const std::int64_t d = closed_form_d_unchecked(family_, prefix);
        if (d <= d_max_) out.push_back({family_, prefix, d});
      } else {
        scan(prefix, depth + 1, out);
      }
    }
  }

  TaskResult run(std::int64_t leading) {
    TaskResult res;
    FamilyParams prefix;
    prefix.set(slots_[0], leading);
    bounds_.max_value[static_cast<std::size_t>(slots_[0])] = leading;
    if (slots_.size() == 1) {
      const std::int64_t d = closed_form_d_unchecked(family_, prefix);
      if (d <= d_max_) res.witnesses.push_back({family_, prefix, d});
    } else {
      scan(prefix, 1, res.witnesses);
    }
    res.bounds = bounds_;
    return res;
  }

  std::vector<std::int64_t> leading_values() { return slot_range(FamilyParams{}, 0); }
  const FamilyBounds& bounds() const { return bounds_; }

 private:
  FamilyId family_;
  std::span<const Slot> slots_;
  std::int64_t d_max_;
  FamilyBounds bounds_;
};

void merge_bounds(FamilyBounds& into, const FamilyBounds& from) {
  for (std::size_t i = 0; i < 6; ++i) {
    into.max_value[i] = std::max(into.max_value[i], from.max_value[i]);
    into.cap_hits[i] += from.cap_hits[i];
  }
  into.frontier_checks += from.frontier_checks;
}

}  // namespace

RealizationTable enumerate_realizations(std::int64_t d_max, const SearchOptions& options) {
  if (d_max < 1) throw Error(ErrorCode::invalid_argument, "d_max must be at least 1");

  std::vector<Task> tasks;
  std::map<FamilyId, FamilyBounds> bounds;
  for (FamilyId f : options.families) {
    if (bounds.count(f)) continue;
    FamilyScan scan(f, d_max);
    for (std::int64_t x : scan.leading_values()) tasks.push_back({f, x});
    bounds[f] = scan.bounds();
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = FamilyScan(tasks[i].family, d_max).run(tasks[i].leading);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  RealizationTable table;
  table.d_max = d_max;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& b = bounds[tasks[i].family];
    merge_bounds(b, results[i].bounds);
    b.tuples += results[i].witnesses.size();
    for (auto& w : results[i].witnesses) table.entries[w.d].push_back(std::move(w));
  }
  for (auto& [d, list] : table.entries) std::sort(list.begin(), list.end());

  for (auto& [f, b] : bounds) {
    std::ostringstream note;
    bool capped = false;
    for (Slot s : family_slots(f)) {
      if (b.cap_hits[static_cast<std::size_t>(s)] == 0) continue;
      capped = true;
      note << slot_name(s) << " truncated at " << d_max << " in " << b.cap_hits[static_cast<std::size_t>(s)]
           << " loop(s); ";
    }
    if (f == FamilyId::II && capped)
      note << "d(q, u=1) = 1 for every q, so the truncation only drops repeat witnesses of d = 1";
    else if (!capped)
      note << "every loop closed by a verified monotone frontier";
    b.note = note.str();
    table.certificate.push_back(b);
  }
  return table;
}

std::vector<std::int64_t> verify_exceptions(std::int64_t d_max, const SearchOptions& options) {
  RealizationTable t = enumerate_realizations(d_max, options);
  std::vector<std::int64_t> missing;
  for (std::int64_t d = 1; d <= d_max; ++d)
    if (!t.realized(d)) missing.push_back(d);
  return missing;
}

// ---- moves

FamilyParams MoveState::params() const {
  return FamilyParams::of({{Slot::p, p}, {Slot::q, q}, {Slot::r, r}, {Slot::u, u}, {Slot::v, v}, {Slot::w, w}});
}

std::string MoveState::to_string() const {
  std::ostringstream os;
  os << '(' << p << ',' << q << ',' << r << ',' << u << ',' << v << ',' << w << ')';
  return os.str();
}

const char* move_name(Move m) noexcept {
  switch (m) {
    case Move::i: return "i";
    case Move::ii: return "ii";
    case Move::iii: return "iii";
  }
  return "?";
}

std::int64_t iii_d(const MoveState& s) { return closed_form_d_unchecked(FamilyId::I_I_I, s.params()); }

MoveResult apply_move(const MoveState& s, Move move) {
  if (!s.valid()) throw Error(ErrorCode::invalid_move, "state " + s.to_string() + " is not an I-I-I state");
  const auto [p, q, r, u, v, w] = s;
  MoveResult res{s, 0};
  switch (move) {
    case Move::i:
      res.state.q += 1;
      res.state.r -= 1;
      res.delta = 2 * v * v * q - 2 * w * w * (r - 1) + 2 * u * (p - 1) * (v - w) + 2 * v * w * (r - q);
      break;
    case Move::ii:
      res.state.u += 2;
      res.state.r -= 2;
      res.delta = (4 * u + 4) * p * (p - 1) + 4 * v * q * (p - 1) + 2 * w * (p - 1) * (2 * r - 2 * u - 4) +
                  w * w * (6 - 4 * r) - 4 * v * w * (q - 1) + 2;
      break;
    case Move::iii:
      res.state.r += 1;
      res.delta = 2 * w * w * r + 2 * u * w * (p - 1) + 2 * v * w * (q - 1);
      break;
  }
  if (!res.state.valid())
    throw Error(ErrorCode::invalid_move, std::string("move (") + move_name(move) + ") takes " + s.to_string() +
                                             " to " + res.state.to_string() + ", which breaks p < q < r");
  return res;
}

std::optional<std::int64_t> quoted_increment(const MoveState& s, Move move) {
  if (s.v != 1 || s.w != 1) return std::nullopt;
  switch (move) {
    case Move::i: return 2;
    case Move::ii:
      if (s.p != 2) return std::nullopt;
      return 4 * s.u + 12;
    case Move::iii:
      if (s.p != 2) return std::nullopt;
      return 2 * (s.r + s.u + s.q - 1);
  }
  return std::nullopt;
}

namespace {

struct ScriptedOp {
  const char* name;
  std::int64_t start_u;  // base state (2,3,r,start_u,1,1)
  std::function<MoveState(std::int64_t r)> target;
  std::int64_t delta;
};

const std::vector<ScriptedOp>& scripted_ops() {
  static const std::vector<ScriptedOp> ops = {
      {"odd: (2,3,r-2,3,1,1)", 1, [](std::int64_t r) { return MoveState{2, 3, r - 2, 3, 1, 1}; }, 16},
      {"odd: (3,4,r-6,3,1,1)", 1, [](std::int64_t r) { return MoveState{3, 4, r - 6, 3, 1, 1}; }, 36},
      {"odd: (4,8,r-13,3,1,1)", 1, [](std::int64_t r) { return MoveState{4, 8, r - 13, 3, 1, 1}; }, 62},
      {"even: (3,4,r-3,2,1,1)", 2, [](std::int64_t r) { return MoveState{3, 4, r - 3, 2, 1, 1}; }, 12},
      {"even: (2,3,r-4,6,1,1)", 2, [](std::int64_t r) { return MoveState{2, 3, r - 4, 6, 1, 1}; }, 48},
      {"even: (8,9,r-18,2,1,1)", 2, [](std::int64_t r) { return MoveState{8, 9, r - 18, 2, 1, 1}; }, 72},
      {"even: (2,3,r-2,4,1,1)", 2, [](std::int64_t r) { return MoveState{2, 3, r - 2, 4, 1, 1}; }, 20},
      {"even: (5,6,r-9,2,1,1)", 2, [](std::int64_t r) { return MoveState{5, 6, r - 9, 2, 1, 1}; }, 36},
  };
  return ops;
}

}  // namespace

MoveReport verify_move_increments(std::int64_t grid_bound, std::int64_t count_bound) {
  if (grid_bound < 10) throw Error(ErrorCode::invalid_argument, "grid bound must be at least 10");
  MoveReport rep;
  rep.grid_bound = grid_bound;
  auto fail = [&](const std::string& msg) {
    if (rep.failures.size() < 50) rep.failures.push_back(msg);
  };
  constexpr std::array<Move, 3> moves = {Move::i, Move::ii, Move::iii};

  auto check_state = [&](const MoveState& s, bool quoted_only) {
    const std::int64_t d0 = iii_d(s);
    for (Move m : moves) {
      MoveResult res;
      try {
        res = apply_move(s, m);
      } catch (const Error&) {
        continue;
      }
      const std::int64_t actual = iii_d(res.state) - d0;
      if (!quoted_only) {
        ++rep.states_checked;
        if (res.delta != actual)
          fail(std::string("move (") + move_name(m) + ") at " + s.to_string() + ": formula " +
               std::to_string(res.delta) + ", closed form " + std::to_string(actual));
      }
      if (auto q = quoted_increment(s, m)) {
        ++rep.quoted_checked;
        if (*q != actual)
          fail(std::string("quoted increment of move (") + move_name(m) + ") at " + s.to_string() + ": " +
               std::to_string(*q) + " vs " + std::to_string(actual));
      }
    }
  };

  for (std::int64_t p = 2; p <= grid_bound; ++p)
    for (std::int64_t q = p + 1; q <= grid_bound; ++q)
      for (std::int64_t r = q + 1; r <= grid_bound; ++r) {
        for (std::int64_t u = 1; u <= count_bound; ++u)
          for (std::int64_t v = 1; v <= count_bound; ++v)
            for (std::int64_t w = 1; w <= count_bound; ++w) check_state({p, q, r, u, v, w}, false);
        // quoted regime with larger u
        for (std::int64_t u = count_bound + 1; u <= grid_bound; ++u) check_state({p, q, r, u, 1, 1}, true);
      }

  for (std::int64_t r = 4; r <= grid_bound; ++r) {
    rep.initial_checked += 2;
    const std::int64_t odd = iii_d({2, 3, r, 1, 1, 1});
    const std::int64_t even = iii_d({2, 3, r, 2, 1, 1});
    if (odd != r * r + 5 * r + 17)
      fail("odd start at r=" + std::to_string(r) + ": " + std::to_string(odd));
    if (even != r * r + 7 * r + 30)
      fail("even start at r=" + std::to_string(r) + ": " + std::to_string(even));
  }

  for (const auto& op : scripted_ops()) {
    for (std::int64_t r = 4; r <= grid_bound; ++r) {
      MoveState base{2, 3, r, op.start_u, 1, 1};
      MoveState target = op.target(r);
      if (!target.valid()) continue;
      ++rep.scripted_checked;
      const std::int64_t delta = iii_d(target) - iii_d(base);
      if (delta != op.delta)
        fail(std::string(op.name) + " at r=" + std::to_string(r) + ": " + std::to_string(delta) + " vs " +
             std::to_string(op.delta));
    }
  }
  // (2,3,R,U,1,1) -> (2,3,R-5,U+4,1,1) moves d by 6U - 2R + 30
  for (std::int64_t r = 9; r <= grid_bound; ++r)
    for (std::int64_t u = 1; u <= grid_bound; ++u) {
      ++rep.scripted_checked;
      const std::int64_t delta = iii_d({2, 3, r - 5, u + 4, 1, 1}) - iii_d({2, 3, r, u, 1, 1});
      if (delta != 6 * u - 2 * r + 30)
        fail("u+4, r-5 at (2,3," + std::to_string(r) + "," + std::to_string(u) + ",1,1): " + std::to_string(delta));
    }
  return rep;
}

// ---- coverage and the table

CoverageReport verify_iii_coverage(std::int64_t d_lo, std::int64_t d_hi, const SearchOptions& options) {
  if (d_lo < 432 || d_hi < d_lo)
    throw Error(ErrorCode::invalid_argument, "coverage range must satisfy 432 <= lo <= hi");
  RealizationTable t = enumerate_realizations(d_hi, options);
  CoverageReport rep;
  rep.d_lo = d_lo;
  rep.d_hi = d_hi;
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    if (t.realized_by(d, FamilyId::I_I_I)) continue;
    rep.missing.push_back(d);
    if (auto w = t.minimal_witness(d)) rep.missing_elsewhere[d] = *w;
  }
  rep.witness_431 = t.minimal_witness(431, FamilyId::I_I_I);
  return rep;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {FamilyId::I, {3, 7, 10, 13, 21, 26, 31, 43, 50, 55, 57, 73, 82, 91, 111, 122, 133}},
      {FamilyId::II, {1,  6,  8,  12, 14, 18, 20, 22, 27,  28,  30,  32,  33,  38,  42,  44,  45,  52,
                      54, 56, 63, 66, 68, 70, 75, 84, 86, 93, 102, 104, 124, 134, 156, 182, 189, 208}},
      {FamilyId::III, {2, 15, 40, 77}},
      {FamilyId::II_I, {25, 37}},
      {FamilyId::III_I, {9, 23, 35, 49, 59, 113, 347}},
      {FamilyId::II_III, {5}},
      {FamilyId::I_I, {16,  24,  29,  34,  36,  39,  41,  46,  48,  51,  58,  60,  62,  64,  65,  69,  71,
                       72,  76,  78,  80,  81,  87,  88,  89,  92,  96,  97,  98,  100, 105, 106, 115, 116,
                       118, 119, 120, 126, 129, 131, 135, 136, 138, 140, 142, 144, 146, 153, 155, 157, 164,
                       165, 166, 168, 177, 181, 188, 192, 215, 246, 249, 256, 275, 313, 358, 387, 461}},
  };
  return rows;
}

const std::vector<SporadicState>& sporadic_states() {
  static const std::vector<SporadicState> states = {
      {{5, 6, 8, 1, 2, 1}, 520},   {{4, 6, 10, 1, 2, 1}, 558},  {{5, 7, 10, 1, 2, 1}, 714},
      {{5, 7, 11, 1, 2, 1}, 766},  {{5, 7, 12, 1, 2, 1}, 820},  {{5, 7, 13, 1, 2, 1}, 876},
  };
  return states;
}

Table1Report reproduce_table1(const SearchOptions& options) {
  std::set<std::int64_t> listed;
  std::int64_t top = 0;
  for (const auto& row : table1_rows())
    for (auto d : row.values) {
      listed.insert(d);
      top = std::max(top, d);
    }
  RealizationTable t = enumerate_realizations(top, options);

  Table1Report rep;
  for (const auto& row : table1_rows())
    for (auto d : row.values) {
      ++rep.listed_checked;
      if (!t.realized_by(d, row.family)) rep.listed_missing.emplace_back(row.family, d);
    }
  for (const auto& s : sporadic_states()) {
    const std::int64_t d = iii_d(s.state);
    if (!s.state.valid() || d != s.quoted_d) rep.sporadic_mismatches.emplace_back(s, d);
  }
  const std::set<std::int64_t> exceptions(kKnownExceptions.begin(), kKnownExceptions.end());
  rep.other_cases_max = top;
  for (std::int64_t d = 1; d <= top; ++d) {
    if (listed.count(d) || exceptions.count(d)) continue;
    if (!t.realized_by(d, FamilyId::I_I_I)) rep.other_cases_missing.push_back(d);
  }
  return rep;
}

}  // namespace otreal
