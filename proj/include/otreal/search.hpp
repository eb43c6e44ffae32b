#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otreal/family.hpp"

namespace otreal {

struct Witness {
  FamilyId family{};
  FamilyParams params;
  std::int64_t d = 0;

  // family tag order, then parameters
  friend std::strong_ordering operator<=>(const Witness& a, const Witness& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (a.params < b.params) return std::strong_ordering::less;
    if (b.params < a.params) return std::strong_ordering::greater;
    return a.d <=> b.d;
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Per-family record of how the enumeration was bounded.
struct FamilyBounds {
  FamilyId family{};
  std::array<std::int64_t, 6> max_value{};     // largest value visited, by Slot
  std::array<std::size_t, 6> cap_hits{};       // loops stopped by the d_max cap
  std::size_t tuples = 0;                       // witnesses recorded
  std::size_t frontier_checks = 0;              // monotone steps verified at breaks
  std::string note;
};

struct RealizationTable {
  std::int64_t d_max = 0;
  std::map<std::int64_t, std::vector<Witness>> entries;  // only realized d
  std::vector<FamilyBounds> certificate;

  bool realized(std::int64_t d) const { return entries.count(d) != 0; }
  bool realized_by(std::int64_t d, FamilyId family) const;
  std::optional<Witness> minimal_witness(std::int64_t d) const;
  std::optional<Witness> minimal_witness(std::int64_t d, FamilyId family) const;
  std::size_t witness_count() const;
};

struct SearchOptions {
  unsigned workers = 1;
  std::vector<FamilyId> families{kAllFamilies.begin(), kAllFamilies.end()};
};

/// Every tuple with d <= d_max, pruned by coordinate monotonicity. Throws
/// Error(monotonicity) if a pruning step is not monotone.
RealizationTable enumerate_realizations(std::int64_t d_max, const SearchOptions& options = {});

inline constexpr std::array<std::int64_t, 9> kKnownExceptions = {4, 11, 17, 19, 47, 61, 79, 95, 109};

/// d in [1, d_max] without a witness.
std::vector<std::int64_t> verify_exceptions(std::int64_t d_max, const SearchOptions& options = {});

// ---- moves on I-I-I states

struct MoveState {
  std::int64_t p = 2, q = 3, r = 4, u = 1, v = 1, w = 1;

  FamilyParams params() const;
  bool valid() const { return 2 <= p && p < q && q < r && u >= 1 && v >= 1 && w >= 1; }
  std::string to_string() const;  // "(2,3,20,1,1,1)"
  friend auto operator<=>(const MoveState&, const MoveState&) = default;
};

enum class Move { i, ii, iii };

const char* move_name(Move m) noexcept;

struct MoveResult {
  MoveState state;
  std::int64_t delta = 0;
};

/// (i) q+1, r-1   (ii) u+2, r-2   (iii) r+1. Throws invalid_move if the
/// state or its image leaves p < q < r.
MoveResult apply_move(const MoveState& state, Move move);

/// Short increment valid in the regime v = w = 1 (and p = 2 for ii, iii):
/// 2, 4u+12, 2(r+u+q-1). Empty outside it.
std::optional<std::int64_t> quoted_increment(const MoveState& state, Move move);

std::int64_t iii_d(const MoveState& state);

struct MoveReport {
  std::int64_t grid_bound = 0;
  std::size_t states_checked = 0;
  std::size_t quoted_checked = 0;
  std::size_t initial_checked = 0;
  std::size_t scripted_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// General increments on all states with r <= grid_bound and u,v,w <=
/// count_bound; the quoted increments on their regime (u <= grid_bound);
/// the two start polynomials and the scripted extra operations.
MoveReport verify_move_increments(std::int64_t grid_bound, std::int64_t count_bound = 4);

// ---- coverage and the sample table

struct CoverageReport {
  std::int64_t d_lo = 0, d_hi = 0;
  std::vector<std::int64_t> missing;              // in [d_lo, d_hi], no I-I-I witness
  std::map<std::int64_t, Witness> missing_elsewhere;  // minimal other-family witness
  std::optional<Witness> witness_431;              // I-I-I witness at 431, if any
};

CoverageReport verify_iii_coverage(std::int64_t d_lo, std::int64_t d_hi,
                                   const SearchOptions& options = {});

struct Table1Row {
  FamilyId family{};
  std::vector<std::int64_t> values;
};

/// The reference table of single samples (I-I-I row is "all other cases").
const std::vector<Table1Row>& table1_rows();

struct SporadicState {
  MoveState state;
  std::int64_t quoted_d = 0;
};
const std::vector<SporadicState>& sporadic_states();

struct Table1Report {
  std::size_t listed_checked = 0;
  std::vector<std::pair<FamilyId, std::int64_t>> listed_missing;  // no witness in the listed family
  std::vector<std::pair<SporadicState, std::int64_t>> sporadic_mismatches;  // computed d differs
  std::vector<std::int64_t> other_cases_missing;  // unlisted, non-exceptional d without I-I-I witness
  std::int64_t other_cases_max = 0;
  bool ok() const {
    return listed_missing.empty() && sporadic_mismatches.empty() && other_cases_missing.empty();
  }
};

Table1Report reproduce_table1(const SearchOptions& options = {});

}  // namespace otreal
