#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace otreal {

// Declaration order is the witness ordering used by the realization search.
enum class FamilyId : std::uint8_t { I, II, III, I_I, II_I, III_I, II_III, I_I_I };

inline constexpr std::array<FamilyId, 8> kAllFamilies = {
    FamilyId::I,     FamilyId::II,     FamilyId::III,    FamilyId::I_I,
    FamilyId::II_I,  FamilyId::III_I,  FamilyId::II_III, FamilyId::I_I_I};

std::string_view family_name(FamilyId family) noexcept;

// Accepts "I-I-I" and "I_I_I" spellings; matching is exact otherwise.
std::optional<FamilyId> parse_family(std::string_view name) noexcept;

bool is_spliced(FamilyId family) noexcept;

enum class Slot : std::uint8_t { p, q, r, u, v, w };

inline constexpr std::array<Slot, 6> kAllSlots = {Slot::p, Slot::q, Slot::r,
                                                  Slot::u, Slot::v, Slot::w};

char slot_name(Slot slot) noexcept;
std::optional<Slot> parse_slot(char c) noexcept;

/// Node weights p, q, r and multiplicity counts u, v, w. Slots a family does
/// not use stay empty.
class FamilyParams {
 public:
  FamilyParams() = default;

  static FamilyParams of(std::initializer_list<std::pair<Slot, std::int64_t>> values);

  std::optional<std::int64_t> get(Slot slot) const noexcept {
    return values_[static_cast<std::size_t>(slot)];
  }
  bool has(Slot slot) const noexcept { return get(slot).has_value(); }
  std::int64_t at(Slot slot) const;  // throws parameter_domain when absent

  FamilyParams& set(Slot slot, std::int64_t value) {
    values_[static_cast<std::size_t>(slot)] = value;
    return *this;
  }
  FamilyParams& clear(Slot slot) {
    values_[static_cast<std::size_t>(slot)].reset();
    return *this;
  }

  std::int64_t p() const { return at(Slot::p); }
  std::int64_t q() const { return at(Slot::q); }
  std::int64_t r() const { return at(Slot::r); }
  std::int64_t u() const { return at(Slot::u); }
  std::int64_t v() const { return at(Slot::v); }
  std::int64_t w() const { return at(Slot::w); }

  /// "p=2, u=1" in slot order.
  std::string to_string() const;

  auto operator<=>(const FamilyParams&) const = default;

 private:
  std::array<std::optional<std::int64_t>, 6> values_{};
};

/// Slots used by the family, in loop (and lexicographic) order.
std::span<const Slot> family_slots(FamilyId family) noexcept;

/// Throws Error(parameter_domain) naming the violated constraint, e.g.
/// "requires p < q".
void validate(FamilyId family, const FamilyParams& params);

bool in_domain(FamilyId family, const FamilyParams& params) noexcept;

/// Smallest admissible value of `slot` once the earlier slots of the family
/// (in family_slots order) are fixed in `prefix`.
std::int64_t slot_lower_bound(FamilyId family, Slot slot, const FamilyParams& prefix);

/// Values of `slot` the domain skips (III-I excludes p = 3).
bool slot_value_excluded(FamilyId family, Slot slot, std::int64_t value) noexcept;

/// Every in-domain tuple with weights p,q,r <= weight_max and counts
/// u,v,w <= count_max, in lexicographic slot order.
std::vector<FamilyParams> enumerate_domain(FamilyId family, std::int64_t weight_max,
                                           std::int64_t count_max);

}  // namespace otreal
