#include "otreal/family.hpp"

#include <algorithm>
#include <sstream>

#include "otreal/error.hpp"

namespace otreal {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::parameter_domain: return "parameter domain";
    case ErrorCode::unsupported_family: return "unsupported family";
    case ErrorCode::singular_matrix: return "singular matrix";
    case ErrorCode::not_fibered: return "not fibered";
    case ErrorCode::internal_consistency: return "internal consistency";
    case ErrorCode::monotonicity: return "monotonicity";
    case ErrorCode::invalid_move: return "invalid move";
  }
  return "unknown";
}

namespace {

constexpr std::array<Slot, 2> kSlotsI = {Slot::p, Slot::u};
constexpr std::array<Slot, 2> kSlotsII = {Slot::q, Slot::u};
constexpr std::array<Slot, 1> kSlotsIII = {Slot::u};
constexpr std::array<Slot, 4> kSlotsII_ = {Slot::p, Slot::q, Slot::u, Slot::v};
constexpr std::array<Slot, 6> kSlotsIII_ = {Slot::p, Slot::q, Slot::r,
                                            Slot::u, Slot::v, Slot::w};
constexpr std::array<Slot, 3> kSlotsPUV = {Slot::p, Slot::u, Slot::v};
constexpr std::array<Slot, 2> kSlotsUV = {Slot::u, Slot::v};

[[noreturn]] void domain_error(FamilyId family, const std::string& constraint) {
  std::ostringstream os;
  os << "family " << family_name(family) << " requires " << constraint;
  throw Error(ErrorCode::parameter_domain, os.str());
}

void require_at_least(FamilyId family, const FamilyParams& params, Slot slot,
                      std::int64_t lo) {
  if (params.at(slot) < lo) {
    domain_error(family, std::string(1, slot_name(slot)) + " >= " + std::to_string(lo));
  }
}

void require_less(FamilyId family, const FamilyParams& params, Slot a, Slot b) {
  if (params.at(a) >= params.at(b)) {
    domain_error(family,
                 std::string(1, slot_name(a)) + " < " + std::string(1, slot_name(b)));
  }
}

}  // namespace

std::string_view family_name(FamilyId family) noexcept {
  switch (family) {
    case FamilyId::I: return "I";
    case FamilyId::II: return "II";
    case FamilyId::III: return "III";
    case FamilyId::I_I: return "I-I";
    case FamilyId::II_I: return "II-I";
    case FamilyId::III_I: return "III-I";
    case FamilyId::II_III: return "II-III";
    case FamilyId::I_I_I: return "I-I-I";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) noexcept {
  std::string normalized(name);
  for (char& c : normalized) {
    if (c == '_') c = '-';
  }
  for (FamilyId f : kAllFamilies) {
    if (family_name(f) == normalized) return f;
  }
  return std::nullopt;
}

bool is_spliced(FamilyId family) noexcept {
  return family != FamilyId::I && family != FamilyId::II && family != FamilyId::III;
}

char slot_name(Slot slot) noexcept { return "pqruvw"[static_cast<int>(slot)]; }

std::optional<Slot> parse_slot(char c) noexcept {
  for (Slot s : kAllSlots) {
    if (slot_name(s) == c) return s;
  }
  return std::nullopt;
}

FamilyParams FamilyParams::of(
    std::initializer_list<std::pair<Slot, std::int64_t>> values) {
  FamilyParams params;
  for (const auto& [slot, value] : values) params.set(slot, value);
  return params;
}

std::int64_t FamilyParams::at(Slot slot) const {
  auto value = get(slot);
  if (!value) {
    throw Error(ErrorCode::parameter_domain,
                std::string("missing parameter ") + slot_name(slot));
  }
  return *value;
}

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Slot s : kAllSlots) {
    if (auto value = get(s)) {
      if (!first) os << ", ";
      os << slot_name(s) << '=' << *value;
      first = false;
    }
  }
  return os.str();
}

std::span<const Slot> family_slots(FamilyId family) noexcept {
  switch (family) {
    case FamilyId::I: return kSlotsI;
    case FamilyId::II: return kSlotsII;
    case FamilyId::III: return kSlotsIII;
    case FamilyId::I_I: return kSlotsII_;
    case FamilyId::I_I_I: return kSlotsIII_;
    case FamilyId::II_I: return kSlotsPUV;
    case FamilyId::III_I: return kSlotsPUV;
    case FamilyId::II_III: return kSlotsUV;
  }
  return {};
}

void validate(FamilyId family, const FamilyParams& params) {
  auto slots = family_slots(family);
  for (Slot s : kAllSlots) {
    bool used = std::find(slots.begin(), slots.end(), s) != slots.end();
    if (used && !params.has(s)) {
      throw Error(ErrorCode::parameter_domain,
                  std::string("family ") + std::string(family_name(family)) +
                      " requires parameter " + slot_name(s));
    }
    if (!used && params.has(s)) {
      throw Error(ErrorCode::parameter_domain,
                  std::string("family ") + std::string(family_name(family)) +
                      " does not take parameter " + slot_name(s));
    }
  }
  switch (family) {
    case FamilyId::I:
      require_at_least(family, params, Slot::p, 2);
      require_at_least(family, params, Slot::u, 1);
      break;
    case FamilyId::II:
      require_at_least(family, params, Slot::q, 2);
      require_at_least(family, params, Slot::u, 1);
      break;
    case FamilyId::III:
      require_at_least(family, params, Slot::u, 0);
      break;
    case FamilyId::I_I:
      require_at_least(family, params, Slot::p, 2);
      require_less(family, params, Slot::p, Slot::q);
      require_at_least(family, params, Slot::u, 1);
      require_at_least(family, params, Slot::v, 1);
      break;
    case FamilyId::I_I_I:
      require_at_least(family, params, Slot::p, 2);
      require_less(family, params, Slot::p, Slot::q);
      require_less(family, params, Slot::q, Slot::r);
      require_at_least(family, params, Slot::u, 1);
      require_at_least(family, params, Slot::v, 1);
      require_at_least(family, params, Slot::w, 1);
      break;
    case FamilyId::II_I:
      require_at_least(family, params, Slot::p, 3);
      require_at_least(family, params, Slot::u, 1);
      require_at_least(family, params, Slot::v, 1);
      break;
    case FamilyId::III_I:
      if (params.p() != 2 && params.p() < 4) domain_error(family, "p = 2 or p >= 4");
      require_at_least(family, params, Slot::u, 1);
      require_at_least(family, params, Slot::v, 0);
      break;
    case FamilyId::II_III:
      require_at_least(family, params, Slot::u, 1);
      require_at_least(family, params, Slot::v, 0);
      break;
  }
}

bool in_domain(FamilyId family, const FamilyParams& params) noexcept {
  try {
    validate(family, params);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::int64_t slot_lower_bound(FamilyId family, Slot slot, const FamilyParams& prefix) {
  switch (slot) {
    case Slot::p:
      return family == FamilyId::II_I ? 3 : 2;
    case Slot::q:
      return family == FamilyId::II ? 2 : prefix.p() + 1;
    case Slot::r:
      return prefix.q() + 1;
    case Slot::u:
      return family == FamilyId::III ? 0 : 1;
    case Slot::v:
      return (family == FamilyId::III_I || family == FamilyId::II_III) ? 0 : 1;
    case Slot::w:
      return 1;
  }
  return 0;
}

bool slot_value_excluded(FamilyId family, Slot slot, std::int64_t value) noexcept {
  return family == FamilyId::III_I && slot == Slot::p && value == 3;
}

std::vector<FamilyParams> enumerate_domain(FamilyId family, std::int64_t weight_max,
                                           std::int64_t count_max) {
  std::vector<FamilyParams> out;
  auto slots = family_slots(family);
  FamilyParams current;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == slots.size()) {
      out.push_back(current);
      return;
    }
    Slot s = slots[depth];
    bool weight = s == Slot::p || s == Slot::q || s == Slot::r;
    std::int64_t hi = weight ? weight_max : count_max;
    for (std::int64_t x = slot_lower_bound(family, s, current); x <= hi; ++x) {
      if (slot_value_excluded(family, s, x)) continue;
      current.set(s, x);
      self(self, depth + 1);
    }
    current.clear(s);
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace otreal
