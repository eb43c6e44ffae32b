#include <doctest.h>

#include <algorithm>
#include <set>

#include "otreal/d3.hpp"
#include "otreal/error.hpp"
#include "otreal/search.hpp"

using namespace otreal;

namespace {

FamilyParams P(std::initializer_list<std::pair<Slot, std::int64_t>> v) { return FamilyParams::of(v); }

// brute force over a box containing every tuple with d <= d_max (d_max < 53,
// so I-I-I contributes nothing and only needs a token box)
std::set<std::int64_t> brute_force(std::int64_t d_max) {
  std::set<std::int64_t> out;
  for (FamilyId f : kAllFamilies)
    for (const auto& params : f == FamilyId::I_I_I ? enumerate_domain(f, 8, 2) : enumerate_domain(f, d_max, 8)) {
      const auto d = closed_form_d_unchecked(f, params);
      if (d >= 1 && d <= d_max) out.insert(d);
    }
  return out;
}

}  // namespace

TEST_CASE("small search") {
  auto t = enumerate_realizations(10);
  CHECK(t.d_max == 10);
  CHECK(t.realized(3));
  CHECK_FALSE(t.realized(4));
  auto w = t.minimal_witness(3, FamilyId::I);
  REQUIRE(w);
  CHECK(w->params == P({{Slot::p, 2}, {Slot::u, 1}}));
  CHECK(t.realized_by(2, FamilyId::III));
  CHECK(t.realized_by(1, FamilyId::II));
  CHECK(t.certificate.size() == kAllFamilies.size());
}

TEST_CASE("search agrees with a brute force box") {
  const std::int64_t d_max = 40;
  auto t = enumerate_realizations(d_max);
  std::set<std::int64_t> found;
  for (const auto& [d, ws] : t.entries) found.insert(d);
  CHECK(found == brute_force(d_max));
}

TEST_CASE("every witness recomputes to its d") {
  auto t = enumerate_realizations(200, {.workers = 3});
  for (const auto& [d, ws] : t.entries) {
    CHECK_FALSE(ws.empty());
    CHECK(std::is_sorted(ws.begin(), ws.end()));
    for (const auto& w : ws) {
      CHECK(w.d == d);
      CHECK(d3_closed_form(w.family, w.params).d == d);
    }
  }
}

TEST_CASE("minimal I-I-I witness") {
  auto t = enumerate_realizations(60, {.workers = 2, .families = {FamilyId::I_I_I}});
  CHECK(t.entries.size() == 1);
  auto w = t.minimal_witness(53);
  REQUIRE(w);
  CHECK(w->params == P({{Slot::p, 2}, {Slot::q, 3}, {Slot::r, 4}, {Slot::u, 1}, {Slot::v, 1}, {Slot::w, 1}}));
}

TEST_CASE("exceptions") {
  auto e120 = verify_exceptions(120);
  CHECK(e120 == std::vector<std::int64_t>(kKnownExceptions.begin(), kKnownExceptions.end()));
  CHECK(verify_exceptions(3).empty());
  CHECK(verify_exceptions(4) == std::vector<std::int64_t>{4});
}

TEST_CASE("search is deterministic") {
  auto a = enumerate_realizations(150, {.workers = 1});
  auto b = enumerate_realizations(150, {.workers = 3});
  auto c = enumerate_realizations(150, {.workers = 3});
  CHECK(a.entries == b.entries);
  CHECK(b.entries == c.entries);
  CHECK(a.witness_count() == b.witness_count());
}

TEST_CASE("certificate records the flat direction of II") {
  auto t = enumerate_realizations(50);
  for (const auto& fb : t.certificate) {
    if (fb.family != FamilyId::II) continue;
    CHECK(fb.cap_hits[static_cast<std::size_t>(Slot::q)] > 0);
    CHECK_FALSE(fb.note.empty());
  }
}

TEST_CASE("moves") {
  MoveState s{2, 3, 20, 1, 1, 1};
  CHECK(s.to_string() == "(2,3,20,1,1,1)");

  auto m1 = apply_move(s, Move::i);
  CHECK(m1.state == MoveState{2, 4, 19, 1, 1, 1});
  CHECK(m1.delta == 2);

  auto m2 = apply_move(s, Move::ii);
  CHECK(m2.state == MoveState{2, 3, 18, 3, 1, 1});
  CHECK(m2.delta == 16);

  auto m3 = apply_move(s, Move::iii);
  CHECK(m3.state == MoveState{2, 3, 21, 1, 1, 1});
  CHECK(m3.delta == 46);

  CHECK(apply_move(MoveState{2, 3, 20, 3, 1, 1}, Move::ii).delta == 24);

  CHECK_THROWS_AS(apply_move(MoveState{2, 3, 4, 1, 1, 1}, Move::i), Error);
  CHECK_THROWS_AS(apply_move(MoveState{2, 3, 5, 1, 1, 1}, Move::ii), Error);
  try {
    apply_move(MoveState{2, 4, 5, 1, 1, 1}, Move::i);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_move);
  }
  CHECK(std::string(move_name(Move::iii)) == "iii");
}

TEST_CASE("move deltas equal the change in d") {
  for (std::int64_t p = 2; p <= 5; ++p)
    for (std::int64_t q = p + 1; q <= 8; ++q)
      for (std::int64_t r = q + 1; r <= 12; ++r)
        for (std::int64_t u = 1; u <= 3; ++u)
          for (std::int64_t v = 1; v <= 2; ++v)
            for (std::int64_t w = 1; w <= 2; ++w) {
              MoveState s{p, q, r, u, v, w};
              for (Move m : {Move::i, Move::ii, Move::iii}) {
                MoveState image = s;
                if (m == Move::i) ++image.q, --image.r;
                if (m == Move::ii) image.u += 2, image.r -= 2;
                if (m == Move::iii) ++image.r;
                if (!image.valid()) continue;
                auto res = apply_move(s, m);
                CHECK(res.state == image);
                CHECK(res.delta == iii_d(image) - iii_d(s));
                if (auto quoted = quoted_increment(s, m)) CHECK(*quoted == res.delta);
              }
            }
}

TEST_CASE("move verification report") {
  auto r = verify_move_increments(24, 3);
  CHECK(r.ok());
  CHECK(r.states_checked > 0);
  CHECK(r.quoted_checked > 0);
  CHECK(r.initial_checked > 0);
  CHECK(r.scripted_checked > 0);
}

TEST_CASE("I-I-I coverage") {
  auto c = verify_iii_coverage(432, 1200, {.workers = 2});
  CHECK(c.missing == std::vector<std::int64_t>{461});
  REQUIRE(c.missing_elsewhere.count(461));
  CHECK(c.missing_elsewhere.at(461).family != FamilyId::I_I_I);
  REQUIRE(c.witness_431);
  CHECK(c.witness_431->d == 431);
  CHECK_THROWS_AS(verify_iii_coverage(100, 200), Error);
}

TEST_CASE("sample table") {
  CHECK(table1_rows().size() == 7);
  auto r = reproduce_table1({.workers = 2});
  CHECK(r.ok());
  CHECK(r.listed_checked > 0);
  for (const auto& s : sporadic_states()) CHECK(iii_d(s.state) == s.quoted_d);
}
