#include <doctest.h>

#include <set>

#include "otreal/error.hpp"
#include "otreal/forms.hpp"
#include "otreal/splice.hpp"

using namespace otreal;

namespace {

FamilyParams P(std::initializer_list<std::pair<Slot, std::int64_t>> v) { return FamilyParams::of(v); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::internal_consistency;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("family names and parsing") {
  for (FamilyId f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("I_I_I") == FamilyId::I_I_I);
  CHECK(parse_family("II_III") == FamilyId::II_III);
  CHECK_FALSE(parse_family("IV").has_value());
  CHECK_FALSE(parse_family("i").has_value());
}

TEST_CASE("domain validation names the constraint") {
  CHECK(message_of([] { validate(FamilyId::I_I, P({{Slot::p, 3}, {Slot::q, 3}, {Slot::u, 1}, {Slot::v, 1}})); })
            .find("requires p < q") != std::string::npos);
  CHECK(message_of([] { validate(FamilyId::I, P({{Slot::p, 1}, {Slot::u, 1}})); }).find("p >= 2") !=
        std::string::npos);
  CHECK(message_of([] { validate(FamilyId::III_I, P({{Slot::p, 3}, {Slot::u, 1}, {Slot::v, 0}})); })
            .find("p = 2 or p >= 4") != std::string::npos);
  CHECK(code_of([] { validate(FamilyId::III, P({{Slot::p, 2}, {Slot::u, 0}})); }) == ErrorCode::parameter_domain);
  CHECK(code_of([] { validate(FamilyId::II, P({{Slot::q, 2}})); }) == ErrorCode::parameter_domain);
  CHECK(in_domain(FamilyId::III, P({{Slot::u, 0}})));
  CHECK_FALSE(in_domain(FamilyId::II_I, P({{Slot::p, 2}, {Slot::u, 1}, {Slot::v, 1}})));
  CHECK(in_domain(FamilyId::II_III, P({{Slot::u, 1}, {Slot::v, 0}})));
}

TEST_CASE("enumerate_domain") {
  auto ii = enumerate_domain(FamilyId::I, 2, 2);
  REQUIRE(ii.size() == 2);
  CHECK(ii[0] == P({{Slot::p, 2}, {Slot::u, 1}}));
  CHECK(ii[1] == P({{Slot::p, 2}, {Slot::u, 2}}));
  CHECK(enumerate_domain(FamilyId::III, 2, 2).size() == 3);
  for (const auto& params : enumerate_domain(FamilyId::III_I, 6, 2)) CHECK(params.p() != 3);
  CHECK(enumerate_domain(FamilyId::I_I_I, 4, 1).size() == 1);
}

TEST_CASE("family I diagram") {
  SpliceDiagram d = build_family_diagram(FamilyId::I, P({{Slot::p, 2}, {Slot::u, 1}}));
  CHECK(d.leaves().size() == 4);
  CHECK(d.node_count() == 1);
  std::multiset<std::int64_t> singular;
  for (const auto& l : d.leaves())
    if (l.weight > 1 || l.label == "a" || l.label == "b") singular.insert(l.weight);
  CHECK(singular == std::multiset<std::int64_t>{1, 2});

  SpliceDiagram d5 = build_family_diagram(FamilyId::I, P({{Slot::p, 5}, {Slot::u, 3}}));
  CHECK(d5.leaves().size() == 8);
  const auto a = d5.leaf_index("a"), b = d5.leaf_index("b"), c1 = d5.leaf_index("c1");
  CHECK(d5.leaves()[a].multiplicity == -1);
  CHECK(d5.leaves()[b].multiplicity == 1);
  CHECK(linking_number(d5, c1, a) == 4);  // p - 1
  CHECK(linking_number(d5, c1, b) == 5);  // p
  CHECK(linking_number(d5, a, b) == 1);
}

TEST_CASE("small and spliced diagrams") {
  CHECK(build_family_diagram(FamilyId::III, P({{Slot::u, 0}})).leaves().size() == 3);
  SpliceDiagram d = build_family_diagram(
      FamilyId::I_I_I, P({{Slot::p, 2}, {Slot::q, 3}, {Slot::r, 4}, {Slot::u, 1}, {Slot::v, 1}, {Slot::w, 1}}));
  CHECK(d.node_count() == 3);
  CHECK(d.edges().size() == 2);
  CHECK(d.leaves().size() == 8);
  CHECK_NOTHROW(d.check());
}

TEST_CASE("linking numbers across a splice edge") {
  const auto params = P({{Slot::p, 3}, {Slot::q, 5}, {Slot::u, 1}, {Slot::v, 1}});
  SpliceDiagram d = build_family_diagram(FamilyId::I_I, params);
  // c1 on node 0, e1 on node 1: off-path weights p-1 at node 0 and q at node 1
  CHECK(linking_number(d, d.leaf_index("c1"), d.leaf_index("e1")) == 2 * 5);
  CHECK(linking_number(d, d.leaf_index("a"), d.leaf_index("b")) == 1);
  CHECK(linking_number(d, d.leaf_index("a"), d.leaf_index("e1")) == 5);
  CHECK(code_of([&] { linking_number(d, 0, 0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("linking number is symmetric") {
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 6, 2)) {
      SpliceDiagram d = build_family_diagram(f, params);
      for (std::size_t i = 0; i < d.leaves().size(); ++i)
        for (std::size_t j = i + 1; j < d.leaves().size(); ++j)
          CHECK(linking_number(d, i, j) == linking_number(d, j, i));
    }
}

TEST_CASE("fiber degree is 1 at every node") {
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 8, 4)) {
      SpliceDiagram d = build_family_diagram(f, params);
      for (std::size_t v = 0; v < d.node_count(); ++v) CHECK(fiber_degree(d, v) == 1);
      CHECK(is_fibered(d));
    }
}

TEST_CASE("splice compatibility") {
  const auto i5 = P({{Slot::p, 5}, {Slot::u, 2}});
  const auto i7 = P({{Slot::p, 7}, {Slot::u, 1}});
  SpliceDiagram d1 = build_family_diagram(FamilyId::I, i5);
  SpliceDiagram d2 = build_family_diagram(FamilyId::I, i7);
  const auto s1 = d1.leaf_index("a");  // weight p
  const auto s2 = d2.leaf_index("b");  // weight q - 1
  CHECK(check_splice_compatibility(d1, s1, d2, s2));
  CHECK_FALSE(check_splice_compatibility(d1, s1, d2, d2.leaf_index("a")));

  SpliceDiagram d_ii = build_family_diagram(FamilyId::II, P({{Slot::q, 2}, {Slot::u, 3}}));
  CHECK(check_splice_compatibility(d_ii, d_ii.leaf_index("b"), d1, s1));
  CHECK_FALSE(check_splice_compatibility(d_ii, d_ii.leaf_index("a"), d1, s1));

  SpliceDiagram d_iii = build_family_diagram(FamilyId::III, P({{Slot::u, 2}}));
  CHECK(check_splice_compatibility(d1, d1.leaf_index("b"), d_iii, d_iii.leaf_index("a")));
  CHECK(check_splice_compatibility(d_ii, d_ii.leaf_index("b"), d_iii, d_iii.leaf_index("a")));
}

TEST_CASE("splice compatibility is symmetric") {
  std::vector<SpliceDiagram> ds;
  for (FamilyId f : {FamilyId::I, FamilyId::II, FamilyId::III})
    for (const auto& params : enumerate_domain(f, 4, 2)) ds.push_back(build_family_diagram(f, params));
  for (const auto& a : ds)
    for (const auto& b : ds)
      for (std::size_t i = 0; i < a.leaves().size(); ++i)
        for (std::size_t j = 0; j < b.leaves().size(); ++j)
          CHECK(check_splice_compatibility(a, i, b, j) == check_splice_compatibility(b, j, a, i));
}

TEST_CASE("boundary twists of family I") {
  for (std::int64_t p = 2; p <= 8; ++p) {
    SpliceDiagram d = build_family_diagram(FamilyId::I, P({{Slot::p, p}, {Slot::u, 2}}));
    CHECK(boundary_twist(d, d.leaf_index("a")) == p);
    CHECK(boundary_twist(d, d.leaf_index("b")) == -(p - 1));
    CHECK(boundary_twist(d, d.leaf_index("c1")) == -1);
    CHECK(boundary_twist(d, d.leaf_index("d2")) == 1);
  }
}

TEST_CASE("boundary twist needs a fibered node") {
  SpliceDiagram d(1);
  d.add_leaf({"a", 0, 2, 1});
  d.add_leaf({"b", 0, 2, -1});
  CHECK(fiber_degree(d, 0) == 0);
  CHECK(code_of([&] { boundary_twist(d, 0); }) == ErrorCode::not_fibered);
}

TEST_CASE("separating torus twists") {
  for (std::int64_t p = 2; p <= 6; ++p)
    for (std::int64_t q = p + 1; q <= 8; ++q) {
      auto params = P({{Slot::p, p}, {Slot::q, q}, {Slot::u, 1}, {Slot::v, 2}});
      CHECK(separating_torus_twist(FamilyId::I_I, params, 0) == p - q);
      for (std::int64_t r = q + 1; r <= 9; ++r) {
        auto p3 = P({{Slot::p, p}, {Slot::q, q}, {Slot::r, r}, {Slot::u, 1}, {Slot::v, 1}, {Slot::w, 1}});
        CHECK(separating_torus_twist(FamilyId::I_I_I, p3, 0) == p - q);
        CHECK(separating_torus_twist(FamilyId::I_I_I, p3, 1) == q - r);
      }
    }
  for (std::int64_t p = 3; p <= 9; ++p)
    CHECK(separating_torus_twist(FamilyId::II_I, P({{Slot::p, p}, {Slot::u, 1}, {Slot::v, 1}}), 0) == p - 2);
  CHECK(separating_torus_twist(FamilyId::II_III, P({{Slot::u, 1}, {Slot::v, 0}}), 0) == 1);
  CHECK(code_of([] { separating_torus_twist(FamilyId::I, P({{Slot::p, 2}, {Slot::u, 1}}), 0); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("monodromy words") {
  auto w = monodromy_word(FamilyId::I, P({{Slot::p, 4}, {Slot::u, 2}}));
  std::vector<TwistFactor> expect = {{"a", 4}, {"b", -3}, {"c1", -1}, {"c2", -1}, {"d1", 1}, {"d2", 1}};
  CHECK(w.factors == expect);
  CHECK(w.page_punctures == 6);
  CHECK(w.to_string() == "a^4 b^-3 c1^-1 c2^-1 d1 d2");

  auto w23 = monodromy_word(FamilyId::II_III, P({{Slot::u, 2}, {Slot::v, 1}}));
  CHECK(w23.to_string() == "a^-2 c1^-1 d1 d2 gamma b^2 e1^-1 e2^-1 f1");

  auto w11 = monodromy_word(FamilyId::I_I, P({{Slot::p, 2}, {Slot::q, 3}, {Slot::u, 1}, {Slot::v, 1}}));
  bool found = false;
  for (const auto& f : w11.factors)
    if (f.label == "gamma") {
      CHECK(f.exponent == -1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("page punctures") {
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 6, 3)) {
      auto g = [&](Slot s) { return params.get(s).value_or(0); };
      const std::int64_t u = g(Slot::u), v = g(Slot::v), w = g(Slot::w);
      std::int64_t expect = 0;
      switch (f) {
        case FamilyId::I: expect = 2 * u + 2; break;
        case FamilyId::II: expect = 2 * u + 1; break;
        case FamilyId::III: expect = 2 * u + 3; break;
        case FamilyId::I_I: expect = 2 * u + 2 * v + 2; break;
        case FamilyId::I_I_I: expect = 2 * u + 2 * v + 2 * w + 2; break;
        case FamilyId::II_I: expect = 2 * u + 2 * v + 1; break;
        case FamilyId::III_I: expect = 2 * u + 2 * v + 3; break;
        case FamilyId::II_III: expect = 2 * u + 2 * v + 2; break;
      }
      CHECK(monodromy_word(f, params).page_punctures == expect);
    }
}

TEST_CASE("negative twist count matches the handle table") {
  CHECK(negative_twist_count(monodromy_word(FamilyId::I, P({{Slot::p, 5}, {Slot::u, 3}}))) == 5 + 3 - 1);
  CHECK(negative_twist_count(monodromy_word(FamilyId::III, P({{Slot::u, 4}}))) == 5);
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 8, 4)) {
      auto word = monodromy_word(f, params);
      CHECK(negative_twist_count(word) == handle_k(f, params));
      for (const auto& factor : word.factors) CHECK(factor.exponent != 0);
    }
}

TEST_CASE("word exponents are the boundary and separating twists") {
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 7, 3)) {
      SpliceDiagram d = build_family_diagram(f, params);
      MonodromyWord word = monodromy_word(f, params);
      std::size_t matched = 0;
      for (const auto& factor : word.factors) {
        if (auto leaf = d.find_leaf(factor.label)) {
          CHECK(boundary_twist(d, *leaf) == factor.exponent);
          ++matched;
          continue;
        }
        bool edge_found = false;
        for (std::size_t e = 0; e < d.edges().size(); ++e)
          if (d.edges()[e].label == factor.label) {
            CHECK(separating_torus_twist(d, e) == factor.exponent);
            edge_found = true;
            ++matched;
          }
        CHECK(edge_found);
      }
      CHECK(matched == word.factors.size());
      CHECK(word.factors.size() == d.leaves().size() + d.edges().size());
    }
}

TEST_CASE("real algebraic representatives") {
  CHECK(real_algebraic_representative(FamilyId::I, P({{Slot::p, 2}, {Slot::u, 1}})) ==
        "y(x^2+η y) · conj(x(x^2+η^2 y))");
  CHECK(eta_root_order(FamilyId::I, P({{Slot::p, 2}, {Slot::u, 1}})) == 3);
  CHECK(real_algebraic_representative(FamilyId::III, P({{Slot::u, 0}})) == "(x^3+η y^2) · conj(x y)");
  CHECK(real_algebraic_representative(FamilyId::II, P({{Slot::q, 3}, {Slot::u, 1}})) == "x y(x^3+η y)");
  CHECK(real_algebraic_representative(FamilyId::II, P({{Slot::q, 3}, {Slot::u, 2}})) ==
        "x y(x^3+η y)(x^3+η^2 y) · conj((x^3+η^3 y))");
  CHECK(real_algebraic_representative(FamilyId::I_I, P({{Slot::p, 2}, {Slot::q, 3}, {Slot::u, 1}, {Slot::v, 1}})) ==
        "y(x^2+η y)(x^3+η y^2) · conj(x(x^2+η^2 y)(x^3+η^2 y^2))");
  CHECK(code_of([] { real_algebraic_representative(FamilyId::II_I, P({{Slot::p, 3}, {Slot::u, 1}, {Slot::v, 1}})); }) ==
        ErrorCode::unsupported_family);
}

TEST_CASE("diagram JSON round trip") {
  for (FamilyId f : kAllFamilies)
    for (const auto& params : enumerate_domain(f, 5, 2)) {
      SpliceDiagram d = build_family_diagram(f, params);
      std::string text = diagram_to_json(d);
      SpliceDiagram back = diagram_from_json(text);
      CHECK(back == d);
      CHECK(diagram_to_json(back) == text);
    }
  std::string fixed = diagram_to_json(build_family_diagram(FamilyId::III, P({{Slot::u, 0}})), -1);
  CHECK(fixed ==
        R"({"nodes":1,"leaves":[{"label":"a","node":0,"weight":3,"multiplicity":-1},)"
        R"({"label":"b","node":0,"weight":2,"multiplicity":-1},)"
        R"({"label":"c1","node":0,"weight":1,"multiplicity":1}],"edges":[]})");
  CHECK(code_of([] { diagram_from_json("{\"nodes\": 1}"); }) == ErrorCode::invalid_argument);
}
