#include "otreal/splice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "otreal/error.hpp"

namespace otreal {

using json = nlohmann::ordered_json;

std::size_t SpliceDiagram::add_leaf(Leaf leaf) {
  if (leaf.node >= node_count_) throw Error(ErrorCode::invalid_argument, "leaf on missing node");
  leaves_.push_back(std::move(leaf));
  return leaves_.size() - 1;
}

std::size_t SpliceDiagram::add_edge(SpliceEdge edge) {
  if (edge.node_a >= node_count_ || edge.node_b >= node_count_ || edge.node_a == edge.node_b)
    throw Error(ErrorCode::invalid_argument, "bad splice edge endpoints");
  edges_.push_back(std::move(edge));
  return edges_.size() - 1;
}

std::optional<std::size_t> SpliceDiagram::find_leaf(const std::string& label) const {
  for (std::size_t i = 0; i < leaves_.size(); ++i)
    if (leaves_[i].label == label) return i;
  return std::nullopt;
}

std::size_t SpliceDiagram::leaf_index(const std::string& label) const {
  if (auto i = find_leaf(label)) return *i;
  throw Error(ErrorCode::invalid_argument, "no leaf labelled " + label);
}

void SpliceDiagram::check() const {
  if (node_count_ == 0) throw Error(ErrorCode::invalid_argument, "diagram has no nodes");
  if (edges_.size() + 1 != node_count_)
    throw Error(ErrorCode::invalid_argument, "diagram is not a tree (edge count)");
  // union-find on nodes
  std::vector<std::size_t> parent(node_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    auto a = find(e.node_a), b = find(e.node_b);
    if (a == b) throw Error(ErrorCode::invalid_argument, "diagram has a cycle");
    parent[a] = b;
    if (e.weight_a <= 0 || e.weight_b <= 0)
      throw Error(ErrorCode::invalid_argument, "edge weights must be positive");
    if (e.mult_a == 0 || e.mult_b == 0)
      throw Error(ErrorCode::invalid_argument, "splice multiplicities must be nonzero");
  }
  for (const auto& l : leaves_) {
    if (l.multiplicity == 0)
      throw Error(ErrorCode::invalid_argument, "leaf " + l.label + " has zero multiplicity");
    if (l.weight <= 0) throw Error(ErrorCode::invalid_argument, "leaf weights must be positive");
  }
}

namespace {

void add_cables(SpliceDiagram& d, std::size_t node, const std::string& prefix, std::int64_t count,
                std::int64_t mult) {
  for (std::int64_t i = 1; i <= count; ++i)
    d.add_leaf({prefix + std::to_string(i), node, 1, mult});
}

// Node sequence from `from` to `to` along splice edges, plus the edge used at
// each step.
struct TreePath {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
};

TreePath tree_path(const SpliceDiagram& d, std::size_t from, std::size_t to) {
  const std::size_t n = d.node_count();
  std::vector<std::optional<std::size_t>> via(n);  // edge used to reach node
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{from};
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
      const auto& edge = d.edges()[e];
      std::size_t y;
      if (edge.node_a == x) y = edge.node_b;
      else if (edge.node_b == x) y = edge.node_a;
      else continue;
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[to]) throw Error(ErrorCode::invalid_argument, "diagram is disconnected");
  TreePath path;
  for (std::size_t x = to; x != from;) {
    const auto& edge = d.edges()[*via[x]];
    path.nodes.push_back(x);
    path.edges.push_back(*via[x]);
    x = edge.node_a == x ? edge.node_b : edge.node_a;
  }
  path.nodes.push_back(from);
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

// Product of the weights at `node` except the excluded leaves/edges.
std::int64_t off_path_weight(const SpliceDiagram& d, std::size_t node,
                             std::initializer_list<std::optional<std::size_t>> skip_leaves,
                             std::initializer_list<std::optional<std::size_t>> skip_edges) {
  auto skipped = [](const auto& list, std::size_t idx) {
    for (const auto& s : list)
      if (s && *s == idx) return true;
    return false;
  };
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < d.leaves().size(); ++i)
    if (d.leaves()[i].node == node && !skipped(skip_leaves, i)) prod *= d.leaves()[i].weight;
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    if (skipped(skip_edges, e)) continue;
    const auto& edge = d.edges()[e];
    if (edge.node_a == node) prod *= edge.weight_a;
    if (edge.node_b == node) prod *= edge.weight_b;
  }
  return prod;
}

// lk between two ends; a missing start leaf means a regular fiber at start_node.
std::int64_t path_linking(const SpliceDiagram& d, std::size_t start_node,
                          std::optional<std::size_t> start_leaf, std::size_t end_leaf) {
  std::size_t end_node = d.leaves()[end_leaf].node;
  TreePath path = tree_path(d, start_node, end_node);
  std::int64_t prod = 1;
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    std::optional<std::size_t> in_edge, out_edge, leaf_a, leaf_b;
    if (k > 0) in_edge = path.edges[k - 1];
    if (k + 1 < path.nodes.size()) out_edge = path.edges[k];
    if (k == 0) leaf_a = start_leaf;
    if (k + 1 == path.nodes.size()) leaf_b = end_leaf;
    prod *= off_path_weight(d, path.nodes[k], {leaf_a, leaf_b}, {in_edge, out_edge});
  }
  return prod;
}

void check_leaf(const SpliceDiagram& d, std::size_t leaf) {
  if (leaf >= d.leaves().size()) throw Error(ErrorCode::invalid_argument, "leaf index out of range");
}

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

SpliceDiagram build_family_diagram(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  SpliceDiagram d(is_spliced(family) ? (family == FamilyId::I_I_I ? 3 : 2) : 1);
  switch (family) {
    case FamilyId::I: {
      const auto p = params.p(), u = params.u();
      d.add_leaf({"a", 0, p, -1});
      d.add_leaf({"b", 0, p - 1, 1});
      add_cables(d, 0, "c", u, 1);
      add_cables(d, 0, "d", u, -1);
      break;
    }
    case FamilyId::II: {
      const auto q = params.q(), u = params.u();
      d.add_leaf({"a", 0, q, 1});
      d.add_leaf({"b", 0, 1, 1});
      add_cables(d, 0, "c", u - 1, 1);
      add_cables(d, 0, "d", u, -1);
      break;
    }
    case FamilyId::III: {
      const auto u = params.u();
      d.add_leaf({"a", 0, 3, -1});
      d.add_leaf({"b", 0, 2, -1});
      add_cables(d, 0, "c", u + 1, 1);
      add_cables(d, 0, "d", u, -1);
      break;
    }
    case FamilyId::I_I:
    case FamilyId::I_I_I: {
      const auto p = params.p(), q = params.q(), u = params.u(), v = params.v();
      d.add_leaf({"a", 0, p - 1, 1});
      add_cables(d, 0, "c", u, 1);
      add_cables(d, 0, "d", u, -1);
      d.add_edge({"gamma", 0, 1, p, q - 1, -1, 1});
      add_cables(d, 1, "e", v, 1);
      add_cables(d, 1, "f", v, -1);
      if (family == FamilyId::I_I) {
        d.add_leaf({"b", 1, q, -1});
      } else {
        const auto r = params.r(), w = params.w();
        d.add_edge({"theta", 1, 2, q, r - 1, -1, 1});
        d.add_leaf({"b", 2, r, -1});
        add_cables(d, 2, "g", w, 1);
        add_cables(d, 2, "h", w, -1);
      }
      break;
    }
    case FamilyId::II_I: {
      const auto p = params.p(), u = params.u(), v = params.v();
      d.add_leaf({"a", 0, p - 1, 1});
      add_cables(d, 0, "c", u, 1);
      add_cables(d, 0, "d", u, -1);
      d.add_edge({"gamma", 0, 1, p, 1, -1, 1});
      d.add_leaf({"b", 1, 2, 1});
      add_cables(d, 1, "e", v - 1, 1);
      add_cables(d, 1, "f", v, -1);
      break;
    }
    case FamilyId::III_I: {
      const auto p = params.p(), u = params.u(), v = params.v();
      d.add_leaf({"a", 0, p, -1});
      add_cables(d, 0, "c", u, 1);
      add_cables(d, 0, "d", u, -1);
      d.add_edge({"gamma", 0, 1, p - 1, 3, 1, -1});
      d.add_leaf({"b", 1, 2, -1});
      add_cables(d, 1, "e", v + 1, 1);
      add_cables(d, 1, "f", v, -1);
      break;
    }
    case FamilyId::II_III: {
      const auto u = params.u(), v = params.v();
      d.add_leaf({"a", 0, 2, 1});
      add_cables(d, 0, "c", u - 1, 1);
      add_cables(d, 0, "d", u, -1);
      d.add_edge({"gamma", 0, 1, 1, 3, 1, -1});
      d.add_leaf({"b", 1, 2, -1});
      add_cables(d, 1, "e", v + 1, 1);
      add_cables(d, 1, "f", v, -1);
      break;
    }
  }
  d.check();
  return d;
}

std::int64_t linking_number(const SpliceDiagram& d, std::size_t leaf_i, std::size_t leaf_j) {
  check_leaf(d, leaf_i);
  check_leaf(d, leaf_j);
  if (leaf_i == leaf_j) throw Error(ErrorCode::invalid_argument, "linking number of a leaf with itself");
  return path_linking(d, d.leaves()[leaf_i].node, leaf_i, leaf_j);
}

std::int64_t fiber_linking_number(const SpliceDiagram& d, std::size_t node, std::size_t leaf) {
  check_leaf(d, leaf);
  if (node >= d.node_count()) throw Error(ErrorCode::invalid_argument, "node index out of range");
  return path_linking(d, node, std::nullopt, leaf);
}

std::int64_t fiber_degree(const SpliceDiagram& d, std::size_t node) {
  std::int64_t l = 0;
  for (std::size_t i = 0; i < d.leaves().size(); ++i)
    l += d.leaves()[i].multiplicity * fiber_linking_number(d, node, i);
  return l;
}

bool is_fibered(const SpliceDiagram& d) {
  for (std::size_t v = 0; v < d.node_count(); ++v)
    if (fiber_degree(d, v) == 0) return false;
  return true;
}

std::int64_t dual_multiplicity(const SpliceDiagram& d, std::size_t leaf) {
  check_leaf(d, leaf);
  std::int64_t m = 0;
  for (std::size_t j = 0; j < d.leaves().size(); ++j)
    if (j != leaf) m += d.leaves()[j].multiplicity * linking_number(d, leaf, j);
  return m;
}

bool check_splice_compatibility(const SpliceDiagram& d1, std::size_t leaf1,
                                const SpliceDiagram& d2, std::size_t leaf2) {
  check_leaf(d1, leaf1);
  check_leaf(d2, leaf2);
  return d1.leaves()[leaf1].multiplicity == dual_multiplicity(d2, leaf2) &&
         d2.leaves()[leaf2].multiplicity == dual_multiplicity(d1, leaf1);
}

BigRational boundary_twist(const SpliceDiagram& d, std::size_t leaf) {
  check_leaf(d, leaf);
  const Leaf& s = d.leaves()[leaf];
  const std::int64_t l = fiber_degree(d, s.node);
  if (l == 0) throw Error(ErrorCode::not_fibered, "fiber degree vanishes at node " + std::to_string(s.node));
  const std::int64_t delta = gcd_nonneg(s.multiplicity, dual_multiplicity(d, leaf));
  BigRational t = make_rational(-delta * s.weight, s.multiplicity * l);
  return t;
}

BigRational separating_torus_twist(const SpliceDiagram& d, std::size_t edge) {
  if (edge >= d.edges().size()) throw Error(ErrorCode::invalid_argument, "edge index out of range");
  const SpliceEdge& e = d.edges()[edge];
  const std::int64_t l1 = fiber_degree(d, e.node_a);
  const std::int64_t l2 = fiber_degree(d, e.node_b);
  if (l1 == 0 || l2 == 0) throw Error(ErrorCode::not_fibered, "fiber degree vanishes at a splice node");
  const std::int64_t delta = gcd_nonneg(e.mult_a, e.mult_b);
  const std::int64_t others_a = off_path_weight(d, e.node_a, {}, {edge});
  const std::int64_t others_b = off_path_weight(d, e.node_b, {}, {edge});
  return make_rational(-delta * (e.weight_a * e.weight_b - others_a * others_b), l1 * l2);
}

BigRational separating_torus_twist(FamilyId family, const FamilyParams& params, std::size_t edge) {
  if (!is_spliced(family))
    throw Error(ErrorCode::invalid_argument,
                "family " + std::string(family_name(family)) + " has no separating torus");
  return separating_torus_twist(build_family_diagram(family, params), edge);
}

std::string MonodromyWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ' ';
    os << factors[i].label;
    if (factors[i].exponent != 1) os << '^' << factors[i].exponent;
  }
  return os.str();
}

MonodromyWord monodromy_word(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  MonodromyWord word;
  auto add = [&](const std::string& label, std::int64_t exponent) {
    word.factors.push_back({label, exponent});
  };
  auto cables = [&](const std::string& prefix, std::int64_t count, std::int64_t exponent) {
    for (std::int64_t i = 1; i <= count; ++i) add(prefix + std::to_string(i), exponent);
  };
  switch (family) {
    case FamilyId::I:
      add("a", params.p());
      add("b", -(params.p() - 1));
      cables("c", params.u(), -1);
      cables("d", params.u(), 1);
      break;
    case FamilyId::II:
      add("a", -params.q());
      add("b", -1);
      cables("c", params.u() - 1, -1);
      cables("d", params.u(), 1);
      break;
    case FamilyId::III:
      add("a", 3);
      add("b", 2);
      cables("c", params.u() + 1, -1);
      cables("d", params.u(), 1);
      break;
    case FamilyId::I_I:
      add("a", -(params.p() - 1));
      cables("c", params.u(), -1);
      cables("d", params.u(), 1);
      add("gamma", -(params.q() - params.p()));
      add("b", params.q());
      cables("e", params.v(), -1);
      cables("f", params.v(), 1);
      break;
    case FamilyId::I_I_I:
      add("a", -(params.p() - 1));
      cables("c", params.u(), -1);
      cables("d", params.u(), 1);
      add("gamma", -(params.q() - params.p()));
      cables("e", params.v(), -1);
      cables("f", params.v(), 1);
      add("theta", -(params.r() - params.q()));
      add("b", params.r());
      cables("g", params.w(), -1);
      cables("h", params.w(), 1);
      break;
    case FamilyId::II_I:
      add("a", -(params.p() - 1));
      cables("c", params.u(), -1);
      cables("d", params.u(), 1);
      add("gamma", params.p() - 2);
      add("b", -2);
      cables("e", params.v() - 1, -1);
      cables("f", params.v(), 1);
      break;
    case FamilyId::III_I:
      add("a", params.p());
      cables("c", params.u(), -1);
      cables("d", params.u(), 1);
      add("gamma", -(params.p() - 3));
      add("b", 2);
      cables("e", params.v() + 1, -1);
      cables("f", params.v(), 1);
      break;
    case FamilyId::II_III:
      add("a", -2);
      cables("c", params.u() - 1, -1);
      cables("d", params.u(), 1);
      add("gamma", 1);
      add("b", 2);
      cables("e", params.v() + 1, -1);
      cables("f", params.v(), 1);
      break;
  }
  word.page_punctures = static_cast<std::int64_t>(build_family_diagram(family, params).leaves().size());
  for (const auto& f : word.factors)
    if (f.exponent == 0)
      throw Error(ErrorCode::internal_consistency, "zero exponent on " + f.label);
  return word;
}

std::int64_t negative_twist_count(const MonodromyWord& word) {
  std::int64_t k = 0;
  for (const auto& f : word.factors)
    if (f.exponent < 0) k -= f.exponent;
  return k;
}

namespace {

std::string power(const char* var, std::int64_t e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string eta_power(std::int64_t e) { return e == 1 ? "η" : "η^" + std::to_string(e); }

// (x^a+η^i y^b)
std::string cable(std::int64_t xa, std::int64_t i, std::int64_t yb) {
  return "(" + power("x", xa) + "+" + eta_power(i) + " " + power("y", yb) + ")";
}

std::string cables(std::int64_t xa, std::int64_t yb, std::int64_t from, std::int64_t to) {
  std::string s;
  for (std::int64_t i = from; i <= to; ++i) s += cable(xa, i, yb);
  return s;
}

std::string f_conj_g(const std::string& f, const std::string& g) {
  if (g.empty()) return f;
  return f + " · conj(" + g + ")";
}

}  // namespace

std::int64_t eta_root_order(FamilyId family, const FamilyParams& params) {
  validate(family, params);
  switch (family) {
    case FamilyId::I:
    case FamilyId::II:
    case FamilyId::III:
      return 2 * params.u() + 1;
    case FamilyId::I_I:
      return 2 * std::max(params.u(), params.v()) + 1;
    default:
      throw Error(ErrorCode::unsupported_family,
                  "no polynomial representative for family " + std::string(family_name(family)));
  }
}

std::string real_algebraic_representative(FamilyId family, const FamilyParams& params) {
  eta_root_order(family, params);  // domain + family support
  switch (family) {
    case FamilyId::I: {
      const auto p = params.p(), u = params.u();
      return f_conj_g("y" + cables(p, p - 1, 1, u), "x" + cables(p, p - 1, u + 1, 2 * u));
    }
    case FamilyId::II: {
      const auto q = params.q(), u = params.u();
      return f_conj_g("x y" + cables(q, 1, 1, u), cables(q, 1, u + 1, 2 * u - 1));
    }
    case FamilyId::III: {
      const auto u = params.u();
      return f_conj_g(cables(3, 2, 1, u + 1), "x y" + cables(3, 2, u + 2, 2 * u + 1));
    }
    case FamilyId::I_I: {
      const auto p = params.p(), q = params.q(), u = params.u(), v = params.v();
      return f_conj_g("y" + cables(p, p - 1, 1, u) + cables(q, q - 1, 1, v),
                      "x" + cables(p, p - 1, u + 1, 2 * u) + cables(q, q - 1, v + 1, 2 * v));
    }
    default:
      break;
  }
  throw Error(ErrorCode::unsupported_family, "no polynomial representative");
}

std::string diagram_to_json(const SpliceDiagram& d, int indent) {
  json j;
  j["nodes"] = d.node_count();
  j["leaves"] = json::array();
  for (const auto& l : d.leaves())
    j["leaves"].push_back(
        {{"label", l.label}, {"node", l.node}, {"weight", l.weight}, {"multiplicity", l.multiplicity}});
  j["edges"] = json::array();
  for (const auto& e : d.edges())
    j["edges"].push_back({{"label", e.label},
                          {"nodes", {e.node_a, e.node_b}},
                          {"weights", {e.weight_a, e.weight_b}},
                          {"multiplicities", {e.mult_a, e.mult_b}}});
  return j.dump(indent);
}

SpliceDiagram diagram_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    SpliceDiagram d(j.at("nodes").get<std::size_t>());
    for (const auto& l : j.at("leaves"))
      d.add_leaf({l.at("label").get<std::string>(), l.at("node").get<std::size_t>(),
                  l.at("weight").get<std::int64_t>(), l.at("multiplicity").get<std::int64_t>()});
    for (const auto& e : j.at("edges"))
      d.add_edge({e.at("label").get<std::string>(), e.at("nodes").at(0).get<std::size_t>(),
                  e.at("nodes").at(1).get<std::size_t>(), e.at("weights").at(0).get<std::int64_t>(),
                  e.at("weights").at(1).get<std::int64_t>(),
                  e.at("multiplicities").at(0).get<std::int64_t>(),
                  e.at("multiplicities").at(1).get<std::int64_t>()});
    d.check();
    return d;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed diagram JSON: ") + ex.what());
  }
}

}  // namespace otreal
