#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otreal/family.hpp"
#include "otreal/rational.hpp"

namespace otreal {

struct Leaf {
  std::string label;  // curve label of the boundary twist it carries
  std::size_t node = 0;
  std::int64_t weight = 1;
  std::int64_t multiplicity = 1;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};

/// Splice edge between two nodes. weight_a sits at node_a. The spliced-away
/// leaves had multiplicities mult_a (on node_a's side) and mult_b.
struct SpliceEdge {
  std::string label;
  std::size_t node_a = 0;
  std::size_t node_b = 0;
  std::int64_t weight_a = 1;
  std::int64_t weight_b = 1;
  std::int64_t mult_a = 1;
  std::int64_t mult_b = 1;
  friend bool operator==(const SpliceEdge&, const SpliceEdge&) = default;
};

class SpliceDiagram {
 public:
  SpliceDiagram() = default;
  explicit SpliceDiagram(std::size_t node_count) : node_count_(node_count) {}

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<Leaf>& leaves() const noexcept { return leaves_; }
  const std::vector<SpliceEdge>& edges() const noexcept { return edges_; }

  std::size_t add_leaf(Leaf leaf);
  std::size_t add_edge(SpliceEdge edge);

  std::optional<std::size_t> find_leaf(const std::string& label) const;
  std::size_t leaf_index(const std::string& label) const;  // throws invalid_argument

  /// Connected and acyclic, leaf multiplicities nonzero, weights positive.
  void check() const;

  friend bool operator==(const SpliceDiagram&, const SpliceDiagram&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Leaf> leaves_;
  std::vector<SpliceEdge> edges_;
};

SpliceDiagram build_family_diagram(FamilyId family, const FamilyParams& params);

/// Unsigned linking number of two leaves: product of the weights adjacent to
/// the connecting path but not on it.
std::int64_t linking_number(const SpliceDiagram& d, std::size_t leaf_i, std::size_t leaf_j);

/// Linking number of a regular fiber at `node` with leaf `leaf`.
std::int64_t fiber_linking_number(const SpliceDiagram& d, std::size_t node, std::size_t leaf);

/// l = sum_i m_i lk(fiber at node, S_i).
std::int64_t fiber_degree(const SpliceDiagram& d, std::size_t node);
bool is_fibered(const SpliceDiagram& d);

/// m'_i = sum_{j != i} m_j lk(S_i, S_j).
std::int64_t dual_multiplicity(const SpliceDiagram& d, std::size_t leaf);

bool check_splice_compatibility(const SpliceDiagram& d1, std::size_t leaf1,
                                const SpliceDiagram& d2, std::size_t leaf2);

BigRational boundary_twist(const SpliceDiagram& d, std::size_t leaf);

BigRational separating_torus_twist(const SpliceDiagram& d, std::size_t edge);
BigRational separating_torus_twist(FamilyId family, const FamilyParams& params,
                                   std::size_t edge);

struct TwistFactor {
  std::string label;
  std::int64_t exponent = 0;
  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

struct MonodromyWord {
  std::vector<TwistFactor> factors;
  std::int64_t page_punctures = 0;

  /// "a^2 b^-1 c1^-1 d1"
  std::string to_string() const;
  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;
};

MonodromyWord monodromy_word(FamilyId family, const FamilyParams& params);

std::int64_t negative_twist_count(const MonodromyWord& word);

/// f * conj(g) as plain text, for I, II, III and I-I.
std::string real_algebraic_representative(FamilyId family, const FamilyParams& params);

/// Order N of the root of unity eta used by the representative (eta^N = 1).
std::int64_t eta_root_order(FamilyId family, const FamilyParams& params);

// JSON text with a fixed key order. The parser accepts exactly what
// diagram_to_json writes.
std::string diagram_to_json(const SpliceDiagram& d, int indent = 2);
SpliceDiagram diagram_from_json(const std::string& text);

}  // namespace otreal
