#ifndef SSCOVER_EE_GRAPH_HPP
#define SSCOVER_EE_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sscover/finite_group.hpp"

namespace sscover {

// A graph given by vertices and per-vertex edge-end sets. Every vertex
// owns one distinguished empty end; the involution pairs the remaining
// ends into edges and fixes exactly the empty ends. Loops and parallel
// edges are first-class. Vertex and end identifiers are opaque strings
// sharing one global namespace per kind.
//
// Construction is unchecked so that invalid graphs can be represented;
// validate() reports every violated axiom.
class EEGraph {
public:
  // Adds `v` together with its distinguished empty end.
  void add_vertex(const std::string &v, const std::string &empty_end);
  // Convenience overload naming the empty end "<v>.e".
  void add_vertex(const std::string &v);

  // Adds a non-empty end at `v`. It stays unpaired (and invalid) until
  // pair_ends() names its partner.
  void add_end(const std::string &v, const std::string &end);

  // Declares {a, b} as the two ends of one edge: n(a) = b, n(b) = a.
  // a == b is representable and reported by validate().
  void pair_ends(const std::string &a, const std::string &b);

  const std::vector<std::string> &vertices() const { return vertices_; }
  bool has_vertex(const std::string &v) const;
  bool has_end(const std::string &end) const;
  const std::string &empty_end_of(const std::string &v) const;
  const std::string &vertex_of(const std::string &end) const;
  // Non-empty ends of `v`, in insertion order.
  const std::vector<std::string> &ends_of(const std::string &v) const;
  bool is_empty_end(const std::string &end) const;
  // n(end); an unpaired non-empty end maps to itself only for empties,
  // otherwise throws.
  const std::string &partner(const std::string &end) const;
  // All ends, vertices in insertion order, empty end first.
  std::vector<std::string> all_ends() const;

  std::size_t vertex_count() const { return vertices_.size(); }

  // One finding per violated axiom; empty means valid.
  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }

  bool operator==(const EEGraph &) const = default;

private:
  std::vector<std::string> vertices_;                            // insertion order
  std::map<std::string, std::string> empty_end_;                 // vertex -> empty end
  std::map<std::string, std::vector<std::string>> vertex_ends_;  // vertex -> non-empty ends
  std::map<std::string, std::string> end_vertex_;                // end -> vertex
  std::map<std::string, std::string> involution_;                // end -> partner
};

// A pair of structure-preserving maps between graphs. Plain data;
// validate() checks the axioms against concrete endpoints.
struct GraphMorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> end_map;

  static GraphMorphism identity(const EEGraph &g);

  const std::string &apply_vertex(const std::string &v) const;
  const std::string &apply_end(const std::string &e) const;

  std::vector<std::string> validate(const EEGraph &source, const EEGraph &target) const;

  bool operator==(const GraphMorphism &) const = default;
};

// outer after inner.
GraphMorphism compose(const GraphMorphism &outer, const GraphMorphism &inner);

// A group homomorphism into the automorphisms of one graph, stored as
// one morphism per group element.
class GraphAction {
public:
  // Extends morphisms given on a generating set to the whole group by
  // composing along products. Throws std::invalid_argument when the
  // given permutations do not generate the group.
  static GraphAction generate(
      const EEGraph &graph, FiniteGroup group,
      const std::vector<std::pair<Permutation, GraphMorphism>> &generator_morphisms);

  // Every element acts as the identity morphism.
  static GraphAction trivial(const EEGraph &graph, FiniteGroup group);

  const FiniteGroup &group() const { return group_; }
  const GraphMorphism &morphism_of(const Permutation &g) const;

  // Checks: identity element acts as identity; morphism_of(g * h) =
  // morphism_of(g) o morphism_of(h) for every generator g and element
  // h; every morphism is a valid automorphism of `graph`.
  std::vector<std::string> validate(const EEGraph &graph) const;

  bool operator==(const GraphAction &) const = default;

private:
  GraphAction(FiniteGroup group, std::map<Permutation, GraphMorphism> morphisms);

  FiniteGroup group_;
  std::map<Permutation, GraphMorphism> morphisms_;
};

// The 2-element involution orbits {e, n(e)}, each listed once with
// first < second; sorted. Throws std::invalid_argument on an invalid
// graph.
std::vector<std::pair<std::string, std::string>> edges(const EEGraph &g);

// Number of connected components (isolated vertices count).
int component_count(const EEGraph &g);

// |edges| - |vertices| + |components|.
int betti1(const EEGraph &g);

struct QuotientResult {
  EEGraph graph;
  GraphMorphism projection;
};

// Quotient by a group action: vertices and ends become orbits, and
// end orbits that the induced involution fixes are merged into the
// empty end of their vertex orbit. Output identifiers are
// "orbit:" + the smallest member id. Throws std::invalid_argument on
// invalid inputs.
QuotientResult quotient(const EEGraph &g, const GraphAction &action);

// Backtracking isomorphism search with degree pruning; intended for
// graphs of at most 64 vertices (throws std::length_error above).
std::optional<GraphMorphism> find_isomorphism(const EEGraph &a, const EEGraph &b);
bool is_isomorphic(const EEGraph &a, const EEGraph &b);

// DOT multigraph rendering; empty ends omitted, loops rendered.
std::string to_dot(const EEGraph &g);

}  // namespace sscover

#endif  // SSCOVER_EE_GRAPH_HPP
