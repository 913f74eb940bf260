#ifndef SSCOVER_COVER_HPP
#define SSCOVER_COVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sscover/curve.hpp"

namespace sscover {

// An unordered node {a, b}: the two edge ends meeting at one singular
// point. Normalised so that a <= b; a == b never names a node of a
// valid graph.
struct Node {
  std::string a, b;

  Node() = default;
  Node(std::string x, std::string y);

  std::string label() const { return "{" + a + ", " + b + "}"; }

  auto operator<=>(const Node &) const = default;
};

// All nodes of a curve's graph, sorted.
std::vector<Node> nodes_of(const EEGraph &g);

// Tangent data of one stabiliser element at one node: whether it swaps
// the two branches, and optionally the two root-of-unity exponents of
// its action on the branch coordinates, as integers mod `modulus`.
struct TangentChar {
  bool swap = false;
  bool has_chars = false;
  long char_a = 0;
  long char_b = 0;
  long modulus = 1;

  static TangentChar swap_only(bool swaps);
  static TangentChar with_chars(bool swaps, long a, long b, long modulus);

  bool operator==(const TangentChar &) const = default;
};

struct NodeLocalAction {
  Node node;
  // one entry per non-identity stabiliser element
  std::map<Permutation, TangentChar> entries;

  bool operator==(const NodeLocalAction &) const = default;
};

// Declared genus of the image of a positive-genus component in the
// quotient. Not computable from the dual graph, so it is input.
struct QuotientGenusDecl {
  int genus = 0;
  bool ordinary = true;
  std::string note;

  bool operator==(const QuotientGenusDecl &) const = default;
};

// Elements attested (with a reason) to act nontrivially on a component
// they stabilise, for cases the dual graph cannot witness.
struct Attestation {
  std::vector<Permutation> elements;
  std::string note;

  bool operator==(const Attestation &) const = default;
};

// A finite group acting on a semi-stable curve: the graph action plus
// the node-local tangent data, quotient-genus declarations and
// faithfulness attestations.
struct CurveAction {
  SSCurve curve;
  GraphAction action;
  std::string group_label;
  std::map<Node, NodeLocalAction> node_local;
  std::map<std::string, QuotientGenusDecl> quotient_genus;  // by vertex
  std::map<std::string, Attestation> attestations;          // by vertex

  const FiniteGroup &group() const { return action.group(); }

  // Structural well-formedness only; hypothesis-level conditions are
  // the business of check_setup / check_orientation / classify_node.
  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }

  bool operator==(const CurveAction &) const = default;
};

// One named check with its verdict.
struct Finding {
  std::string check;
  bool pass = true;
  std::string evidence;
};

// Elements whose end map preserves {node.a, node.b} as a set.
FiniteGroup node_stabilizer(const CurveAction &a, const Node &node);

// Elements fixing the vertex.
FiniteGroup vertex_stabilizer(const CurveAction &a, const std::string &v);

// True when sigma visibly acts nontrivially on the component of `v` it
// stabilises: it moves an end of v, carries nontrivial tangent data at
// a node on v, or is attested for v.
bool acts_nontrivially(const CurveAction &a, const Permutation &sigma,
                       const std::string &v);

// The cover hypotheses that depend only on the group and the curve:
// |G| coprime to p, stabilisers faithful on components, and no
// non-identity element acting as the identity everywhere.
std::vector<Finding> check_setup(const CurveAction &a, long p);

enum class NodeImage { SingularImage, SmoothImage };
enum class StabStructure { Trivial, Cyclic, TwoByM };

std::string to_string(NodeImage image);
std::string to_string(StabStructure s);

struct NodeClass {
  Node node;
  FiniteGroup stabilizer;
  NodeImage image = NodeImage::SingularImage;
  // SingularImage: m = |Stab|; SmoothImage: m = |Stab| / 2.
  std::size_t m = 1;
  StabStructure structure = StabStructure::Trivial;
};

// Local shape of the cover at a node. SmoothImage when some stabiliser
// element swaps the two ends (the image point in the quotient is then
// smooth), SingularImage otherwise. Throws std::invalid_argument when
// the stabiliser has a shape no node of such a cover can carry
// (non-cyclic without a swap, or with a swap neither cyclic nor
// C2 x Cm).
NodeClass classify_node(const CurveAction &a, const Node &node);

// Stabilisers of order 1, 2, or Klein type pass with no tangent data;
// all supplied tangent data must satisfy char_a + char_b = 0 mod
// modulus; other stabilisers additionally require data for every
// non-identity element.
std::vector<Finding> check_orientation(const CurveAction &a);

struct VertexOrbitCover {
  std::string representative;
  std::size_t orbit_size = 1;
  std::size_t stabilizer_order = 1;  // local cover degree over the component
};

struct NodeOrbitCover {
  Node representative;
  std::size_t orbit_size = 1;
  NodeClass node_class;
};

struct CoverData {
  GraphMorphism projection;
  std::vector<VertexOrbitCover> vertex_orbits;
  std::vector<NodeOrbitCover> node_orbits;
};

struct QuotientCurve {
  SSCurve curve;
  CoverData cover;
};

// The quotient curve: quotient graph, genus 0 for images of genus-0
// components and the declared quotient genus otherwise. Throws
// std::invalid_argument when a positive-genus component lacks its
// declaration.
QuotientCurve quotient_curve(const CurveAction &a);

// Fills node_local with swap flags derived from the action, one entry
// per non-identity stabiliser element of each node whose stabiliser is
// nontrivial. Tangent characters are left unset.
std::map<Node, NodeLocalAction> derive_node_local(const SSCurve &curve,
                                                  const GraphAction &action);

// Everything classify_node can object to, in report form, plus
// node-local coverage and the multiplicativity of supplied tangent
// characters.
std::vector<std::string> node_structure_findings(const CurveAction &a);

}  // namespace sscover

#endif  // SSCOVER_COVER_HPP
