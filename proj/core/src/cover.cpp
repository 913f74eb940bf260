#include "sscover/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sscover {

namespace {

// A root-of-unity exponent as a fraction mod 1.
struct Exponent {
  long num = 0;
  long den = 1;

  static Exponent make(long num, long den) {
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num == 0 ? den : num, den);
    return {num / g, den / g};
  }

  Exponent operator+(const Exponent &other) const {
    long d = std::lcm(den, other.den);
    return make(num * (d / den) + other.num * (d / other.den), d);
  }

  bool operator==(const Exponent &) const = default;
};

Exponent exponent_of_a(const TangentChar &t) { return Exponent::make(t.char_a, t.modulus); }
Exponent exponent_of_b(const TangentChar &t) { return Exponent::make(t.char_b, t.modulus); }

struct TangentExponents {
  bool swap = false;
  Exponent a, b;

  bool operator==(const TangentExponents &) const = default;
};

TangentExponents exponents_of(const TangentChar &t) {
  return {t.swap, exponent_of_a(t), exponent_of_b(t)};
}

// outer after inner, composing the monomial substitutions.
TangentExponents combine(const TangentExponents &outer, const TangentExponents &inner) {
  TangentExponents result;
  result.swap = outer.swap != inner.swap;
  result.a = inner.a + (inner.swap ? outer.b : outer.a);
  result.b = inner.b + (inner.swap ? outer.a : outer.b);
  return result;
}

std::map<std::string, std::string> vertex_orbit_reps(const CurveAction &a) {
  std::map<std::string, std::string> rep;  // vertex -> smallest orbit member
  for (const auto &v : a.curve.graph.vertices()) rep[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto &gen : a.group().generators()) {
      const auto &m = a.action.morphism_of(gen);
      for (const auto &v : a.curve.graph.vertices()) {
        const std::string &image = m.apply_vertex(v);
        std::string best = std::min(rep[v], rep[image]);
        if (rep[v] != best || rep[image] != best) {
          rep[v] = rep[image] = best;
          changed = true;
        }
      }
    }
  }
  return rep;
}

bool element_swaps_node(const GraphMorphism &m, const Node &node) {
  return m.apply_end(node.a) == node.b;
}

bool element_stabilizes_node(const GraphMorphism &m, const Node &node) {
  const std::string &ia = m.apply_end(node.a);
  return (ia == node.a || ia == node.b) && m.apply_end(node.b) != ia &&
         (m.apply_end(node.b) == node.a || m.apply_end(node.b) == node.b);
}

std::string join(const std::vector<std::string> &parts) {
  std::string result;
  for (const auto &p : parts) {
    if (!result.empty()) result += "; ";
    result += p;
  }
  return result;
}

bool is_klein_like(const FiniteGroup &g) {
  if (g.order() != 4) return false;
  for (const auto &e : g.elements())
    if (e.order() > 2) return false;
  return true;
}

// 1, C2 and C2 x C2 stabilisers need no tangent data.
bool orientation_fast_path(const FiniteGroup &stab) {
  return stab.order() <= 2 || is_klein_like(stab);
}

}  // namespace

Node::Node(std::string x, std::string y) {
  if (x <= y) {
    a = std::move(x);
    b = std::move(y);
  } else {
    a = std::move(y);
    b = std::move(x);
  }
}

std::vector<Node> nodes_of(const EEGraph &g) {
  std::vector<Node> result;
  for (const auto &[e, f] : edges(g)) result.push_back(Node(e, f));
  std::sort(result.begin(), result.end());
  return result;
}

TangentChar TangentChar::swap_only(bool swaps) {
  TangentChar t;
  t.swap = swaps;
  return t;
}

TangentChar TangentChar::with_chars(bool swaps, long a, long b, long modulus) {
  TangentChar t;
  t.swap = swaps;
  t.has_chars = true;
  t.char_a = a;
  t.char_b = b;
  t.modulus = modulus;
  return t;
}

std::vector<std::string> CurveAction::validate() const {
  std::vector<std::string> findings = curve.validate();
  if (!findings.empty()) return findings;
  for (const auto &finding : action.validate(curve.graph)) findings.push_back(finding);
  if (!findings.empty()) return findings;

  // decorations must be constant on vertex orbits
  for (const auto &gen : group().generators()) {
    const auto &m = action.morphism_of(gen);
    for (const auto &v : curve.graph.vertices()) {
      const std::string &image = m.apply_vertex(v);
      if (curve.components.at(v) != curve.components.at(image))
        findings.push_back("component data differs along the orbit of vertex " + v);
    }
  }

  auto reps = vertex_orbit_reps(*this);

  for (const auto &[v, decl] : quotient_genus) {
    if (!curve.graph.has_vertex(v)) {
      findings.push_back("quotient genus declared for unknown vertex: " + v);
      continue;
    }
    if (decl.genus < 0 || decl.genus > curve.components.at(v).genus)
      findings.push_back("quotient genus out of range for vertex " + v);
    if (decl.genus == 0 && !decl.ordinary)
      findings.push_back("genus-0 quotient component flagged non-ordinary at " + v);
    for (const auto &[w, other] : quotient_genus)
      if (w < v && reps.at(w) == reps.at(v) &&
          (other.genus != decl.genus || other.ordinary != decl.ordinary))
        findings.push_back("conflicting quotient genus declarations on the orbit of " + v);
  }

  for (const auto &[v, attestation] : attestations) {
    if (!curve.graph.has_vertex(v)) {
      findings.push_back("attestation for unknown vertex: " + v);
      continue;
    }
    for (const auto &g : attestation.elements)
      if (!group().contains(g))
        findings.push_back("attestation names a non-element at vertex " + v);
  }

  std::set<Node> real_nodes(nodes_of(curve.graph).begin(), nodes_of(curve.graph).end());
  for (const auto &[node, local] : node_local) {
    if (!real_nodes.count(node)) {
      findings.push_back("node-local data for a non-node: " + node.label());
      continue;
    }
    if (local.node != node)
      findings.push_back("node-local data filed under the wrong node: " + node.label());
    for (const auto &[g, data] : local.entries) {
      if (!group().contains(g)) {
        findings.push_back("node-local entry names a non-element at " + node.label());
        continue;
      }
      if (g.is_identity()) {
        findings.push_back("node-local entry for the identity at " + node.label());
        continue;
      }
      const auto &m = action.morphism_of(g);
      if (!element_stabilizes_node(m, node)) {
        findings.push_back("node-local entry for a non-stabiliser " + g.to_cycles() +
                           " at " + node.label());
        continue;
      }
      if (data.swap != element_swaps_node(m, node))
        findings.push_back("swap flag disagrees with the action for " + g.to_cycles() +
                           " at " + node.label());
      if (data.modulus < 1)
        findings.push_back("nonpositive character modulus at " + node.label());
      else if (data.has_chars &&
               (data.char_a < 0 || data.char_a >= data.modulus || data.char_b < 0 ||
                data.char_b >= data.modulus))
        findings.push_back("character out of range at " + node.label());
    }
  }

  return findings;
}

FiniteGroup node_stabilizer(const CurveAction &a, const Node &node) {
  std::vector<Permutation> members;
  for (const auto &g : a.group().elements())
    if (element_stabilizes_node(a.action.morphism_of(g), node)) members.push_back(g);
  return FiniteGroup::closure(std::move(members));
}

FiniteGroup vertex_stabilizer(const CurveAction &a, const std::string &v) {
  std::vector<Permutation> members;
  for (const auto &g : a.group().elements())
    if (a.action.morphism_of(g).apply_vertex(v) == v) members.push_back(g);
  return FiniteGroup::closure(std::move(members));
}

bool acts_nontrivially(const CurveAction &a, const Permutation &sigma,
                       const std::string &v) {
  const GraphMorphism &m = a.action.morphism_of(sigma);
  for (const auto &e : a.curve.graph.ends_of(v))
    if (m.apply_end(e) != e) return true;

  for (const auto &[node, local] : a.node_local) {
    bool touches_v =
        a.curve.graph.vertex_of(node.a) == v || a.curve.graph.vertex_of(node.b) == v;
    if (!touches_v) continue;
    auto it = local.entries.find(sigma);
    if (it == local.entries.end() || !it->second.has_chars) continue;
    const TangentChar &t = it->second;
    bool a_at_v = a.curve.graph.vertex_of(node.a) == v;
    bool b_at_v = a.curve.graph.vertex_of(node.b) == v;
    if ((a_at_v && t.char_a % t.modulus != 0) || (b_at_v && t.char_b % t.modulus != 0))
      return true;
  }

  auto it = a.attestations.find(v);
  if (it != a.attestations.end())
    for (const auto &g : it->second.elements)
      if (g == sigma) return true;
  return false;
}

std::vector<Finding> check_setup(const CurveAction &a, long p) {
  std::vector<Finding> findings;

  long n = static_cast<long>(a.group().order());
  long g = std::gcd(n, p);
  findings.push_back({"coprimality", g == 1,
                      "gcd(|G| = " + std::to_string(n) + ", p = " + std::to_string(p) +
                          ") = " + std::to_string(g)});

  std::vector<std::string> unfaithful;
  for (const auto &v : a.curve.graph.vertices()) {
    for (const auto &sigma : a.group().elements()) {
      if (sigma.is_identity()) continue;
      if (a.action.morphism_of(sigma).apply_vertex(v) != v) continue;
      if (!acts_nontrivially(a, sigma, v))
        unfaithful.push_back(sigma.to_cycles() + " on " + v);
    }
  }
  findings.push_back({"faithfulness", unfaithful.empty(),
                      unfaithful.empty()
                          ? "every component stabiliser acts faithfully"
                          : "trivial action not ruled out for: " + join(unfaithful)});

  std::vector<std::string> global_trivial;
  for (const auto &sigma : a.group().elements()) {
    if (sigma.is_identity()) continue;
    bool moves_vertex = false;
    bool nontrivial_somewhere = false;
    for (const auto &v : a.curve.graph.vertices()) {
      if (a.action.morphism_of(sigma).apply_vertex(v) != v) {
        moves_vertex = true;
        break;
      }
      if (acts_nontrivially(a, sigma, v)) nontrivial_somewhere = true;
    }
    if (!moves_vertex && !nontrivial_somewhere)
      global_trivial.push_back(sigma.to_cycles());
  }
  findings.push_back({"galois-condition", global_trivial.empty(),
                      global_trivial.empty()
                          ? "no non-identity element acts as the identity"
                          : "elements acting as the identity everywhere: " +
                                join(global_trivial)});

  return findings;
}

std::string to_string(NodeImage image) {
  return image == NodeImage::SmoothImage ? "SmoothImage" : "SingularImage";
}

std::string to_string(StabStructure s) {
  switch (s) {
    case StabStructure::Trivial: return "trivial";
    case StabStructure::Cyclic: return "cyclic";
    case StabStructure::TwoByM: return "two-by-m";
  }
  return "?";
}

NodeClass classify_node(const CurveAction &a, const Node &node) {
  NodeClass result;
  result.node = node;
  result.stabilizer = node_stabilizer(a, node);
  const FiniteGroup &stab = result.stabilizer;

  if (stab.order() == 1) {
    result.image = NodeImage::SingularImage;
    result.m = 1;
    result.structure = StabStructure::Trivial;
    return result;
  }

  bool has_swap = false;
  for (const auto &g : stab.elements())
    if (element_swaps_node(a.action.morphism_of(g), node)) {
      has_swap = true;
      break;
    }

  if (!has_swap) {
    if (!stab.is_cyclic())
      throw std::invalid_argument("non-cyclic stabiliser fixing both branches at " +
                                  node.label());
    result.image = NodeImage::SingularImage;
    result.m = stab.order();
    result.structure = StabStructure::Cyclic;
    return result;
  }

  if (stab.order() % 2 != 0)
    throw std::invalid_argument("odd-order stabiliser cannot swap branches at " +
                                node.label());
  result.image = NodeImage::SmoothImage;
  result.m = stab.order() / 2;
  if (stab.is_cyclic()) {
    result.structure = StabStructure::Cyclic;
    return result;
  }

  // the remaining legal shape is C2 x Cm: abelian, with a cyclic
  // branch-fixing kernel and an order-2 swap
  std::vector<Permutation> kernel;
  bool has_order2_swap = false;
  for (const auto &g : stab.elements()) {
    if (element_swaps_node(a.action.morphism_of(g), node)) {
      if (g.order() == 2) has_order2_swap = true;
    } else {
      kernel.push_back(g);
    }
  }
  FiniteGroup kernel_group = FiniteGroup::closure(kernel);
  if (!stab.is_abelian() || !kernel_group.is_cyclic() || !has_order2_swap ||
      kernel_group.order() != result.m)
    throw std::invalid_argument("stabiliser at " + node.label() +
                                " is neither cyclic nor C2 x Cm");
  result.structure = StabStructure::TwoByM;
  return result;
}

std::vector<Finding> check_orientation(const CurveAction &a) {
  std::vector<Finding> findings;
  for (const auto &node : nodes_of(a.curve.graph)) {
    FiniteGroup stab = node_stabilizer(a, node);
    bool fast = orientation_fast_path(stab);
    auto local_it = a.node_local.find(node);

    bool pass = true;
    std::ostringstream evidence;
    evidence << "node " << node.label() << ", stabiliser order " << stab.order();

    for (const auto &sigma : stab.elements()) {
      if (sigma.is_identity()) continue;
      const TangentChar *data = nullptr;
      if (local_it != a.node_local.end()) {
        auto it = local_it->second.entries.find(sigma);
        if (it != local_it->second.entries.end() && it->second.has_chars)
          data = &it->second;
      }
      if (data) {
        long sum = (data->char_a + data->char_b) % data->modulus;
        if (sum != 0) {
          pass = false;
          evidence << "; char sum " << data->char_a << " + " << data->char_b
                   << " != 0 mod " << data->modulus << " for " << sigma.to_cycles();
        }
      } else if (!fast) {
        pass = false;
        evidence << "; missing tangent data for " << sigma.to_cycles();
      }
    }
    if (pass && fast) evidence << " (automatic)";
    if (pass && !fast) evidence << " (tangent data checks out)";
    findings.push_back({"orientation", pass, evidence.str()});
  }
  return findings;
}

namespace {

// Character tuples must multiply along the group law wherever they are
// all supplied.
std::vector<std::string> character_consistency(const CurveAction &a) {
  std::vector<std::string> findings;
  for (const auto &[node, local] : a.node_local) {
    auto entry_exponents =
        [&](const Permutation &g) -> std::optional<TangentExponents> {
      if (g.is_identity()) return TangentExponents{};
      auto it = local.entries.find(g);
      if (it == local.entries.end() || !it->second.has_chars) return std::nullopt;
      return exponents_of(it->second);
    };
    for (const auto &[sigma, sigma_data] : local.entries) {
      if (!sigma_data.has_chars) continue;
      for (const auto &[tau, tau_data] : local.entries) {
        if (!tau_data.has_chars) continue;
        auto product = entry_exponents(sigma * tau);
        if (!product) continue;
        TangentExponents expected = combine(exponents_of(sigma_data), exponents_of(tau_data));
        if (!(expected == *product))
          findings.push_back("tangent characters are not multiplicative at " +
                             node.label() + " for " + sigma.to_cycles() + " * " +
                             tau.to_cycles());
      }
    }
  }
  return findings;
}

}  // namespace

QuotientCurve quotient_curve(const CurveAction &a) {
  QuotientResult q = quotient(a.curve.graph, a.action);

  QuotientCurve result;
  result.cover.projection = q.projection;

  // vertex orbits: members grouped by image
  std::map<std::string, std::vector<std::string>> orbit_members;
  for (const auto &v : a.curve.graph.vertices())
    orbit_members[q.projection.apply_vertex(v)].push_back(v);

  std::map<std::string, ComponentData> components;
  for (const auto &[qv, members] : orbit_members) {
    const std::string &rep = *std::min_element(members.begin(), members.end());
    const ComponentData &source = a.curve.components.at(rep);
    ComponentData image;
    if (source.genus == 0) {
      image = {0, true};
    } else {
      const QuotientGenusDecl *decl = nullptr;
      for (const auto &v : members) {
        auto it = a.quotient_genus.find(v);
        if (it != a.quotient_genus.end()) {
          decl = &it->second;
          break;
        }
      }
      if (!decl)
        throw std::invalid_argument(
            "missing quotient genus declaration for the component of " + rep);
      image = {decl->genus, decl->genus == 0 ? true : decl->ordinary};
    }
    components[qv] = image;

    VertexOrbitCover cover;
    cover.representative = rep;
    cover.orbit_size = members.size();
    cover.stabilizer_order = vertex_stabilizer(a, rep).order();
    result.cover.vertex_orbits.push_back(std::move(cover));
  }

  result.curve = SSCurve{std::move(q.graph), std::move(components)};

  // node orbits, via the projected end pairs
  std::map<std::pair<std::string, std::string>, std::vector<Node>> node_orbits;
  for (const auto &node : nodes_of(a.curve.graph)) {
    std::string pa = q.projection.apply_end(node.a);
    std::string pb = q.projection.apply_end(node.b);
    node_orbits[{std::min(pa, pb), std::max(pa, pb)}].push_back(node);
  }
  for (const auto &[_, members] : node_orbits) {
    NodeOrbitCover cover;
    cover.representative = members.front();
    cover.orbit_size = members.size();
    cover.node_class = classify_node(a, cover.representative);
    result.cover.node_orbits.push_back(std::move(cover));
  }

  return result;
}

std::map<Node, NodeLocalAction> derive_node_local(const SSCurve &curve,
                                                  const GraphAction &action) {
  std::map<Node, NodeLocalAction> result;
  for (const auto &node : nodes_of(curve.graph)) {
    NodeLocalAction local;
    local.node = node;
    for (const auto &g : action.group().elements()) {
      if (g.is_identity()) continue;
      const GraphMorphism &m = action.morphism_of(g);
      if (!element_stabilizes_node(m, node)) continue;
      local.entries.emplace(g, TangentChar::swap_only(element_swaps_node(m, node)));
    }
    if (!local.entries.empty()) result.emplace(node, std::move(local));
  }
  return result;
}

std::vector<std::string> node_structure_findings(const CurveAction &a) {
  std::vector<std::string> findings;
  for (const auto &node : nodes_of(a.curve.graph)) {
    FiniteGroup stab = node_stabilizer(a, node);
    bool has_local = a.node_local.count(node) > 0;
    if (stab.order() > 1 && !has_local)
      findings.push_back("node-local data missing for " + node.label() +
                         " (stabiliser order " + std::to_string(stab.order()) + ")");
    if (stab.order() == 1 && has_local)
      findings.push_back("node-local data present for the unstabilised " + node.label());
    try {
      classify_node(a, node);
    } catch (const std::invalid_argument &e) {
      findings.push_back(e.what());
    }
  }
  for (const auto &finding : character_consistency(a)) findings.push_back(finding);
  return findings;
}

}  // namespace sscover
