#include "sscover/ee_graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sscover {

namespace {

// Union-find over string ids.
class Partition {
public:
  void add(const std::string &x) { parent_.emplace(x, x); }

  const std::string &find(const std::string &x) {
    std::string current = x;
    while (parent_.at(current) != current) current = parent_.at(current);
    // path compression
    std::string walk = x;
    while (parent_.at(walk) != current) {
      std::string next = parent_.at(walk);
      parent_.at(walk) = current;
      walk = next;
    }
    auto it = parent_.find(current);
    return it->first;
  }

  void merge(const std::string &a, const std::string &b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent_.at(std::max(ra, rb)) = std::min(ra, rb);
  }

  // representative -> sorted members
  std::map<std::string, std::vector<std::string>> classes() {
    std::map<std::string, std::vector<std::string>> result;
    for (const auto &[x, _] : parent_) result[find(x)].push_back(x);
    return result;
  }

private:
  std::map<std::string, std::string> parent_;
};

}  // namespace

void EEGraph::add_vertex(const std::string &v, const std::string &empty_end) {
  if (empty_end_.count(v)) throw std::invalid_argument("duplicate vertex id: " + v);
  if (end_vertex_.count(empty_end))
    throw std::invalid_argument("duplicate end id: " + empty_end);
  vertices_.push_back(v);
  empty_end_.emplace(v, empty_end);
  vertex_ends_.emplace(v, std::vector<std::string>{});
  end_vertex_.emplace(empty_end, v);
  involution_.emplace(empty_end, empty_end);
}

void EEGraph::add_vertex(const std::string &v) { add_vertex(v, v + ".e"); }

void EEGraph::add_end(const std::string &v, const std::string &end) {
  if (!empty_end_.count(v)) throw std::invalid_argument("unknown vertex: " + v);
  if (end_vertex_.count(end)) throw std::invalid_argument("duplicate end id: " + end);
  vertex_ends_.at(v).push_back(end);
  end_vertex_.emplace(end, v);
}

void EEGraph::pair_ends(const std::string &a, const std::string &b) {
  if (!end_vertex_.count(a)) throw std::invalid_argument("unknown end: " + a);
  if (!end_vertex_.count(b)) throw std::invalid_argument("unknown end: " + b);
  involution_[a] = b;
  involution_[b] = a;
}

bool EEGraph::has_vertex(const std::string &v) const { return empty_end_.count(v) > 0; }

bool EEGraph::has_end(const std::string &end) const { return end_vertex_.count(end) > 0; }

const std::string &EEGraph::empty_end_of(const std::string &v) const {
  auto it = empty_end_.find(v);
  if (it == empty_end_.end()) throw std::invalid_argument("unknown vertex: " + v);
  return it->second;
}

const std::string &EEGraph::vertex_of(const std::string &end) const {
  auto it = end_vertex_.find(end);
  if (it == end_vertex_.end()) throw std::invalid_argument("unknown end: " + end);
  return it->second;
}

const std::vector<std::string> &EEGraph::ends_of(const std::string &v) const {
  auto it = vertex_ends_.find(v);
  if (it == vertex_ends_.end()) throw std::invalid_argument("unknown vertex: " + v);
  return it->second;
}

bool EEGraph::is_empty_end(const std::string &end) const {
  const std::string &v = vertex_of(end);
  return empty_end_.at(v) == end;
}

const std::string &EEGraph::partner(const std::string &end) const {
  auto it = involution_.find(end);
  if (it == involution_.end())
    throw std::invalid_argument("end has no involution partner: " + end);
  return it->second;
}

std::vector<std::string> EEGraph::all_ends() const {
  std::vector<std::string> result;
  for (const auto &v : vertices_) {
    result.push_back(empty_end_.at(v));
    for (const auto &e : vertex_ends_.at(v)) result.push_back(e);
  }
  return result;
}

std::vector<std::string> EEGraph::validate() const {
  std::vector<std::string> findings;
  for (const auto &v : vertices_) {
    const std::string &empty = empty_end_.at(v);
    auto it = involution_.find(empty);
    if (it == involution_.end() || it->second != empty)
      findings.push_back("empty end not fixed by the involution: " + empty);
  }
  for (const auto &[end, v] : end_vertex_) {
    auto it = involution_.find(end);
    if (it == involution_.end()) {
      findings.push_back("unpaired end: " + end);
      continue;
    }
    const std::string &image = it->second;
    if (!end_vertex_.count(image)) {
      findings.push_back("involution image is not an end: " + end + " -> " + image);
      continue;
    }
    auto back = involution_.find(image);
    if (back == involution_.end() || back->second != end)
      findings.push_back("involution is not self-inverse at: " + end);
    bool is_empty = (empty_end_.at(v) == end);
    if (!is_empty && image == end)
      findings.push_back("stray fixed point: non-empty end " + end +
                         " is fixed by the involution");
    if (is_empty && image != end)
      findings.push_back("empty end not fixed by the involution: " + end);
  }
  return findings;
}

GraphMorphism GraphMorphism::identity(const EEGraph &g) {
  GraphMorphism m;
  for (const auto &v : g.vertices()) m.vertex_map[v] = v;
  for (const auto &e : g.all_ends()) m.end_map[e] = e;
  return m;
}

const std::string &GraphMorphism::apply_vertex(const std::string &v) const {
  auto it = vertex_map.find(v);
  if (it == vertex_map.end())
    throw std::invalid_argument("morphism undefined on vertex: " + v);
  return it->second;
}

const std::string &GraphMorphism::apply_end(const std::string &e) const {
  auto it = end_map.find(e);
  if (it == end_map.end()) throw std::invalid_argument("morphism undefined on end: " + e);
  return it->second;
}

std::vector<std::string> GraphMorphism::validate(const EEGraph &source,
                                                 const EEGraph &target) const {
  std::vector<std::string> findings;
  for (const auto &v : source.vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) {
      findings.push_back("vertex map undefined on: " + v);
      continue;
    }
    if (!target.has_vertex(it->second))
      findings.push_back("vertex map leaves the target: " + v + " -> " + it->second);
  }
  for (const auto &e : source.all_ends()) {
    auto it = end_map.find(e);
    if (it == end_map.end()) {
      findings.push_back("end map undefined on: " + e);
      continue;
    }
    const std::string &image = it->second;
    if (!target.has_end(image)) {
      findings.push_back("end map leaves the target: " + e + " -> " + image);
      continue;
    }
    auto vit = vertex_map.find(source.vertex_of(e));
    if (vit != vertex_map.end() && target.vertex_of(image) != vit->second)
      findings.push_back("end map is not over the vertex map at: " + e);
  }
  // equivariance with the involutions
  for (const auto &e : source.all_ends()) {
    auto it = end_map.find(e);
    if (it == end_map.end()) continue;
    auto pit = end_map.find(source.partner(e));
    if (pit == end_map.end()) continue;
    if (!target.has_end(it->second)) continue;
    if (target.partner(it->second) != pit->second)
      findings.push_back("end map does not commute with the involutions at: " + e);
  }
  return findings;
}

GraphMorphism compose(const GraphMorphism &outer, const GraphMorphism &inner) {
  GraphMorphism result;
  for (const auto &[v, image] : inner.vertex_map)
    result.vertex_map[v] = outer.apply_vertex(image);
  for (const auto &[e, image] : inner.end_map) result.end_map[e] = outer.apply_end(image);
  return result;
}

GraphAction::GraphAction(FiniteGroup group, std::map<Permutation, GraphMorphism> morphisms)
    : group_(std::move(group)), morphisms_(std::move(morphisms)) {}

GraphAction GraphAction::generate(
    const EEGraph &graph, FiniteGroup group,
    const std::vector<std::pair<Permutation, GraphMorphism>> &generator_morphisms) {
  std::map<Permutation, GraphMorphism> morphisms;
  Permutation id = group.identity();
  morphisms.emplace(id, GraphMorphism::identity(graph));
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation current = frontier.front();
    frontier.pop_front();
    const GraphMorphism current_morphism = morphisms.at(current);
    for (const auto &[gen, gen_morphism] : generator_morphisms) {
      Permutation next = gen * current;
      if (!morphisms.count(next)) {
        morphisms.emplace(next, compose(gen_morphism, current_morphism));
        frontier.push_back(next);
      }
    }
  }
  if (morphisms.size() != group.order())
    throw std::invalid_argument(
        "generator morphisms do not reach every group element");
  return GraphAction(std::move(group), std::move(morphisms));
}

GraphAction GraphAction::trivial(const EEGraph &graph, FiniteGroup group) {
  std::map<Permutation, GraphMorphism> morphisms;
  GraphMorphism id = GraphMorphism::identity(graph);
  for (const auto &g : group.elements()) morphisms.emplace(g, id);
  return GraphAction(std::move(group), std::move(morphisms));
}

const GraphMorphism &GraphAction::morphism_of(const Permutation &g) const {
  auto it = morphisms_.find(g);
  if (it == morphisms_.end())
    throw std::invalid_argument("no morphism stored for group element " + g.to_cycles());
  return it->second;
}

std::vector<std::string> GraphAction::validate(const EEGraph &graph) const {
  std::vector<std::string> findings;
  if (morphisms_.size() != group_.order())
    findings.push_back("action does not cover every group element");
  auto id_it = morphisms_.find(group_.identity());
  if (id_it == morphisms_.end() || id_it->second != GraphMorphism::identity(graph))
    findings.push_back("identity element does not act as the identity morphism");
  for (const auto &[g, morphism] : morphisms_) {
    for (const auto &finding : morphism.validate(graph, graph))
      findings.push_back("element " + g.to_cycles() + ": " + finding);
    // bijectivity on vertices and ends
    std::set<std::string> vertex_images, end_images;
    for (const auto &[_, img] : morphism.vertex_map) vertex_images.insert(img);
    for (const auto &[_, img] : morphism.end_map) end_images.insert(img);
    if (vertex_images.size() != graph.vertex_count() ||
        end_images.size() != graph.all_ends().size())
      findings.push_back("element " + g.to_cycles() + ": morphism is not bijective");
  }
  for (const auto &gen : group_.generators()) {
    auto gen_it = morphisms_.find(gen);
    if (gen_it == morphisms_.end()) continue;
    for (const auto &[h, morphism_h] : morphisms_) {
      Permutation product = gen * h;
      auto pit = morphisms_.find(product);
      if (pit == morphisms_.end()) continue;
      if (pit->second != compose(gen_it->second, morphism_h))
        findings.push_back("action is not a homomorphism at " + gen.to_cycles() +
                           " * " + h.to_cycles());
    }
  }
  return findings;
}

std::vector<std::pair<std::string, std::string>> edges(const EEGraph &g) {
  if (!g.is_valid()) throw std::invalid_argument("edges() needs a valid graph");
  std::set<std::pair<std::string, std::string>> result;
  for (const auto &v : g.vertices()) {
    for (const auto &e : g.ends_of(v)) {
      const std::string &p = g.partner(e);
      result.insert({std::min(e, p), std::max(e, p)});
    }
  }
  return {result.begin(), result.end()};
}

int component_count(const EEGraph &g) {
  Partition part;
  for (const auto &v : g.vertices()) part.add(v);
  for (const auto &v : g.vertices())
    for (const auto &e : g.ends_of(v)) part.merge(v, g.vertex_of(g.partner(e)));
  return static_cast<int>(part.classes().size());
}

int betti1(const EEGraph &g) {
  if (!g.is_valid()) throw std::invalid_argument("betti1() needs a valid graph");
  int e = static_cast<int>(edges(g).size());
  int v = static_cast<int>(g.vertex_count());
  return e - v + component_count(g);
}

QuotientResult quotient(const EEGraph &g, const GraphAction &action) {
  if (!g.is_valid()) throw std::invalid_argument("quotient() needs a valid graph");
  if (!action.validate(g).empty())
    throw std::invalid_argument("quotient() needs a valid action");

  Partition vertex_orbits, end_orbits;
  for (const auto &v : g.vertices()) vertex_orbits.add(v);
  for (const auto &e : g.all_ends()) end_orbits.add(e);
  for (const auto &gen : action.group().generators()) {
    const GraphMorphism &m = action.morphism_of(gen);
    for (const auto &v : g.vertices()) vertex_orbits.merge(v, m.apply_vertex(v));
    for (const auto &e : g.all_ends()) end_orbits.merge(e, m.apply_end(e));
  }

  auto orbit_name = [](const std::string &representative) {
    return "orbit:" + representative;
  };

  GraphMorphism projection;
  EEGraph result;

  // vertex orbits, in sorted representative order
  auto vclasses = vertex_orbits.classes();
  for (const auto &[rep, members] : vclasses) {
    std::string qv = orbit_name(rep);
    // the empty ends of the orbit form one end orbit; it names the
    // quotient empty end
    std::string empty_rep = end_orbits.find(g.empty_end_of(rep));
    result.add_vertex(qv, orbit_name(empty_rep));
    for (const auto &v : members) projection.vertex_map[v] = qv;
  }

  // decide, per end orbit, whether the induced involution fixes it
  auto eclasses = end_orbits.classes();
  std::map<std::string, std::string> induced;  // orbit rep -> partner orbit rep
  for (const auto &[rep, members] : eclasses)
    induced[rep] = end_orbits.find(g.partner(rep));

  for (const auto &[rep, members] : eclasses) {
    const std::string &vertex_rep = vertex_orbits.find(g.vertex_of(rep));
    std::string qv = orbit_name(vertex_rep);
    bool empty_orbit = g.is_empty_end(rep);
    bool merged = !empty_orbit && induced.at(rep) == rep;
    std::string image;
    if (empty_orbit || merged) {
      image = result.empty_end_of(qv);
    } else {
      image = orbit_name(rep);
      result.add_end(qv, image);
    }
    for (const auto &e : members) projection.end_map[e] = image;
  }

  for (const auto &[rep, partner_rep] : induced) {
    if (g.is_empty_end(rep) || rep == partner_rep) continue;
    result.pair_ends(orbit_name(rep), orbit_name(partner_rep));
  }

  return {std::move(result), std::move(projection)};
}

namespace {

struct VertexProfile {
  int degree = 0;      // number of non-empty ends
  int loop_ends = 0;   // ends whose partner sits at the same vertex
  bool operator==(const VertexProfile &) const = default;
  auto operator<=>(const VertexProfile &) const = default;
};

VertexProfile profile_of(const EEGraph &g, const std::string &v) {
  VertexProfile p;
  for (const auto &e : g.ends_of(v)) {
    ++p.degree;
    if (g.vertex_of(g.partner(e)) == v) ++p.loop_ends;
  }
  return p;
}

int multiplicity(const EEGraph &g, const std::string &u, const std::string &v) {
  int count = 0;
  for (const auto &e : g.ends_of(u))
    if (g.vertex_of(g.partner(e)) == v && (u != v || e < g.partner(e))) ++count;
  return count;
}

// Extends a vertex bijection to an end bijection by pairing off edges
// between corresponding vertex pairs.
std::optional<GraphMorphism> extend_to_ends(
    const EEGraph &a, const EEGraph &b, const std::map<std::string, std::string> &vmap) {
  GraphMorphism result;
  result.vertex_map = vmap;
  for (const auto &[v, image] : vmap) result.end_map[a.empty_end_of(v)] = b.empty_end_of(image);

  // bucket edges by their (unordered) vertex pair
  using Bucket = std::vector<std::pair<std::string, std::string>>;
  std::map<std::pair<std::string, std::string>, Bucket> buckets_a, buckets_b;
  for (const auto &[e, f] : edges(a)) {
    std::string u = a.vertex_of(e), v = a.vertex_of(f);
    buckets_a[{std::min(u, v), std::max(u, v)}].push_back({e, f});
  }
  for (const auto &[e, f] : edges(b)) {
    std::string u = b.vertex_of(e), v = b.vertex_of(f);
    buckets_b[{std::min(u, v), std::max(u, v)}].push_back({e, f});
  }

  for (auto &[pair_a, bucket_a] : buckets_a) {
    std::string x = vmap.at(pair_a.first), y = vmap.at(pair_a.second);
    auto key = std::make_pair(std::min(x, y), std::max(x, y));
    auto it = buckets_b.find(key);
    if (it == buckets_b.end() || it->second.size() != bucket_a.size()) return std::nullopt;
    const Bucket &bucket_b = it->second;
    for (std::size_t i = 0; i < bucket_a.size(); ++i) {
      auto [e, f] = bucket_a[i];
      auto [p, q] = bucket_b[i];
      // orient the target edge to match the source vertices
      if (b.vertex_of(p) != vmap.at(a.vertex_of(e))) std::swap(p, q);
      result.end_map[e] = p;
      result.end_map[f] = q;
    }
  }
  return result;
}

}  // namespace

std::optional<GraphMorphism> find_isomorphism(const EEGraph &a, const EEGraph &b) {
  if (a.vertex_count() > 64 || b.vertex_count() > 64)
    throw std::length_error("isomorphism search is capped at 64 vertices");
  if (!a.is_valid() || !b.is_valid())
    throw std::invalid_argument("find_isomorphism() needs valid graphs");
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  if (edges(a).size() != edges(b).size()) return std::nullopt;

  std::vector<std::string> va = a.vertices(), vb = b.vertices();
  std::vector<VertexProfile> pa, pb;
  for (const auto &v : va) pa.push_back(profile_of(a, v));
  for (const auto &v : vb) pb.push_back(profile_of(b, v));
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // most-constrained-first: high degree first
  std::vector<std::size_t> order(va.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return pa[i] > pa[j] || (pa[i] == pa[j] && va[i] < va[j]);
  });

  std::map<std::string, std::string> vmap;
  std::set<std::string> used;

  std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    std::size_t i = order[depth];
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (used.count(vb[j]) || pb[j] != pa[i]) continue;
      bool consistent = true;
      for (const auto &[u, image] : vmap) {
        if (multiplicity(a, va[i], u) != multiplicity(b, vb[j], image)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      vmap[va[i]] = vb[j];
      used.insert(vb[j]);
      if (assign(depth + 1)) return true;
      vmap.erase(va[i]);
      used.erase(vb[j]);
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  return extend_to_ends(a, b, vmap);
}

bool is_isomorphic(const EEGraph &a, const EEGraph &b) {
  return find_isomorphism(a, b).has_value();
}

namespace {

std::string dot_id(const std::string &id) {
  bool bare = !id.empty() && !std::isdigit(static_cast<unsigned char>(id.front()));
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') bare = false;
  if (bare) return id;
  std::string quoted = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') quoted.push_back('\\');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

}  // namespace

std::string to_dot(const EEGraph &g) {
  std::ostringstream out;
  out << "graph {\n";
  for (const auto &v : g.vertices()) out << "  " << dot_id(v) << ";\n";
  for (const auto &[e, f] : edges(g))
    out << "  " << dot_id(g.vertex_of(e)) << " -- " << dot_id(g.vertex_of(f)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sscover
