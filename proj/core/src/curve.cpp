#include "sscover/curve.hpp"

#include <stdexcept>

namespace sscover {

std::vector<std::string> SSCurve::validate() const {
  std::vector<std::string> findings = graph.validate();
  if (!findings.empty()) return findings;
  if (graph.vertex_count() == 0) {
    findings.push_back("curve has no components");
    return findings;
  }
  if (component_count(graph) != 1) findings.push_back("curve is not connected");
  for (const auto &v : graph.vertices()) {
    auto it = components.find(v);
    if (it == components.end()) {
      findings.push_back("component data missing for vertex: " + v);
      continue;
    }
    if (it->second.genus < 0)
      findings.push_back("negative genus at vertex: " + v);
    if (it->second.genus == 0 && !it->second.ordinary)
      findings.push_back("genus-0 component flagged non-ordinary: " + v);
  }
  for (const auto &[v, _] : components)
    if (!graph.has_vertex(v))
      findings.push_back("component data for unknown vertex: " + v);
  return findings;
}

int arithmetic_genus(const SSCurve &c) {
  if (!c.is_valid()) throw std::invalid_argument("arithmetic_genus() needs a valid curve");
  int total = betti1(c.graph);
  for (const auto &[_, data] : c.components) total += data.genus;
  return total;
}

bool is_ordinary(const SSCurve &c) {
  if (!c.is_valid()) throw std::invalid_argument("is_ordinary() needs a valid curve");
  for (const auto &[_, data] : c.components)
    if (!data.ordinary) return false;
  return true;
}

}  // namespace sscover
