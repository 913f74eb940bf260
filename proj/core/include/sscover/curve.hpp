#ifndef SSCOVER_CURVE_HPP
#define SSCOVER_CURVE_HPP

#include <map>
#include <string>
#include <vector>

#include "sscover/ee_graph.hpp"

namespace sscover {

struct ComponentData {
  int genus = 0;
  bool ordinary = true;

  bool operator==(const ComponentData &) const = default;
};

// A semi-stable curve as its decorated dual graph: one vertex per
// irreducible component, one edge per node, each vertex carrying the
// geometric genus of the component and an ordinarity flag. Genus-0
// components are ordinary by force.
struct SSCurve {
  EEGraph graph;
  std::map<std::string, ComponentData> components;

  std::vector<std::string> validate() const;
  bool is_valid() const { return validate().empty(); }

  bool operator==(const SSCurve &) const = default;
};

// First Betti number of the dual graph plus the component genera.
int arithmetic_genus(const SSCurve &c);

// A semi-stable curve is ordinary exactly when every component is.
bool is_ordinary(const SSCurve &c);

}  // namespace sscover

#endif  // SSCOVER_CURVE_HPP
