#pragma once

#include "degencount/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace degencount {

using Property = std::function<bool(const Graph&)>;

bool is_planar(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_forest(const Graph& g);
bool is_edgeless(const Graph& g);

struct NamedProperty {
  std::string name;
  Property predicate;
  bool minor_closed = false;
};

// connected, planar, independent-set, claw-free, acyclic, true, false.
const std::vector<NamedProperty>& property_registry();
// Throws PreconditionError for unknown names.
const NamedProperty& find_property(const std::string& name);

}  // namespace degencount
