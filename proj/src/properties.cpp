#include "degencount/properties.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <numeric>

namespace degencount {

bool is_planar(const Graph& g) {
  if (g.num_vertices() <= 4) return true;
  if (g.num_edges() > 3 * g.num_vertices() - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph b(g.num_vertices());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    const auto& nb = g.neighbours(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l)
          if (!g.has_edge(nb[i], nb[l]) && !g.has_edge(nb[j], nb[l])) return false;
      }
  }
  return true;
}

bool is_forest(const Graph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    const Vertex a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_edgeless(const Graph& g) { return g.num_edges() == 0; }

const std::vector<NamedProperty>& property_registry() {
  static const std::vector<NamedProperty> registry = {
      {"connected", [](const Graph& g) { return is_connected(g); }, false},
      {"planar", is_planar, true},
      {"independent-set", is_edgeless, true},
      {"claw-free", is_claw_free, false},
      {"acyclic", is_forest, true},
      {"true", [](const Graph&) { return true; }, true},
      {"false", [](const Graph&) { return false; }, true},
  };
  return registry;
}

const NamedProperty& find_property(const std::string& name) {
  for (const auto& p : property_registry())
    if (p.name == name) return p;
  throw PreconditionError("unknown property: " + name);
}

}  // namespace degencount
