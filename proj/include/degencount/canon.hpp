#pragma once

#include "degencount/graph.hpp"

#include <string>
#include <vector>

namespace degencount {

inline constexpr int kCanonicalMaxVertices = 32;

struct CanonicalForm {
  std::string label;           // graph6 string of the canonically relabelled graph
  std::vector<Vertex> order;   // order[i] = vertex placed at canonical position i
};

CanonicalForm canonical_form(const Graph& g);
// Vertices of equal colour form the initial cells, ordered by colour value.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colouring);
std::string canonical_label(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

BigInt automorphism_count(const Graph& g);
// Explicit automorphism list, at most `limit` entries (throws BudgetExceeded past it).
std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit = 100000);

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace degencount

namespace degencount {

// One representative per isomorphism class of graphs on exactly n vertices,
// built by vertex augmentation with canonical deduplication.
std::vector<Graph> all_graphs(int n);

}  // namespace degencount
