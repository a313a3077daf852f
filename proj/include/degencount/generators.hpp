#pragma once

#include "degencount/graph.hpp"

#include <cstdint>
#include <string>

namespace degencount {

Graph clique(int k);
Graph independent_set(int k);
Graph path(int k);       // k vertices
Graph cycle(int k);      // k >= 3
Graph matching(int k);   // k edges, vertices 2i and 2i+1 matched
Graph biclique(int a, int b);
Graph grid(int k);       // vertex (i, j) is i * k + j
Graph star(int leaves);
// Classes of `class_size` vertices arranged in a cycle of length k; consecutive
// classes are completely joined.
Graph wreath(int k, int class_size = 1);

inline Vertex grid_vertex(int k, int i, int j) { return i * k + j; }

// Each vertex v >= 1 joins min(v, d) distinct random earlier vertices, so the
// result is at most d-degenerate.
Graph random_degenerate(int n, int d, std::uint64_t seed);
Graph random_gnp(int n, double p, std::uint64_t seed);

// Parses generator expressions such as clique:4, biclique:2,3, subdiv:clique:3:1.
// Returns false if `spec` is not a generator expression.
bool parse_generator(const std::string& spec, Graph& out);

}  // namespace degencount
