#pragma once

#include "degencount/types.hpp"

#include <functional>
#include <vector>

namespace degencount {

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  Graph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  // Sorted, each edge stored as (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  int max_degree() const;

  // Requires n <= 64.
  std::vector<VertexMask> adjacency_masks() const;

  bool operator==(const Graph& other) const { return adj_.size() == other.adj_.size() && edges_ == other.edges_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

Graph graph_from_masks(const std::vector<VertexMask>& adj);

struct DegeneracyOrder {
  std::vector<Vertex> order;     // order[i] = i-th removed vertex
  std::vector<int> position;     // position[v] = index of v in order
  int degeneracy = 0;
};

// Smallest-degree-last ordering in O(n + m). Every vertex has at most
// `degeneracy` neighbours later in the order.
DegeneracyOrder degeneracy_order(const Graph& g);
int degeneracy(const Graph& g);

struct Partition {
  std::vector<std::vector<Vertex>> blocks;
};

std::vector<int> block_index(const Partition& p, int n);
Partition partition_from_blocks(const std::vector<int>& block_of);
// Throws SelfLoopError if some block contains an edge.
Graph quotient(const Graph& g, const Partition& p);
Graph quotient(const Graph& g, const std::vector<int>& block_of);
bool quotient_has_self_loop(const Graph& g, const std::vector<int>& block_of);

// Calls f(block_of, number_of_blocks) for every set partition of {0..n-1},
// each given as a restricted growth string.
void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& f);
// Moebius value of the partition lattice between the bottom and the partition.
BigInt partition_moebius(const std::vector<int>& block_of, int blocks);

// Vertex (g, h) is numbered g * |V(H)| + h.
Graph tensor_product(const Graph& g, const Graph& h);

// Replaces every edge by a path with `times` internal vertices. Original
// vertices keep their ids; the internal vertices of edges()[i] follow in
// order from the smaller endpoint.
Graph subdivide(const Graph& g, int times);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
InducedSubgraph remove_vertices(const Graph& g, const std::vector<char>& removed);
InducedSubgraph remove_colour_classes(const Graph& g, const std::vector<int>& colouring,
                                      const std::vector<int>& colours);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Graph add_edges(const Graph& g, const std::vector<Edge>& extra);
Graph remove_edge(const Graph& g, const Edge& e);
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);  // v -> perm[v]

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const std::vector<Vertex>& vertices);
bool is_independent_set(const Graph& g, const std::vector<Vertex>& vertices);

// Fails with the offending edge if some edge maps to a non-edge.
bool is_homomorphism(const Graph& from, const Graph& to, const std::vector<Vertex>& map);

}  // namespace degencount
