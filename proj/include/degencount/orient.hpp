#pragma once

#include "degencount/graph.hpp"

#include <functional>
#include <vector>

namespace degencount {

// Acyclic orientation of a pattern-sized graph (at most 64 vertices).
class OrientedGraph {
 public:
  OrientedGraph() = default;
  // Throws GraphError if the arcs contain a directed cycle, a loop or a
  // repeated pair.
  OrientedGraph(int n, const std::vector<Edge>& arcs);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& arcs() const { return arcs_; }
  VertexMask all() const { return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1; }
  VertexMask out(Vertex v) const { return out_[v]; }
  VertexMask in(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1; }
  // Vertices reachable from v, v included.
  VertexMask reach(Vertex v) const { return reach_[v]; }
  VertexMask reach(VertexMask set) const;
  VertexMask sources() const;
  const std::vector<Vertex>& topological_order() const { return topo_; }
  Graph underlying() const;
  // Local sources of the sub-dag induced by `set`.
  VertexMask local_sources(VertexMask set) const;

 private:
  int n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<VertexMask> out_, in_, reach_;
  std::vector<Vertex> topo_;
};

// Orients each edge u -> v with u before v in `order` (order[i] = i-th vertex).
OrientedGraph orient_by_order(const Graph& g, const std::vector<Vertex>& order);

// Calls f for every acyclic orientation, built edge by edge with cycle pruning.
void for_each_acyclic_orientation(const Graph& h, const std::function<void(const OrientedGraph&)>& f);
std::vector<OrientedGraph> acyclic_orientations(const Graph& h);

struct OrientationClass {
  OrientedGraph representative;
  std::size_t multiplicity = 1;  // orientations in the Aut(H)-orbit
};

// Acyclic orientations grouped into Aut(H)-orbits. Falls back to singleton
// classes when the automorphism group is too large to list.
std::vector<OrientationClass> orientation_classes(const Graph& h);

// t-kernel: subset of sources reaching every non-source. Greedy minimal
// choice; for a dag without non-sources returns the smallest source.
VertexMask find_kernel(const OrientedGraph& h);
bool is_kernel(const OrientedGraph& h, VertexMask k);

struct Skeleton {
  VertexMask sources = 0;
  VertexMask joints = 0;        // vertices reachable from at least two sources
  std::vector<Edge> arcs;       // (s, j) with j reachable from s
  // Skeleton as an oriented graph on compact ids; ids[i] is the original vertex.
  OrientedGraph as_dag(std::vector<Vertex>& ids) const;
};

Skeleton skeleton(const OrientedGraph& h);

}  // namespace degencount
