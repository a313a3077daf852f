#pragma once

#include "degencount/orient.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace degencount {

// Rooted tree of bags. parent[root] == -1.
struct BagTree {
  std::vector<int> parent;
  std::vector<std::vector<Vertex>> bags;

  int size() const { return static_cast<int>(bags.size()); }
  int root() const;
  int width() const;  // largest bag size
  std::vector<std::vector<int>> children() const;
  // Throws GraphError unless the parent array describes one rooted tree.
  void check_tree() const;
};

// Generalised dag tree decomposition: bags are arbitrary vertex sets, judged
// through the sets of vertices they reach.
using DagTreeDecomposition = BagTree;

struct DtdCheck {
  bool ok = true;
  int clause = 0;  // 0 tree shape, 1 bag contents, 2 coverage, 3 path condition
  std::string message;
  int node = -1, node1 = -1, node2 = -1;  // for clause 3: node on the path between node1 and node2
  Vertex vertex = -1;
};

DtdCheck validate_dtd(const OrientedGraph& h, const DagTreeDecomposition& t);

// Root bag K, one child {s} for each source outside K.
DagTreeDecomposition dtd_from_kernel(const OrientedGraph& h, VertexMask kernel);
DagTreeDecomposition kernel_dtd(const OrientedGraph& h);

inline constexpr int kDagTreewidthMaxVertices = 12;

struct DagTreewidth {
  int width = 0;
  DagTreeDecomposition dtd;
};

// Exact dag treewidth by search over trees of reachability sets.
DagTreewidth dag_treewidth(const OrientedGraph& h, int max_vertices = kDagTreewidthMaxVertices);

// Isomorphism-keyed memo for the tau parameters.
struct TauCache {
  std::map<std::string, int> tau1, tau2, tau3;
};

// Max over acyclic orientations of the dag treewidth.
int tau1(const Graph& h, TauCache* cache = nullptr);
// Max of tau1 over quotients without self-loops.
int tau2(const Graph& h, TauCache* cache = nullptr);
// Max of tau2 over edge-supergraphs on the same vertex set.
int tau3(const Graph& h, TauCache* cache = nullptr);

// "id parent_id: v1 v2 ..." per node, root parent -1.
BagTree read_bag_tree(std::istream& in);
void write_bag_tree(std::ostream& out, const BagTree& t);

}  // namespace degencount
