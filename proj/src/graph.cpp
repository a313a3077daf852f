#include "degencount/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace degencount {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<VertexMask> Graph::adjacency_masks() const {
  if (num_vertices() > kMaskBits) throw SizeBoundError("graph too large for bitmask representation");
  std::vector<VertexMask> m(adj_.size(), 0);
  for (auto [u, v] : edges_) {
    m[u] |= bit(v);
    m[v] |= bit(u);
  }
  return m;
}

Graph graph_from_masks(const std::vector<VertexMask>& adj) {
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (VertexMask m = adj[u] & ~((bit(u) << 1) - 1); m; m &= m - 1) edges.emplace_back(u, lowest(m));
  return Graph(static_cast<int>(adj.size()), edges);
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  // Bucket-based core decomposition; the processing order is the result.
  const int n = g.num_vertices();
  DegeneracyOrder result;
  result.order.resize(n);
  result.position.assign(n, 0);
  if (n == 0) return result;

  const int maxd = g.max_degree();
  std::vector<int> deg(n), bin(maxd + 1, 0), vert(n), pos(n);
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    ++bin[deg[v]];
  }
  int start = 0;
  for (int d = 0; d <= maxd; ++d) {
    int count = bin[d];
    bin[d] = start;
    start += count;
  }
  for (int v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (int d = maxd; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (int i = 0; i < n; ++i) {
    const int v = vert[i];
    result.degeneracy = std::max(result.degeneracy, deg[v]);
    for (int u : g.neighbours(v)) {
      if (deg[u] <= deg[v]) continue;
      const int du = deg[u], pu = pos[u], pw = bin[du], w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --deg[u];
    }
  }
  for (int i = 0; i < n; ++i) {
    result.order[i] = vert[i];
    result.position[vert[i]] = i;
  }
  return result;
}

int degeneracy(const Graph& g) { return degeneracy_order(g).degeneracy; }

std::vector<int> block_index(const Partition& p, int n) {
  std::vector<int> block_of(n, -1);
  for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b) {
    if (p.blocks[b].empty()) throw GraphError("empty partition block");
    for (Vertex v : p.blocks[b]) {
      if (v < 0 || v >= n) throw GraphError("partition vertex out of range");
      if (block_of[v] != -1) throw GraphError("partition blocks overlap at vertex " + std::to_string(v));
      block_of[v] = b;
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] == -1) throw GraphError("partition misses vertex " + std::to_string(v));
  return block_of;
}

Partition partition_from_blocks(const std::vector<int>& block_of) {
  Partition p;
  for (int v = 0; v < static_cast<int>(block_of.size()); ++v) {
    if (block_of[v] >= static_cast<int>(p.blocks.size())) p.blocks.resize(block_of[v] + 1);
    p.blocks[block_of[v]].push_back(v);
  }
  return p;
}

bool quotient_has_self_loop(const Graph& g, const std::vector<int>& block_of) {
  for (auto [u, v] : g.edges())
    if (block_of[u] == block_of[v]) return true;
  return false;
}

Graph quotient(const Graph& g, const std::vector<int>& block_of) {
  if (static_cast<int>(block_of.size()) != g.num_vertices()) throw GraphError("partition size mismatch");
  int blocks = 0;
  for (int b : block_of) {
    if (b < 0) throw GraphError("negative block index");
    blocks = std::max(blocks, b + 1);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (block_of[u] == block_of[v])
      throw SelfLoopError("quotient has a self-loop: edge " + std::to_string(u) + " " + std::to_string(v) +
                          " inside one block");
    edges.emplace_back(block_of[u], block_of[v]);
  }
  return Graph(blocks, edges);
}

Graph quotient(const Graph& g, const Partition& p) { return quotient(g, block_index(p, g.num_vertices())); }

void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> a(n, 0);
  if (n == 0) {
    f(a, 0);
    return;
  }
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  a[0] = 0;
  rec(1, 1);
}

BigInt partition_moebius(const std::vector<int>& block_of, int blocks) {
  std::vector<int> size(blocks, 0);
  for (int b : block_of) ++size[b];
  BigInt mu = 1;
  for (int s : size)
    for (int i = 2; i < s; ++i) mu *= i;
  if ((static_cast<int>(block_of.size()) - blocks) % 2) mu = -mu;
  return mu;
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const int nh = h.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges().size() * h.edges().size());
  for (auto [a, b] : g.edges())
    for (auto [x, y] : h.edges()) {
      edges.emplace_back(a * nh + x, b * nh + y);
      edges.emplace_back(a * nh + y, b * nh + x);
    }
  return Graph(g.num_vertices() * nh, edges);
}

Graph subdivide(const Graph& g, int times) {
  if (times < 0) throw GraphError("negative subdivision count");
  if (times == 0) return g;
  int next = g.num_vertices();
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int prev = u;
    for (int t = 0; t < times; ++t) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(next, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> index(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
    if (index[v] != -1) throw GraphError("repeated vertex in induced subgraph");
    index[v] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for (Vertex w : g.neighbours(vertices[i]))
      if (index[w] > i) edges.emplace_back(i, index[w]);
  return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<char>& removed) {
  std::vector<Vertex> keep;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

InducedSubgraph remove_colour_classes(const Graph& g, const std::vector<int>& colouring,
                                      const std::vector<int>& colours) {
  std::vector<char> removed(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    removed[v] = std::find(colours.begin(), colours.end(), colouring[v]) != colours.end();
  return remove_vertices(g, removed);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int off = a.num_vertices();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph(a.num_vertices() + b.num_vertices(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.num_vertices(), edges);
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.num_vertices(), edges);
}

Graph remove_edge(const Graph& g, const Edge& e) {
  Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  std::vector<Edge> edges;
  for (const auto& f : g.edges())
    if (f != key) edges.push_back(f);
  return Graph(g.num_vertices(), edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.num_vertices(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.num_vertices(), 0);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  return is_connected(induced_subgraph(g, vertices).graph);
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

bool is_homomorphism(const Graph& from, const Graph& to, const std::vector<Vertex>& map) {
  if (static_cast<int>(map.size()) != from.num_vertices()) return false;
  for (Vertex x : map)
    if (x < 0 || x >= to.num_vertices()) return false;
  for (auto [u, v] : from.edges())
    if (!to.has_edge(map[u], map[v])) return false;
  return true;
}

}  // namespace degencount
