#include "degencount/orient.hpp"

#include "degencount/canon.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace degencount {

OrientedGraph::OrientedGraph(int n, const std::vector<Edge>& arcs) : n_(n), arcs_(arcs) {
  if (n < 0 || n > kMaskBits) throw SizeBoundError("oriented pattern supports at most 64 vertices");
  out_.assign(n, 0);
  in_.assign(n, 0);
  for (auto [u, v] : arcs_) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("arc endpoint out of range");
    if (u == v) throw SelfLoopError("loop arc at vertex " + std::to_string(u));
    if ((out_[u] | in_[u]) & bit(v)) throw GraphError("repeated arc between " + std::to_string(u) + " and " + std::to_string(v));
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }
  std::sort(arcs_.begin(), arcs_.end());
  // Kahn's algorithm; smallest available vertex first.
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = popcount(in_[v]);
  VertexMask ready = 0;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) ready |= bit(v);
  while (ready) {
    Vertex v = lowest(ready);
    ready &= ready - 1;
    topo_.push_back(v);
    for (VertexMask m = out_[v]; m; m &= m - 1) {
      Vertex w = lowest(m);
      if (--indeg[w] == 0) ready |= bit(w);
    }
  }
  if (static_cast<int>(topo_.size()) != n) throw GraphError("orientation contains a directed cycle");
  reach_.assign(n, 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    VertexMask r = bit(*it);
    for (VertexMask m = out_[*it]; m; m &= m - 1) r |= reach_[lowest(m)];
    reach_[*it] = r;
  }
}

VertexMask OrientedGraph::reach(VertexMask set) const {
  VertexMask r = 0;
  for (; set; set &= set - 1) r |= reach_[lowest(set)];
  return r;
}

VertexMask OrientedGraph::sources() const {
  VertexMask s = 0;
  for (int v = 0; v < n_; ++v)
    if (!in_[v]) s |= bit(v);
  return s;
}

Graph OrientedGraph::underlying() const { return Graph(n_, arcs_); }

VertexMask OrientedGraph::local_sources(VertexMask set) const {
  VertexMask out = 0;
  for (VertexMask m = set; m; m &= m - 1) {
    Vertex v = lowest(m);
    if (!(in_[v] & set)) out |= bit(v);
  }
  return out;
}

OrientedGraph orient_by_order(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.num_vertices());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) arcs.push_back(pos[u] < pos[v] ? Edge{u, v} : Edge{v, u});
  return OrientedGraph(g.num_vertices(), arcs);
}

void for_each_acyclic_orientation(const Graph& h, const std::function<void(const OrientedGraph&)>& f) {
  const int n = h.num_vertices();
  if (n > kMaskBits) throw SizeBoundError("orientation enumeration supports at most 64 vertices");
  const auto& edges = h.edges();
  std::vector<Edge> arcs(edges.size());
  std::vector<std::vector<VertexMask>> reach(edges.size() + 1, std::vector<VertexMask>(n));
  for (int v = 0; v < n; ++v) reach[0][v] = bit(v);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      f(OrientedGraph(n, arcs));
      return;
    }
    const auto& cur = reach[i];
    for (int dir = 0; dir < 2; ++dir) {
      Vertex a = dir ? edges[i].second : edges[i].first;
      Vertex b = dir ? edges[i].first : edges[i].second;
      if (cur[b] & bit(a)) continue;  // would close a cycle
      auto& next = reach[i + 1];
      for (int x = 0; x < n; ++x) next[x] = (cur[x] & bit(a)) ? (cur[x] | cur[b]) : cur[x];
      arcs[i] = {a, b};
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<OrientedGraph> acyclic_orientations(const Graph& h) {
  std::vector<OrientedGraph> out;
  for_each_acyclic_orientation(h, [&](const OrientedGraph& o) { out.push_back(o); });
  return out;
}

std::vector<OrientationClass> orientation_classes(const Graph& h) {
  const auto& edges = h.edges();
  std::vector<std::vector<Vertex>> autos;
  bool grouped = edges.size() <= 64;
  if (grouped) {
    try {
      autos = automorphisms(h, 50000);
    } catch (const BudgetExceeded&) {
      grouped = false;
    }
  }
  std::vector<OrientationClass> out;
  if (!grouped) {
    for_each_acyclic_orientation(h, [&](const OrientedGraph& o) { out.push_back({o, 1}); });
    return out;
  }
  std::map<Edge, int> index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;
  // Orientation code: bit i set iff edges()[i] points from larger to smaller id.
  std::map<std::uint64_t, std::size_t> slot;
  for_each_acyclic_orientation(h, [&](const OrientedGraph& o) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& gamma : autos) {
      std::uint64_t code = 0;
      for (auto [a, b] : o.arcs()) {
        Vertex x = gamma[a], y = gamma[b];
        if (x > y) code |= std::uint64_t{1} << index[{y, x}];
      }
      best = std::min(best, code);
    }
    auto it = slot.find(best);
    if (it == slot.end()) {
      slot.emplace(best, out.size());
      out.push_back({o, 1});
    } else {
      ++out[it->second].multiplicity;
    }
  });
  return out;
}

bool is_kernel(const OrientedGraph& h, VertexMask k) {
  const VertexMask s = h.sources();
  if (k & ~s) return false;
  return (h.reach(k) | s) == h.all();
}

VertexMask find_kernel(const OrientedGraph& h) {
  const VertexMask s = h.sources();
  const VertexMask nonsources = h.all() & ~s;
  VertexMask u = s;
  for (VertexMask m = s; m; m &= m - 1) {
    VertexMask candidate = u & ~bit(lowest(m));
    if ((h.reach(candidate) & nonsources) == nonsources) u = candidate;
  }
  if (!u && s) u = bit(lowest(s));
  return u;
}

Skeleton skeleton(const OrientedGraph& h) {
  Skeleton sk;
  sk.sources = h.sources();
  std::vector<int> reached_by(h.num_vertices(), 0);
  for (VertexMask m = sk.sources; m; m &= m - 1)
    for (VertexMask r = h.reach(lowest(m)) & ~bit(lowest(m)); r; r &= r - 1) ++reached_by[lowest(r)];
  for (int v = 0; v < h.num_vertices(); ++v)
    if (reached_by[v] >= 2) sk.joints |= bit(v);
  for (VertexMask m = sk.sources; m; m &= m - 1) {
    Vertex s = lowest(m);
    for (VertexMask r = h.reach(s) & sk.joints; r; r &= r - 1) sk.arcs.emplace_back(s, lowest(r));
  }
  return sk;
}

OrientedGraph Skeleton::as_dag(std::vector<Vertex>& ids) const {
  ids = mask_to_vector(sources | joints);
  std::vector<int> index(kMaskBits, -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
  std::vector<Edge> compact;
  for (auto [s, j] : arcs) compact.emplace_back(index[s], index[j]);
  return OrientedGraph(static_cast<int>(ids.size()), compact);
}

}  // namespace degencount
