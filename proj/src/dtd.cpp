#include "degencount/dtd.hpp"

#include "degencount/canon.hpp"
#include "degencount/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degencount {

int BagTree::root() const {
  for (int i = 0; i < size(); ++i)
    if (parent[i] == -1) return i;
  return -1;
}

int BagTree::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w;
}

std::vector<std::vector<int>> BagTree::children() const {
  std::vector<std::vector<int>> ch(size());
  for (int i = 0; i < size(); ++i)
    if (parent[i] >= 0) ch[parent[i]].push_back(i);
  return ch;
}

void BagTree::check_tree() const {
  if (parent.size() != bags.size()) throw GraphError("bag tree: parent and bag arrays differ in length");
  if (bags.empty()) throw GraphError("bag tree has no nodes");
  int roots = 0;
  for (int i = 0; i < size(); ++i) {
    if (parent[i] == -1) ++roots;
    else if (parent[i] < 0 || parent[i] >= size() || parent[i] == i) throw GraphError("bag tree: bad parent id");
  }
  if (roots != 1) throw GraphError("bag tree must have exactly one root");
  for (int i = 0; i < size(); ++i) {
    int steps = 0;
    for (int x = i; x != -1; x = parent[x])
      if (++steps > size()) throw GraphError("bag tree: parent pointers contain a cycle");
  }
}

namespace {

std::vector<int> tree_path(const BagTree& t, int a, int b) {
  std::vector<int> up_a, up_b;
  for (int x = a; x != -1; x = t.parent[x]) up_a.push_back(x);
  for (int x = b; x != -1; x = t.parent[x]) up_b.push_back(x);
  while (up_a.size() > 1 && up_b.size() > 1 && up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
    up_a.pop_back();
    up_b.pop_back();
  }
  // up_a.back() == up_b.back() is the lowest common ancestor.
  std::vector<int> path(up_a.begin(), up_a.end());
  for (auto it = up_b.rbegin() + 1; it != up_b.rend(); ++it) path.push_back(*it);
  return path;
}

}  // namespace

DtdCheck validate_dtd(const OrientedGraph& h, const DagTreeDecomposition& t) {
  DtdCheck res;
  auto fail = [&](int clause, std::string msg) {
    res.ok = false;
    res.clause = clause;
    res.message = std::move(msg);
    return res;
  };
  try {
    t.check_tree();
  } catch (const GraphError& e) {
    return fail(0, e.what());
  }
  std::vector<VertexMask> reach(t.size());
  for (int i = 0; i < t.size(); ++i) {
    VertexMask b = 0;
    for (Vertex v : t.bags[i]) {
      if (v < 0 || v >= h.num_vertices()) {
        res.node = i;
        res.vertex = v;
        return fail(1, "bag " + std::to_string(i) + " contains vertex " + std::to_string(v) + " outside V(H)");
      }
      b |= bit(v);
    }
    reach[i] = h.reach(b);
  }
  VertexMask covered = 0;
  for (VertexMask r : reach) covered |= r;
  if (covered != h.all()) {
    res.vertex = lowest(h.all() & ~covered);
    return fail(2, "vertex " + std::to_string(res.vertex) + " is not reachable from any bag");
  }
  for (int a = 0; a < t.size(); ++a)
    for (int b = a + 1; b < t.size(); ++b) {
      const VertexMask shared = reach[a] & reach[b];
      if (!shared) continue;
      for (int x : tree_path(t, a, b)) {
        if (shared & ~reach[x]) {
          res.node = x;
          res.node1 = a;
          res.node2 = b;
          res.vertex = lowest(shared & ~reach[x]);
          return fail(3, "vertex " + std::to_string(res.vertex) + " is reachable from bags " + std::to_string(a) +
                             " and " + std::to_string(b) + " but not from bag " + std::to_string(x) + " between them");
        }
      }
    }
  return res;
}

DagTreeDecomposition dtd_from_kernel(const OrientedGraph& h, VertexMask kernel) {
  if (!is_kernel(h, kernel)) throw PreconditionError("given set is not a kernel of the dag");
  DagTreeDecomposition t;
  t.parent.push_back(-1);
  t.bags.push_back(mask_to_vector(kernel));
  for (VertexMask m = h.sources() & ~kernel; m; m &= m - 1) {
    t.parent.push_back(0);
    t.bags.push_back({lowest(m)});
  }
  return t;
}

DagTreeDecomposition kernel_dtd(const OrientedGraph& h) { return dtd_from_kernel(h, find_kernel(h)); }

namespace {

// Decides whether a tree of reachability sets, each generated by a bag of at
// most w vertices, satisfies coverage and the path condition. A candidate
// subtree is summarised by (root set Y, union U of its sets).
class TreewidthSearch {
 public:
  TreewidthSearch(const OrientedGraph& h, int w) : h_(h), n_(h.num_vertices()) {
    std::map<VertexMask, VertexMask> generator;  // reach set -> smallest bag
    auto consider = [&](VertexMask bag) {
      VertexMask r = h_.reach(bag);
      auto it = generator.find(r);
      if (it == generator.end() || popcount(bag) < popcount(it->second) ||
          (popcount(bag) == popcount(it->second) && bag < it->second))
        generator[r] = bag;
    };
    std::vector<Vertex> chosen;
    auto rec = [&](auto&& self, Vertex from, VertexMask bag, int size) -> void {
      if (size > 0) consider(bag);
      if (size == w) return;
      for (Vertex v = from; v < n_; ++v) self(self, v + 1, bag | bit(v), size + 1);
    };
    rec(rec, 0, 0, 0);
    for (auto [r, b] : generator) {
      sets_.push_back(r);
      bags_.push_back(b);
    }
  }

  bool solve(DagTreeDecomposition& out) {
    const std::size_t m = sets_.size();
    const std::size_t full = std::size_t{1} << n_;
    feasible_.assign(m, std::vector<char>(full, 0));
    how_.assign(m, std::vector<std::vector<std::pair<int, VertexMask>>>(full));
    lists_.assign(m, {});
    for (std::size_t y = 0; y < m; ++y) {
      feasible_[y][sets_[y]] = 1;
      lists_[y].push_back(sets_[y]);
    }
    const VertexMask all = h_.all();
    std::vector<char> reachable(full);
    std::vector<std::pair<VertexMask, std::pair<int, VertexMask>>> choice(full);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t y = 0; y < m; ++y) {
        const VertexMask Y = sets_[y];
        // Pieces a child subtree can add outside Y.
        std::vector<std::vector<std::pair<VertexMask, std::pair<int, VertexMask>>>> by_low(n_);
        std::vector<char> seen(full, 0);
        for (std::size_t c = 0; c < m; ++c)
          for (VertexMask U : lists_[c]) {
            if ((U & Y) & ~sets_[c]) continue;
            VertexMask d = U & ~Y;
            if (!d || seen[d]) continue;
            seen[d] = 1;
            by_low[lowest(d)].push_back({d, {static_cast<int>(c), U}});
          }
        const VertexMask comp = all & ~Y;
        std::fill(reachable.begin(), reachable.end(), 0);
        reachable[0] = 1;
        // Ascending submasks of comp.
        for (VertexMask d = (0 - comp) & comp; d; d = (d - comp) & comp) {
          for (const auto& piece : by_low[lowest(d)]) {
            VertexMask p = piece.first;
            if ((p & d) == p && reachable[d & ~p]) {
              reachable[d] = 1;
              choice[d] = piece;
              break;
            }
          }
          if (!reachable[d]) continue;
          const VertexMask U = Y | d;
          if (feasible_[y][U]) continue;
          feasible_[y][U] = 1;
          lists_[y].push_back(U);
          for (VertexMask r = d; r;) {
            how_[y][U].push_back(choice[r].second);
            r &= ~choice[r].first;
          }
          changed = true;
        }
      }
    }
    for (std::size_t y = 0; y < m; ++y)
      if (feasible_[y][all]) {
        out = DagTreeDecomposition{};
        build(static_cast<int>(y), all, -1, out);
        return true;
      }
    return false;
  }

 private:
  void build(int y, VertexMask U, int parent, DagTreeDecomposition& out) {
    const int id = out.size();
    out.parent.push_back(parent);
    out.bags.push_back(mask_to_vector(bags_[y]));
    for (auto [c, cu] : how_[y][U]) build(c, cu, id, out);
  }

  const OrientedGraph& h_;
  int n_;
  std::vector<VertexMask> sets_, bags_;
  std::vector<std::vector<char>> feasible_;
  std::vector<std::vector<std::vector<std::pair<int, VertexMask>>>> how_;
  std::vector<std::vector<VertexMask>> lists_;
};

}  // namespace

DagTreewidth dag_treewidth(const OrientedGraph& h, int max_vertices) {
  if (h.num_vertices() > max_vertices)
    throw SizeBoundError("exact dag treewidth limited to " + std::to_string(max_vertices) + " vertices");
  DagTreewidth res;
  if (h.num_vertices() == 0) {
    res.dtd.parent = {-1};
    res.dtd.bags = {{}};
    return res;
  }
  res.dtd = kernel_dtd(h);
  res.width = res.dtd.width();
  for (int w = 1; w < res.width; ++w) {
    DagTreeDecomposition t;
    if (TreewidthSearch(h, w).solve(t)) {
      if (!validate_dtd(h, t).ok) throw std::logic_error("dag treewidth search produced an invalid decomposition");
      res.width = t.width();
      res.dtd = std::move(t);
      break;
    }
  }
  return res;
}

int tau1(const Graph& h, TauCache* cache) {
  std::string key;
  if (cache) {
    key = canonical_label(h);
    if (auto it = cache->tau1.find(key); it != cache->tau1.end()) return it->second;
  }
  int best = h.num_vertices() > 0 ? 1 : 0;
  for (const auto& cls : orientation_classes(h)) {
    const OrientedGraph& o = cls.representative;
    if (popcount(find_kernel(o)) <= best) continue;
    best = std::max(best, dag_treewidth(o).width);
  }
  if (cache) cache->tau1[key] = best;
  return best;
}

int tau2(const Graph& h, TauCache* cache) {
  if (h.num_vertices() > 10) throw SizeBoundError("tau2 limited to 10 vertices");
  std::string key;
  if (cache) {
    key = canonical_label(h);
    if (auto it = cache->tau2.find(key); it != cache->tau2.end()) return it->second;
  }
  TauCache local;
  TauCache& memo = cache ? *cache : local;
  int best = 0;
  for_each_partition(h.num_vertices(), [&](const std::vector<int>& a, int) {
    if (quotient_has_self_loop(h, a)) return;
    best = std::max(best, tau1(quotient(h, a), &memo));
  });
  if (cache) cache->tau2[key] = best;
  return best;
}

int tau3(const Graph& h, TauCache* cache) {
  std::vector<Edge> non_edges;
  for (int u = 0; u < h.num_vertices(); ++u)
    for (int v = u + 1; v < h.num_vertices(); ++v)
      if (!h.has_edge(u, v)) non_edges.emplace_back(u, v);
  if (non_edges.size() > 20) throw SizeBoundError("tau3 limited to 20 non-edges");
  TauCache local;
  TauCache& memo = cache ? *cache : local;
  std::string key = canonical_label(h);
  if (auto it = memo.tau3.find(key); it != memo.tau3.end()) return it->second;
  std::map<std::string, Graph> supergraphs;
  for (std::uint32_t s = 0; s < (1u << non_edges.size()); ++s) {
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < non_edges.size(); ++i)
      if (s >> i & 1) extra.push_back(non_edges[i]);
    Graph g = add_edges(h, extra);
    supergraphs.emplace(canonical_label(g), g);
  }
  int best = 0;
  for (const auto& [label, g] : supergraphs) best = std::max(best, tau2(g, &memo));
  memo.tau3[key] = best;
  return best;
}

BagTree read_bag_tree(std::istream& in) {
  std::vector<std::pair<int, std::pair<int, std::vector<Vertex>>>> rows;
  std::string line;
  while (next_content_line(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bag line needs ':' : " + line);
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    long long id, parent;
    std::string extra;
    if (!(head >> id >> parent) || (head >> extra)) throw ParseError("bad bag header: " + line);
    std::vector<Vertex> bag;
    long long v;
    while (body >> v) bag.push_back(static_cast<Vertex>(v));
    if (!body.eof()) throw ParseError("bad bag contents: " + line);
    rows.push_back({static_cast<int>(id), {static_cast<int>(parent), bag}});
  }
  BagTree t;
  t.parent.assign(rows.size(), -2);
  t.bags.resize(rows.size());
  for (auto& [id, rest] : rows) {
    if (id < 0 || id >= static_cast<int>(rows.size()) || t.parent[id] != -2)
      throw ParseError("bag ids must be 0..m-1, each once");
    t.parent[id] = rest.first;
    t.bags[id] = rest.second;
  }
  return t;
}

void write_bag_tree(std::ostream& out, const BagTree& t) {
  for (int i = 0; i < t.size(); ++i) {
    out << i << ' ' << t.parent[i] << ':';
    for (Vertex v : t.bags[i]) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace degencount
