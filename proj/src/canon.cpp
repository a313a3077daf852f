#include "degencount/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace degencount {

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Certificate = std::vector<std::uint64_t>;

class Refiner {
 public:
  explicit Refiner(const std::vector<VertexMask>& adj) : adj_(adj) {}

  // Splits cells by neighbour counts into every cell until stable.
  void refine(Cells& cells) const {
    if (adj_.empty()) return;
    std::vector<VertexMask> masks;
    std::vector<int> sig;
    while (true) {
      masks.assign(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) masks[c] |= bit(v);
      Cells next;
      next.reserve(cells.size());
      bool split = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<Vertex>> groups;
        for (Vertex v : cell) {
          sig.assign(masks.size(), 0);
          for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = popcount(adj_[v] & masks[c]);
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) split = true;
        for (auto& [key, members] : groups) next.push_back(std::move(members));
      }
      cells.swap(next);
      if (!split) return;
    }
  }

  Certificate certificate(const std::vector<Vertex>& perm) const {
    const int n = static_cast<int>(perm.size());
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    Certificate cert((bits + 63) / 64 + 1, 0);
    cert[0] = static_cast<std::uint64_t>(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (adj_[perm[i]] & bit(perm[j])) cert[1 + k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return cert;
  }

 private:
  const std::vector<VertexMask>& adj_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const std::vector<VertexMask>& adj) : adj_(adj), refiner_(adj) {}

  std::vector<Vertex> run(Cells cells) {
    std::vector<Vertex> prefix;
    search(std::move(cells), prefix);
    return best_perm_;
  }

 private:
  // Orbits of the group generated by the stored automorphisms fixing `prefix`.
  std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
    const int n = static_cast<int>(adj_.size());
    std::vector<Vertex> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (Vertex p : prefix)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (Vertex v = 0; v < n; ++v) {
        Vertex a = find(v), b = find(gamma[v]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n; ++v) root[v] = find(v);
    return root;
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    int l = 0;
    while (l < static_cast<int>(a.size()) && l < static_cast<int>(b.size()) && a[l] == b[l]) ++l;
    return l;
  }

  // Returns -1 to continue normally, or the depth of the node whose current
  // child subtree is known to be equivalent to one already explored.
  int search(Cells cells, std::vector<Vertex>& prefix) {
    refiner_.refine(cells);
    const int depth = static_cast<int>(prefix.size());
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, prefix);

    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = cells[ti];
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty()) {
        auto orb = orbits(prefix);
        bool skip = false;
        for (Vertex w : explored)
          if (orb[w] == orb[v]) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != ti) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      int r = search(std::move(child), prefix);
      prefix.pop_back();
      if (r != -1 && r < depth) return r;
    }
    return -1;
  }

  int leaf(const Cells& cells, const std::vector<Vertex>& prefix) {
    std::vector<Vertex> perm;
    perm.reserve(cells.size());
    for (const auto& c : cells) perm.push_back(c[0]);
    Certificate cert = refiner_.certificate(perm);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_perm_ = best_perm_ = perm;
      first_prefix_ = best_prefix_ = prefix;
      return -1;
    }
    auto record = [&](const std::vector<Vertex>& ref) {
      std::vector<Vertex> gamma(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) gamma[perm[i]] = ref[i];
      autos_.push_back(std::move(gamma));
    };
    if (cert == first_cert_) {
      record(first_perm_);
      return common_prefix(prefix, first_prefix_);
    }
    if (cert == best_cert_) {
      record(best_perm_);
      return common_prefix(prefix, best_prefix_);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = perm;
      best_prefix_ = prefix;
    }
    return -1;
  }

  const std::vector<VertexMask>& adj_;
  Refiner refiner_;
  bool have_first_ = false;
  Certificate first_cert_, best_cert_;
  std::vector<Vertex> first_perm_, best_perm_, first_prefix_, best_prefix_;
  std::vector<std::vector<Vertex>> autos_;
};

Cells initial_cells(int n, const std::vector<int>& colouring) {
  std::map<int, std::vector<Vertex>> by_colour;
  for (Vertex v = 0; v < n; ++v) by_colour[colouring.empty() ? 0 : colouring[v]].push_back(v);
  Cells cells;
  for (auto& [c, members] : by_colour) cells.push_back(std::move(members));
  return cells;
}

CanonicalForm build_form(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
  return {to_graph6(relabel(g, position)), order};
}

Certificate coloured_certificate(const std::vector<VertexMask>& adj, Cells cells) {
  CanonicalSearch search(adj);
  auto perm = search.run(std::move(cells));
  return Refiner(adj).certificate(perm);
}

BigInt aut_count(const std::vector<VertexMask>& adj, Cells cells) {
  Refiner(adj).refine(cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) return 1;
  const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
  auto individualise = [&](Vertex v) {
    Cells child;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != ti) {
        child.push_back(cells[c]);
        continue;
      }
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[c])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
    }
    return child;
  };
  const Vertex v0 = cells[ti][0];
  Cells base = individualise(v0);
  const Certificate ref = coloured_certificate(adj, base);
  std::size_t orbit = 1;
  for (std::size_t i = 1; i < cells[ti].size(); ++i)
    if (coloured_certificate(adj, individualise(cells[ti][i])) == ref) ++orbit;
  return BigInt(orbit) * aut_count(adj, std::move(base));
}

void check_size(const Graph& g) {
  if (g.num_vertices() > kCanonicalMaxVertices)
    throw SizeBoundError("canonical form supports at most " + std::to_string(kCanonicalMaxVertices) + " vertices");
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colouring) {
  check_size(g);
  const int n = g.num_vertices();
  if (n == 0) return {to_graph6(g), {}};
  auto adj = g.adjacency_masks();
  CanonicalSearch search(adj);
  return build_form(g, search.run(initial_cells(n, colouring)));
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(g, {}); }

std::string canonical_label(const Graph& g) { return canonical_form(g).label; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_label(a) == canonical_label(b);
}

BigInt automorphism_count(const Graph& g) {
  check_size(g);
  if (g.num_vertices() == 0) return 1;
  auto adj = g.adjacency_masks();
  return aut_count(adj, initial_cells(g.num_vertices(), {}));
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (out.size() >= limit) throw BudgetExceeded("automorphism group larger than limit");
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      self(self, v + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 62) throw SizeBoundError("graph6 encoding limited to 62 vertices");
  std::string s(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) s.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return s;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw ParseError("empty graph6 string");
  const int n = s[0] - 63;
  if (n < 0 || n > 62) throw ParseError("unsupported graph6 size");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() != 1 + (bits + 5) / 6) throw ParseError("graph6 length mismatch");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if (byte < 0 || byte > 63) throw ParseError("bad graph6 character");
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

}  // namespace degencount

namespace degencount {

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Graph> level{Graph(0)};
  for (int size = 1; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        std::vector<Edge> edges = g.edges();
        for (int v = 0; v < size - 1; ++v)
          if (nb >> v & 1) edges.emplace_back(v, size - 1);
        Graph h(size, edges);
        auto form = canonical_form(h);
        next.emplace(form.label, from_graph6(form.label));
      }
    }
    level.clear();
    for (auto& [label, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace degencount
