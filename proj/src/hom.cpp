#include "degencount/hom.hpp"

#include "degencount/canon.hpp"
#include "degencount/detail/bag_homs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <unordered_map>

namespace degencount {

HostDag::HostDag(const Graph& g) : graph_(&g) {
  auto order = degeneracy_order(g);
  degeneracy_ = order.degeneracy;
  out_.resize(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (order.position[u] < order.position[v]) out_[u].push_back(v);
    else out_[v].push_back(u);
  }
  for (auto& o : out_) std::sort(o.begin(), o.end());
}

bool HostDag::has_arc(Vertex u, Vertex v) const {
  const auto& o = out_[u];
  if (o.size() <= 8) return std::find(o.begin(), o.end(), v) != o.end();
  return std::binary_search(o.begin(), o.end(), v);
}

namespace detail {

BagPlan make_plan(const OrientedGraph& h, VertexMask reach_set) {
  BagPlan plan;
  for (Vertex v : h.topological_order())
    if (reach_set & bit(v)) plan.order.push_back(v);
  const int k = static_cast<int>(plan.order.size());
  plan.anchor.assign(k, -1);
  plan.checks.assign(k, {});
  for (int i = 0; i < k; ++i) {
    const Vertex v = plan.order[i];
    for (int j = 0; j < i; ++j) {
      if (!h.has_arc(plan.order[j], v)) continue;
      if (plan.anchor[i] < 0) plan.anchor[i] = j;
      else plan.checks[i].push_back(j);
    }
  }
  return plan;
}

std::vector<std::vector<Vertex>> colour_classes(const ColourFilter& filter, int host_vertices) {
  std::vector<std::vector<Vertex>> classes;
  if (!filter.active()) return classes;
  for (Vertex g = 0; g < host_vertices; ++g) {
    const int c = filter.host_colour[g];
    if (c < 0) continue;
    if (c >= static_cast<int>(classes.size())) classes.resize(c + 1);
    classes[c].push_back(g);
  }
  return classes;
}

}  // namespace detail

std::uint64_t brute_force_budget() {
  if (const char* env = std::getenv("DEGENCOUNT_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return static_cast<std::uint64_t>(std::min(v, 1.8e19));
  }
  return 1000000000000ULL;
}

namespace {

void check_budget(const Graph& h, const Graph& g) {
  const double work = std::pow(static_cast<double>(std::max(1, g.num_vertices())), h.num_vertices());
  if (work > static_cast<double>(brute_force_budget()))
    throw BudgetExceeded("brute force over " + std::to_string(g.num_vertices()) + "^" +
                         std::to_string(h.num_vertices()) + " maps exceeds the budget");
}

enum class MapKind { Hom, Injective, Strong };

// Backtracking over pattern vertices in BFS order; a vertex with an already
// mapped neighbour only tries that image's neighbours.
BigInt brute_count(const Graph& h, const Graph& g, MapKind kind, const std::vector<int>* cp_colouring) {
  if (cp_colouring) {
    // The map space is the product of the colour class sizes.
    std::vector<double> size(h.num_vertices(), 0);
    for (int c : *cp_colouring) size[c] += 1;
    double work = 1;
    for (double s : size) work *= std::max(1.0, s);
    if (work > static_cast<double>(brute_force_budget()))
      throw BudgetExceeded("brute force over colour-prescribed maps exceeds the budget");
  } else {
    check_budget(h, g);
  }
  const int k = h.num_vertices(), n = g.num_vertices();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  for (Vertex s = 0; s < k; ++s) {
    if (placed[s]) continue;
    std::vector<Vertex> queue{s};
    placed[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (Vertex w : h.neighbours(queue[i]))
        if (!placed[w]) {
          placed[w] = 1;
          queue.push_back(w);
        }
    }
  }
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  std::vector<Vertex> anchor(k, -1);
  for (int i = 0; i < k; ++i)
    for (Vertex w : h.neighbours(order[i]))
      if (pos[w] < i) {
        anchor[i] = w;
        break;
      }
  std::vector<Vertex> img(k, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  BigInt total = 0;
  auto ok = [&](int i, Vertex x) {
    const Vertex v = order[i];
    if (cp_colouring && (*cp_colouring)[x] != v) return false;
    if (kind != MapKind::Hom && used[x]) return false;
    for (int j = 0; j < i; ++j) {
      const Vertex u = order[j];
      const bool pattern_edge = h.has_edge(u, v);
      if (pattern_edge && !g.has_edge(img[u], x)) return false;
      if (kind == MapKind::Strong && !pattern_edge && g.has_edge(img[u], x)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      if (++count == 0xffffffffffffULL) {
        total += count;
        count = 0;
      }
      return;
    }
    auto attempt = [&](Vertex x) {
      if (!ok(i, x)) return;
      img[order[i]] = x;
      used[x] = 1;
      self(self, i + 1);
      used[x] = 0;
    };
    if (anchor[i] >= 0) {
      for (Vertex x : g.neighbours(img[anchor[i]])) attempt(x);
    } else {
      for (Vertex x = 0; x < n; ++x) attempt(x);
    }
  };
  rec(rec, 0);
  return total + count;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (a % b != 0) throw std::logic_error(std::string(what) + ": count not divisible by automorphism count");
  return a / b;
}

}  // namespace

BigInt count_homs_brute(const Graph& h, const Graph& g) { return brute_count(h, g, MapKind::Hom, nullptr); }
BigInt count_embeddings_brute(const Graph& h, const Graph& g) { return brute_count(h, g, MapKind::Injective, nullptr); }
BigInt count_strong_embeddings_brute(const Graph& h, const Graph& g) {
  return brute_count(h, g, MapKind::Strong, nullptr);
}
BigInt count_subs_brute(const Graph& h, const Graph& g) {
  return exact_div(count_embeddings_brute(h, g), automorphism_count(h), "sub");
}
BigInt count_indsubs_brute(const Graph& h, const Graph& g) {
  return exact_div(count_strong_embeddings_brute(h, g), automorphism_count(h), "indsub");
}
BigInt count_cp_homs_brute(const Graph& h, const Graph& g, const std::vector<int>& colouring) {
  require_colouring_homomorphism(g, h, colouring);
  return brute_count(h, g, MapKind::Hom, &colouring);
}

DagTreeDecomposition choose_dtd(const OrientedGraph& h, DtdStrategy strategy) {
  if (strategy == DtdStrategy::Optimal) return dag_treewidth(h).dtd;
  DagTreeDecomposition t = kernel_dtd(h);
  if (strategy == DtdStrategy::Automatic && t.width() > 1 && h.num_vertices() <= 8) return dag_treewidth(h).dtd;
  return t;
}

namespace {

using Key = std::vector<Vertex>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t x = 0x9e3779b97f4a7c15ULL;
    for (Vertex v : k) x = (x ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + (x >> 29);
    return x;
  }
};

template <class Map>
BigInt run_dp(const OrientedGraph& h, const DagTreeDecomposition& t, const HostDag& host, const ColourFilter& filter) {
  const int m = t.size();
  const auto ch = t.children();
  std::vector<VertexMask> reach(m);
  for (int x = 0; x < m; ++x) reach[x] = h.reach(vector_to_mask(t.bags[x]));
  std::vector<detail::BagPlan> plans;
  plans.reserve(m);
  for (int x = 0; x < m; ++x) plans.push_back(detail::make_plan(h, reach[x]));
  // key_pos[x]: positions (in plans[x]) of the vertices x shares with its parent.
  std::vector<std::vector<int>> key_pos(m);
  // child_pos[x][i]: positions in plans[x] of the vertices shared with child i.
  std::vector<std::vector<std::vector<int>>> child_pos(m);
  for (int x = 0; x < m; ++x) {
    if (t.parent[x] < 0) continue;
    const int p = t.parent[x];
    for (Vertex v : mask_to_vector(reach[x] & reach[p])) key_pos[x].push_back(plans[x].position(v));
  }
  for (int x = 0; x < m; ++x)
    for (int c : ch[x]) {
      std::vector<int> pos;
      for (Vertex v : mask_to_vector(reach[c] & reach[x])) pos.push_back(plans[x].position(v));
      child_pos[x].push_back(pos);
    }
  const auto classes = detail::colour_classes(filter, host.num_vertices());

  std::vector<int> order, stack{t.root()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int c : ch[x]) stack.push_back(c);
  }
  std::vector<Map> tables(m);
  std::vector<Vertex> img;
  Key key;
  BigInt total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    const bool is_root = t.parent[x] < 0;
    if (ch[x].empty()) {
      // Leaves only count homomorphisms per key.
      std::map<Key, std::uint64_t> counts;
      std::uint64_t plain = 0;
      detail::enumerate_bag_homs(plans[x], host, filter, classes, img, [&](const std::vector<Vertex>& im) {
        if (is_root) {
          ++plain;
          return;
        }
        key.clear();
        for (int p : key_pos[x]) key.push_back(im[p]);
        ++counts[key];
      });
      if (is_root) total += plain;
      for (auto& [k, c] : counts) tables[x][k] = c;
      continue;
    }
    BigInt value;
    detail::enumerate_bag_homs(plans[x], host, filter, classes, img, [&](const std::vector<Vertex>& im) {
      value = 1;
      for (std::size_t i = 0; i < ch[x].size(); ++i) {
        key.clear();
        for (int p : child_pos[x][i]) key.push_back(im[p]);
        const auto& table = tables[ch[x][i]];
        auto found = table.find(key);
        if (found == table.end()) return;
        value *= found->second;
      }
      if (is_root) {
        total += value;
        return;
      }
      key.clear();
      for (int p : key_pos[x]) key.push_back(im[p]);
      tables[x][key] += value;
    });
    for (int c : ch[x]) Map().swap(tables[c]);
  }
  return total;
}

}  // namespace

BigInt count_oriented_homs(const OrientedGraph& h, const DagTreeDecomposition& t, const HostDag& host,
                           const ColourFilter& filter, bool hashed) {
  if (!validate_dtd(h, t).ok) throw PreconditionError("decomposition is not a valid dag tree decomposition");
  if (hashed) return run_dp<std::unordered_map<Key, BigInt, KeyHash>>(h, t, host, filter);
  return run_dp<std::map<Key, BigInt>>(h, t, host, filter);
}

BigInt count_homs_dtd(const Graph& h, const HostDag& host, const ColourFilter& filter, const HomOptions& options) {
  if (h.num_vertices() == 0) return 1;
  BigInt product = 1;
  for (const auto& comp : connected_components(h)) {
    auto sub = induced_subgraph(h, comp);
    ColourFilter local;
    if (filter.active()) {
      local.host_colour = filter.host_colour;
      for (Vertex v : comp) local.pattern_colour.push_back(filter.pattern_colour[v]);
    }
    BigInt sum = 0;
    // A colour filter breaks the symmetry that orientation classes rely on.
    std::vector<OrientationClass> classes;
    if (local.active()) {
      for_each_acyclic_orientation(sub.graph, [&](const OrientedGraph& o) { classes.push_back({o, 1}); });
    } else {
      classes = orientation_classes(sub.graph);
    }
    for (const auto& cls : classes) {
      const auto& o = cls.representative;
      auto t = choose_dtd(o, options.strategy);
      BigInt c = options.hashed_dictionary ? run_dp<std::unordered_map<Key, BigInt, KeyHash>>(o, t, host, local)
                                           : run_dp<std::map<Key, BigInt>>(o, t, host, local);
      sum += c * cls.multiplicity;
    }
    product *= sum;
    if (product == 0) break;
  }
  return product;
}

BigInt count_homs_dtd(const Graph& h, const Graph& g, const HomOptions& options) {
  HostDag host(g);
  return count_homs_dtd(h, host, {}, options);
}

void require_colouring_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& colouring) {
  if (static_cast<int>(colouring.size()) != g.num_vertices())
    throw PreconditionError("colouring length differs from host size");
  for (int c : colouring)
    if (c < 0 || c >= h.num_vertices()) throw PreconditionError("colour outside the pattern's vertex set");
  for (auto [u, v] : g.edges())
    if (!h.has_edge(colouring[u], colouring[v]))
      throw PreconditionError("colouring is not a homomorphism: edge " + std::to_string(u) + " " + std::to_string(v) +
                              " maps to a non-edge");
}

BigInt count_cp_homs(const Graph& h, const Graph& g, const std::vector<int>& colouring, CpMethod method) {
  require_colouring_homomorphism(g, h, colouring);
  const int k = h.num_vertices();
  std::vector<char> present(k, 0);
  for (int c : colouring) present[c] = 1;
  if (std::find(present.begin(), present.end(), 0) != present.end()) return 0;
  if (method == CpMethod::Filter) {
    ColourFilter filter;
    filter.host_colour = colouring;
    filter.pattern_colour.resize(k);
    for (int v = 0; v < k; ++v) filter.pattern_colour[v] = v;
    HostDag host(g);
    return count_homs_dtd(h, host, filter);
  }
  return exact_div(count_cf_homs(h, g, colouring), automorphism_count(h), "colour-prescribed");
}

BigInt count_cf_homs(const Graph& h, const Graph& g, const std::vector<int>& colouring) {
  require_colouring_homomorphism(g, h, colouring);
  const int k = h.num_vertices();
  if (k > 24) throw SizeBoundError("inclusion-exclusion over more than 24 colours");
  BigInt total = 0;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::vector<int> removed;
    for (int c = 0; c < k; ++c)
      if (s >> c & 1) removed.push_back(c);
    auto rest = remove_colour_classes(g, colouring, removed);
    BigInt homs = count_homs_dtd(h, rest.graph);
    if (__builtin_popcount(s) % 2) total -= homs;
    else total += homs;
  }
  return total;
}

BigInt count_colour_respecting_homs(const Graph& h, const std::vector<int>& pattern_colouring, const Graph& g,
                                    const std::vector<int>& host_colouring) {
  if (static_cast<int>(pattern_colouring.size()) != h.num_vertices() ||
      static_cast<int>(host_colouring.size()) != g.num_vertices())
    throw PreconditionError("colouring length mismatch");
  ColourFilter filter{host_colouring, pattern_colouring};
  HostDag host(g);
  return count_homs_dtd(h, host, filter);
}

}  // namespace degencount
