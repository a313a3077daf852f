#include "degencount/colourful.hpp"

#include "degencount/basis.hpp"
#include "degencount/canon.hpp"
#include "degencount/generators.hpp"
#include "degencount/hom.hpp"
#include "degencount/orient.hpp"
#include "degencount/params.hpp"
#include "degencount/rng.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace degencount {

namespace {

// Range-checked; false when some colour is unused.
bool covers_all_colours(const std::vector<int>& colouring, int n, int k) {
  if (static_cast<int>(colouring.size()) != n) throw PreconditionError("colouring length differs from |V(G)|");
  std::vector<char> seen(k, 0);
  int hit = 0;
  for (int c : colouring) {
    if (c < 0 || c >= k) throw PreconditionError("colour " + std::to_string(c) + " out of range");
    if (!seen[c]) {
      seen[c] = 1;
      ++hit;
    }
  }
  return hit == k;
}

void require_colouring(const std::vector<int>& colouring, int n, int k) {
  if (!covers_all_colours(colouring, n, k)) throw PreconditionError("colouring is not surjective");
}

// Recursion over colour classes: greedy when every class is large, otherwise
// branch over the tuples of the small classes.
class IsSearch {
 public:
  IsSearch(const Graph& g, const std::vector<int>& colour, int k)
      : g_(g), colour_(colour), k_(k), order_(degeneracy_order(g)) {}

  bool run(const std::vector<char>& alive, const std::vector<int>& colours, std::vector<Vertex>& witness,
           bool& greedy) const {
    const int kk = static_cast<int>(colours.size());
    if (kk == 0) return true;
    std::vector<int> slot(k_, -1);
    for (int i = 0; i < kk; ++i) slot[colours[i]] = i;
    std::vector<std::vector<Vertex>> cls(kk);
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (alive[v] && slot[colour_[v]] >= 0) cls[slot[colour_[v]]].push_back(v);
    for (const auto& c : cls)
      if (c.empty()) return false;
    const std::size_t limit = static_cast<std::size_t>(order_.degeneracy) * (kk - 1);
    std::vector<int> small;
    for (int i = 0; i < kk; ++i)
      if (cls[i].size() <= limit) small.push_back(i);
    if (small.empty()) {
      run_greedy(alive, slot, cls, witness);
      greedy = true;
      return true;
    }
    std::stable_sort(small.begin(), small.end(), [&](int a, int b) { return cls[a].size() < cls[b].size(); });
    std::vector<int> rest;
    for (int i = 0; i < kk; ++i)
      if (std::find(small.begin(), small.end(), i) == small.end()) rest.push_back(colours[i]);
    std::vector<Vertex> chosen;
    std::function<bool(std::size_t)> tuples = [&](std::size_t j) {
      if (j == small.size()) {
        if (rest.empty()) {
          witness.insert(witness.end(), chosen.begin(), chosen.end());
          return true;
        }
        std::vector<char> next = alive;
        for (int s : small)
          for (Vertex u : cls[s]) next[u] = 0;
        for (Vertex v : chosen)
          for (Vertex u : g_.neighbours(v)) next[u] = 0;
        const std::size_t mark = witness.size();
        bool sub_greedy = false;
        if (run(next, rest, witness, sub_greedy)) {
          witness.insert(witness.end(), chosen.begin(), chosen.end());
          greedy = greedy || sub_greedy;
          return true;
        }
        witness.resize(mark);
        return false;
      }
      for (Vertex v : cls[small[j]]) {
        bool independent = true;
        for (Vertex u : chosen)
          if (g_.has_edge(u, v)) independent = false;
        if (!independent) continue;
        chosen.push_back(v);
        if (tuples(j + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return tuples(0);
  }

 private:
  // Repeatedly takes the first remaining vertex in degeneracy order and
  // deletes its colour class and its neighbourhood.
  void run_greedy(const std::vector<char>& alive, const std::vector<int>& slot,
                  const std::vector<std::vector<Vertex>>& cls, std::vector<Vertex>& witness) const {
    std::vector<char> live = alive;
    std::vector<char> pending(cls.size(), 1);
    std::size_t left = cls.size();
    for (Vertex v : order_.order) {
      if (left == 0) break;
      if (!live[v] || slot[colour_[v]] < 0 || !pending[slot[colour_[v]]]) continue;
      const int s = slot[colour_[v]];
      witness.push_back(v);
      pending[s] = 0;
      --left;
      for (Vertex u : cls[s]) live[u] = 0;
      for (Vertex u : g_.neighbours(v)) live[u] = 0;
    }
    if (left != 0) throw std::logic_error("greedy branch ran out of vertices");
  }

  const Graph& g_;
  const std::vector<int>& colour_;
  int k_;
  DegeneracyOrder order_;
};

DetectResult detect_is_unchecked(const Graph& g, const std::vector<int>& colouring, int k) {
  DetectResult r;
  IsSearch search(g, colouring, k);
  std::vector<int> colours(k);
  std::iota(colours.begin(), colours.end(), 0);
  r.found = search.run(std::vector<char>(g.num_vertices(), 1), colours, r.witness, r.greedy);
  if (!r.found) r.witness.clear();
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

// A map of H into G with v sent into candidates[v], preserving edges (and
// non-edges when strong). Empty if none exists.
std::vector<Vertex> find_map(const Graph& h, const Graph& g, const std::vector<std::vector<char>>& allowed,
                             bool strong) {
  const int k = h.num_vertices();
  std::vector<Vertex> order, anchor(k, -1);
  std::vector<char> placed(k, 0);
  for (Vertex s = 0; s < k; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (Vertex u : h.neighbours(order[i]))
        if (!placed[u]) {
          placed[u] = 1;
          anchor[u] = order[i];
          order.push_back(u);
        }
  }
  std::vector<Vertex> phi(k, -1);
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == k) return true;
    const Vertex x = order[i];
    const auto& candidates = anchor[x] < 0 ? all : g.neighbours(phi[anchor[x]]);
    for (Vertex y : candidates) {
      if (used[y] || !allowed[x][y]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const Vertex z = order[j];
        const bool he = h.has_edge(x, z), ge = g.has_edge(y, phi[z]);
        if (he ? !ge : (strong && ge)) ok = false;
      }
      if (!ok) continue;
      phi[x] = y;
      used[y] = 1;
      if (extend(i + 1)) return true;
      used[y] = 0;
    }
    phi[x] = -1;
    return false;
  };
  if (!extend(0)) return {};
  return phi;
}

}  // namespace

DetectResult detect_multicol_is(const Graph& g, const std::vector<int>& colouring, int k) {
  require_colouring(colouring, g.num_vertices(), k);
  return detect_is_unchecked(g, colouring, k);
}

DetectResult detect_multicol_sub(const Graph& h, const Graph& g, const std::vector<int>& colouring) {
  const int k = h.num_vertices();
  DetectResult r;
  if (!covers_all_colours(colouring, g.num_vertices(), k)) return r;
  std::vector<int> pattern_colour(k);
  std::iota(pattern_colour.begin(), pattern_colour.end(), 0);
  do {
    if (count_colour_respecting_homs(h, pattern_colour, g, colouring) == 0) continue;
    std::vector<std::vector<char>> allowed(k, std::vector<char>(g.num_vertices(), 0));
    for (Vertex v = 0; v < k; ++v)
      for (Vertex y = 0; y < g.num_vertices(); ++y) allowed[v][y] = colouring[y] == pattern_colour[v];
    r.found = true;
    r.witness = find_map(h, g, allowed, false);
    if (r.witness.empty() && k > 0) throw std::logic_error("counted a colourful hom but found none");
    return r;
  } while (std::next_permutation(pattern_colour.begin(), pattern_colour.end()));
  return r;
}

DetectResult detect_multicol_indsub(const Graph& h, const Graph& g, const std::vector<int>& colouring) {
  const int k = h.num_vertices(), n = g.num_vertices();
  DetectResult r;
  if (!covers_all_colours(colouring, n, k)) return r;
  if (induced_matching_number(h) == 0) {
    r = detect_is_unchecked(g, colouring, k);
    return r;
  }
  const HostDag host(g);
  std::vector<std::vector<Vertex>> by_colour(k);
  for (Vertex v = 0; v < n; ++v) by_colour[colouring[v]].push_back(v);

  for (const auto& oc : orientation_classes(h)) {
    const OrientedGraph& d = oc.representative;
    const VertexMask kernel = find_kernel(d);
    const VertexMask rest_sources = d.sources() & ~kernel;
    const VertexMask inner = d.all() & ~rest_sources;
    const std::vector<Vertex> outer = mask_to_vector(rest_sources);
    std::vector<Vertex> order, anchor(k, -1);
    for (Vertex v : d.topological_order())
      if (inner >> v & 1) order.push_back(v);
    for (Vertex v : order)
      if (!(kernel >> v & 1)) anchor[v] = lowest(d.in(v) & inner);

    std::vector<Vertex> phi(k, -1);
    std::vector<int> mark(n, -1);
    std::uint64_t used_colours = 0;
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);

    // Extends a valid image of the reachable part by an independent set on
    // the remaining sources.
    auto complete = [&]() {
      std::vector<int> free_colours;
      for (int c = 0; c < k; ++c)
        if (!(used_colours >> c & 1)) free_colours.push_back(c);
      const std::size_t l = outer.size();
      if (l == 0) {
        r.witness = phi;
        return true;
      }
      // candidates[i][j]: vertices of colour free_colours[j] fitting source outer[i].
      std::vector<std::vector<std::vector<Vertex>>> candidates(l, std::vector<std::vector<Vertex>>(l));
      for (std::size_t j = 0; j < l; ++j)
        for (Vertex v : by_colour[free_colours[j]]) {
          VertexMask out = 0;
          bool has_in = false;
          for (Vertex w : g.neighbours(v)) {
            if (mark[w] < 0) continue;
            if (host.has_arc(v, w)) out |= bit(mark[w]);
            else has_in = true;
          }
          if (has_in) continue;
          for (std::size_t i = 0; i < l; ++i)
            if (out == d.out(outer[i])) candidates[i][j].push_back(v);
        }
      std::vector<int> perm(l);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool empty = false;
        std::vector<Vertex> vertices;
        std::vector<int> sub_colour;
        for (std::size_t i = 0; i < l; ++i) {
          const auto& c = candidates[i][perm[i]];
          if (c.empty()) empty = true;
          vertices.insert(vertices.end(), c.begin(), c.end());
          sub_colour.insert(sub_colour.end(), c.size(), static_cast<int>(i));
        }
        if (empty) continue;
        std::vector<int> order_of(n, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) order_of[vertices[i]] = static_cast<int>(i);
        auto sub = induced_subgraph(g, vertices);
        std::vector<int> colours(sub.graph.num_vertices());
        for (int i = 0; i < sub.graph.num_vertices(); ++i) colours[i] = sub_colour[order_of[sub.original[i]]];
        const DetectResult is = detect_is_unchecked(sub.graph, colours, static_cast<int>(l));
        if (!is.found) continue;
        r.witness = phi;
        for (Vertex w : is.witness) r.witness[outer[colours[w]]] = sub.original[w];
        return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
      if (i == order.size()) return complete();
      const Vertex x = order[i];
      const auto& cand = anchor[x] < 0 ? all : host.out(phi[anchor[x]]);
      for (Vertex y : cand) {
        if (mark[y] >= 0 || (used_colours >> colouring[y] & 1)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          const Vertex z = order[j];
          if (d.has_arc(z, x) != host.has_arc(phi[z], y) || d.has_arc(x, z) != host.has_arc(y, phi[z])) ok = false;
        }
        if (!ok) continue;
        phi[x] = y;
        mark[y] = x;
        used_colours |= std::uint64_t{1} << colouring[y];
        if (extend(i + 1)) return true;
        used_colours &= ~(std::uint64_t{1} << colouring[y]);
        mark[y] = -1;
        phi[x] = -1;
      }
      return false;
    };
    if (extend(0)) {
      r.found = true;
      return r;
    }
  }
  r.witness.clear();
  return r;
}

struct ColourfulCounter::Impl {
  Graph h, g;
  int k = 0;
  ColourfulEngine engine;
  HomBasis terms;                     // coefficients of colourful embedding counts
  std::vector<Vertex> sets;           // k vertices per listed copy set
  std::vector<std::uint64_t> copies;  // copies on each set
};

ColourfulCounter::ColourfulCounter(const Graph& h, const Graph& g, CopyKind kind, ColourfulEngine engine)
    : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  m.h = h;
  m.g = g;
  m.k = h.num_vertices();
  m.engine = engine;
  if (m.k > 20) throw SizeBoundError("colourful counting limited to 20 colours");
  const BigInt aut = automorphism_count(h);
  if (engine == ColourfulEngine::Homomorphism) {
    if (kind == CopyKind::Sub) {
      m.terms.add(h, Rational(1, 1) / Rational(aut));
    } else {
      std::vector<Edge> non_edges;
      for (Vertex u = 0; u < m.k; ++u)
        for (Vertex v = u + 1; v < m.k; ++v)
          if (!h.has_edge(u, v)) non_edges.emplace_back(u, v);
      if (static_cast<int>(non_edges.size()) > kMaxSupergraphNonEdges)
        throw SizeBoundError("supergraph expansion limited to " + std::to_string(kMaxSupergraphNonEdges) +
                             " non-edges");
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << non_edges.size()); ++s) {
        std::vector<Edge> extra;
        for (std::size_t i = 0; i < non_edges.size(); ++i)
          if (s >> i & 1) extra.push_back(non_edges[i]);
        m.terms.add(add_edges(h, extra), Rational(extra.size() % 2 ? -1 : 1) / Rational(aut));
      }
    }
    return;
  }
  // Table: list every (strong) embedding once, keyed by its image set.
  const bool strong = kind == CopyKind::IndSub;
  const int n = g.num_vertices();
  std::map<std::vector<Vertex>, std::uint64_t> table;
  std::vector<Vertex> order, anchor(m.k, -1);
  std::vector<char> placed(m.k, 0);
  for (Vertex s = 0; s < m.k; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (Vertex u : h.neighbours(order[i]))
        if (!placed[u]) {
          placed[u] = 1;
          anchor[u] = order[i];
          order.push_back(u);
        }
  }
  std::vector<Vertex> phi(m.k, -1), all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<char> used(n, 0);
  const std::uint64_t budget = brute_force_budget();
  std::uint64_t nodes = 0;
  std::function<void(int)> extend = [&](int i) {
    if (++nodes > budget) throw BudgetExceeded("copy listing exceeds the brute-force budget");
    if (i == m.k) {
      std::vector<Vertex> key = phi;
      std::sort(key.begin(), key.end());
      ++table[key];
      return;
    }
    const Vertex x = order[i];
    const auto& candidates = anchor[x] < 0 ? all : g.neighbours(phi[anchor[x]]);
    for (Vertex y : candidates) {
      if (used[y]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const Vertex z = order[j];
        const bool he = h.has_edge(x, z), ge = g.has_edge(y, phi[z]);
        if (he ? !ge : (strong && ge)) ok = false;
      }
      if (!ok) continue;
      phi[x] = y;
      used[y] = 1;
      extend(i + 1);
      used[y] = 0;
    }
  };
  extend(0);
  const std::uint64_t a = static_cast<std::uint64_t>(aut);
  for (const auto& [key, count] : table) {
    m.sets.insert(m.sets.end(), key.begin(), key.end());
    m.copies.push_back(count / a);
  }
}

ColourfulCounter::~ColourfulCounter() = default;
ColourfulCounter::ColourfulCounter(ColourfulCounter&&) noexcept = default;

int ColourfulCounter::k() const { return impl_->k; }

BigInt ColourfulCounter::count(const std::vector<int>& colouring) const {
  const Impl& m = *impl_;
  const int k = m.k;
  if (static_cast<int>(colouring.size()) != m.g.num_vertices())
    throw PreconditionError("colouring length differs from |V(G)|");
  for (int c : colouring)
    if (c < 0 || c >= k) throw PreconditionError("colour " + std::to_string(c) + " out of range");
  if (k == 0) return 1;
  if (m.engine == ColourfulEngine::Table) {
    const std::uint32_t full = (1u << k) - 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m.copies.size(); ++i) {
      std::uint32_t seen = 0;
      for (int j = 0; j < k; ++j) seen |= 1u << colouring[m.sets[i * k + j]];
      if (seen == full) total += m.copies[i];
    }
    return total;
  }
  // Colourful homs of a k-vertex pattern into k colours are embeddings.
  std::vector<BigInt> colourful(m.terms.size(), 0);
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::vector<int> removed;
    for (int c = 0; c < k; ++c)
      if (!(s >> c & 1)) removed.push_back(c);
    const auto rest = remove_colour_classes(m.g, colouring, removed);
    const HostDag host(rest.graph);
    const bool negative = removed.size() % 2;
    std::size_t t = 0;
    for (const auto& [label, term] : m.terms.terms()) {
      const BigInt homs = count_homs_dtd(term.graph, host, {});
      if (negative) colourful[t] -= homs;
      else colourful[t] += homs;
      ++t;
    }
  }
  Rational total = 0;
  std::size_t t = 0;
  for (const auto& [label, term] : m.terms.terms()) total += term.coefficient * Rational(colourful[t++]);
  if (denominator(total) != 1 || total < 0) throw std::logic_error("colourful count is not a nonnegative integer");
  return numerator(total);
}

Rational colourful_scale(int k) {
  BigInt power = 1, factorial = 1;
  for (int i = 1; i <= k; ++i) {
    power *= k;
    factorial *= i;
  }
  return Rational(power) / Rational(factorial);
}

namespace {

void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw PreconditionError("epsilon must lie in (0, 1)");
}

std::uint64_t ceil_to_u64(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (q * denominator(x) < numerator(x)) ++q;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw BudgetExceeded("sample count overflows");
  return static_cast<std::uint64_t>(q);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Runs body(begin, end, slot) over [0, total) split into contiguous chunks.
void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
  threads = std::max(1, threads);
  if (threads == 1 || total < 2) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * t / threads, end = total * (t + 1) / threads;
    pool.emplace_back([&, begin, end, t] {
      try {
        body(begin, end, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Rational median(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  return m % 2 ? values[m / 2] : (values[m / 2 - 1] + values[m / 2]) / 2;
}

ApproxResult approx_colourful(const Graph& h, const Graph& g, CopyKind kind, const Rational& eps,
                              std::uint64_t seed, const ApproxOptions& options) {
  require_epsilon(eps);
  if (options.groups < 1) throw PreconditionError("at least one group is required");
  ApproxResult result;
  result.epsilon = eps;
  result.seed = seed;
  const int k = h.num_vertices(), n = g.num_vertices();
  if (k == 0 || k > n) {
    result.estimate = k == 0 ? 1 : 0;
    result.method = "exact";
    return result;
  }
  const std::uint64_t per_group =
      options.samples_per_group.value_or(colourful_samples_per_group(k, eps, options.sample_constant));
  if (per_group == 0) throw PreconditionError("samples per group must be positive");
  const ColourfulCounter counter(h, g, kind, options.engine);
  const int groups = options.groups;
  const int threads = std::max(1, options.threads);
  std::vector<std::vector<BigInt>> sums(threads, std::vector<BigInt>(groups, 0));
  parallel_chunks(per_group * groups, threads, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    std::vector<int> colouring(n);
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      for (auto& c : colouring) c = static_cast<int>(rng.below(k));
      sums[slot][i / per_group] += counter.count(colouring);
    }
  });
  const Rational scale = colourful_scale(k) / Rational(BigInt(per_group));
  std::vector<Rational> means(groups);
  for (int j = 0; j < groups; ++j) {
    BigInt total = 0;
    for (int t = 0; t < threads; ++t) total += sums[t][j];
    means[j] = Rational(total) * scale;
  }
  result.estimate = median(means);
  result.trials = per_group * groups;
  result.method = "sampling";
  return result;
}

// Evaluates phi on induced k-subgraphs, memoised by the labelled adjacency
// pattern when it fits in 64 bits.
class SubsetEvaluator {
 public:
  SubsetEvaluator(const Property& phi, const Graph& g, int k) : phi_(phi), g_(g), k_(k) {}

  bool operator()(const std::vector<Vertex>& subset) {
    if (k_ * (k_ - 1) / 2 > 64) return phi_(induced_subgraph(g_, subset).graph);
    std::uint64_t code = 0;
    int b = 0;
    for (int i = 0; i < k_; ++i)
      for (int j = i + 1; j < k_; ++j, ++b)
        if (g_.has_edge(subset[i], subset[j])) code |= std::uint64_t{1} << b;
    auto it = memo_.find(code);
    if (it != memo_.end()) return it->second;
    std::vector<Edge> edges;
    b = 0;
    for (int i = 0; i < k_; ++i)
      for (int j = i + 1; j < k_; ++j, ++b)
        if (code >> b & 1) edges.emplace_back(i, j);
    const bool value = phi_(Graph(k_, edges));
    memo_.emplace(code, value);
    return value;
  }

 private:
  const Property& phi_;
  const Graph& g_;
  int k_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

std::vector<Vertex> random_subset(CounterRng& rng, int n, int k) {
  // Floyd's algorithm.
  std::vector<Vertex> s;
  s.reserve(k);
  for (int j = n - k; j < n; ++j) {
    const Vertex t = static_cast<Vertex>(rng.below(j + 1));
    s.push_back(std::find(s.begin(), s.end(), t) == s.end() ? t : j);
  }
  std::sort(s.begin(), s.end());
  return s;
}

ApproxResult exact_result(const BigInt& value, const Rational& eps, std::uint64_t seed, const std::string& method) {
  ApproxResult r;
  r.estimate = Rational(value);
  r.epsilon = eps;
  r.seed = seed;
  r.method = method;
  return r;
}

}  // namespace

std::uint64_t colourful_samples_per_group(int k, const Rational& eps, const Rational& constant) {
  require_epsilon(eps);
  return ceil_to_u64(constant * colourful_scale(k) / (eps * eps));
}

std::uint64_t property_sample_count(int k, int d, const Rational& eps) {
  require_epsilon(eps);
  BigInt power = 1;
  for (int i = 0; i < k; ++i) power *= BigInt(d) * k + k;
  return ceil_to_u64(Rational(3 * power) / (eps * eps));
}

ApproxResult approx_count_subs(const Graph& h, const Graph& g, const Rational& eps, std::uint64_t seed,
                               const ApproxOptions& options) {
  return approx_colourful(h, g, CopyKind::Sub, eps, seed, options);
}

ApproxResult approx_count_indsubs(const Graph& h, const Graph& g, const Rational& eps, std::uint64_t seed,
                                  const ApproxOptions& options) {
  return approx_colourful(h, g, CopyKind::IndSub, eps, seed, options);
}

BigInt count_property_brute(const Property& phi, int k, const Graph& g) {
  const int n = g.num_vertices();
  if (k < 0) throw PreconditionError("k must be nonnegative");
  if (k > n) return 0;
  if (binomial(n, k) > BigInt(brute_force_budget())) throw BudgetExceeded("C(n, k) exceeds the brute-force budget");
  SubsetEvaluator eval(phi, g, k);
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  BigInt total = 0;
  while (true) {
    if (eval(subset)) ++total;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

ApproxResult approx_count_property(const Property& phi, int k, const Graph& g, const Rational& eps,
                                   std::uint64_t seed, int c, const ApproxOptions& options) {
  require_epsilon(eps);
  const int n = g.num_vertices();
  if (k < 0) throw PreconditionError("k must be nonnegative");
  if (k > n) return exact_result(0, eps, seed, "exact");
  if (k < c) return exact_result(count_property_brute(phi, k, g), eps, seed, "exact");
  const int d = degeneracy(g);
  if (static_cast<long long>(n) < static_cast<long long>(k) * (d + 1))
    return exact_result(count_property_brute(phi, k, g), eps, seed, "exact");
  const std::uint64_t samples = property_sample_count(k, d, eps);
  const int threads = std::max(1, options.threads);
  std::vector<std::uint64_t> hits(threads, 0);
  parallel_chunks(samples, threads, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    SubsetEvaluator eval(phi, g, k);
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      if (eval(random_subset(rng, n, k))) ++hits[slot];
    }
  });
  std::uint64_t total = 0;
  for (auto x : hits) total += x;
  ApproxResult r;
  r.estimate = Rational(BigInt(total)) * Rational(binomial(n, k)) / Rational(BigInt(samples));
  r.epsilon = eps;
  r.seed = seed;
  r.trials = samples;
  r.method = "sampling";
  return r;
}

std::optional<int> independent_set_threshold(const Property& phi, int cap) {
  if (cap < 1 || !phi(independent_set(cap))) return std::nullopt;
  int c = cap;
  while (c > 1 && phi(independent_set(c - 1))) --c;
  return c;
}

std::optional<int> first_failing_independent_set(const Property& phi, int cap) {
  for (int c = 1; c <= cap; ++c)
    if (!phi(independent_set(c))) return c;
  return std::nullopt;
}

ApproxResult approx_count_minor_closed(const Property& phi, int k, const Graph& g, const Rational& eps,
                                       std::uint64_t seed, int cap, const ApproxOptions& options) {
  require_epsilon(eps);
  const auto c = first_failing_independent_set(phi, cap);
  if (!c) return approx_count_property(phi, k, g, eps, seed, 1, options);
  if (k > *c) return exact_result(0, eps, seed, "zero");
  return exact_result(count_property_brute(phi, k, g), eps, seed, "exact");
}

Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!digits(a) || !digits(b)) throw ParseError("not a rational number: " + text);
    const Rational num = parse_rational(a), den = parse_rational(b);
    if (den == 0) throw ParseError("zero denominator: " + text);
    return num / den;
  }
  const auto dot = text.find('.');
  const std::string whole = text.substr(0, dot), frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) || (whole.empty() && frac.empty()))
    throw ParseError("not a rational number: " + text);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::string all = whole + frac;
  all.erase(0, std::min(all.find_first_not_of('0'), all.size()));
  return Rational(BigInt(all.empty() ? "0" : all), den);
}

}  // namespace degencount
