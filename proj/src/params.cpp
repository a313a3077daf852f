#include "degencount/params.hpp"

#include "degencount/canon.hpp"

#include <algorithm>
#include <functional>

namespace degencount {

namespace {

void require_size(const Graph& h) {
  if (h.num_vertices() > kMaxParamVertices)
    throw SizeBoundError("parameter search limited to " + std::to_string(kMaxParamVertices) + " vertices");
}

// Maximum independent set of the graph given by masks, by branching on a
// vertex of largest remaining degree.
VertexMask max_independent(const std::vector<VertexMask>& adj, VertexMask candidates) {
  VertexMask chosen = 0;
  // Vertices without candidate neighbours can always be taken.
  for (VertexMask m = candidates; m; m &= m - 1) {
    const Vertex v = lowest(m);
    if ((adj[v] & candidates) == 0) chosen |= bit(v);
  }
  candidates &= ~chosen;
  if (candidates == 0) return chosen;
  Vertex pick = lowest(candidates);
  for (VertexMask m = candidates; m; m &= m - 1)
    if (popcount(adj[lowest(m)] & candidates) > popcount(adj[pick] & candidates)) pick = lowest(m);
  const VertexMask with = bit(pick) | max_independent(adj, candidates & ~bit(pick) & ~adj[pick]);
  const VertexMask without = max_independent(adj, candidates & ~bit(pick));
  return chosen | (popcount(with) >= popcount(without) ? with : without);
}

VertexMask all_of(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

}  // namespace

std::vector<Vertex> maximum_independent_set(const Graph& h) {
  require_size(h);
  return mask_to_vector(max_independent(h.adjacency_masks(), all_of(h.num_vertices())));
}

int independence_number(const Graph& h) { return static_cast<int>(maximum_independent_set(h).size()); }

int vertex_cover_number(const Graph& h) { return h.num_vertices() - independence_number(h); }

std::vector<Edge> maximum_induced_matching(const Graph& h) {
  require_size(h);
  const auto& e = h.edges();
  if (e.size() > static_cast<std::size_t>(kMaskBits))
    throw SizeBoundError("induced matching search limited to 64 edges");
  // Two edges conflict when they share or join endpoints.
  std::vector<VertexMask> conflict(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [x, y] = e[j];
      if (a == x || a == y || b == x || b == y || h.has_edge(a, x) || h.has_edge(a, y) || h.has_edge(b, x) ||
          h.has_edge(b, y)) {
        conflict[i] |= bit(static_cast<Vertex>(j));
        conflict[j] |= bit(static_cast<Vertex>(i));
      }
    }
  std::vector<Edge> out;
  for (Vertex i : mask_to_vector(max_independent(conflict, all_of(static_cast<int>(e.size()))))) out.push_back(e[i]);
  return out;
}

int induced_matching_number(const Graph& h) { return static_cast<int>(maximum_induced_matching(h).size()); }

bool is_edge_transitive(const Graph& h) {
  if (h.num_vertices() > kCanonicalMaxVertices)
    throw SizeBoundError("edge transitivity limited to " + std::to_string(kCanonicalMaxVertices) + " vertices");
  std::string first;
  for (const Edge& e : h.edges()) {
    const std::string label = canonical_label(remove_edge(h, e));
    if (first.empty()) first = label;
    else if (label != first) return false;
  }
  return true;
}

std::string ParamReport::check() const {
  if (imn > k / 2) return "imn exceeds k/2";
  if (alpha > k) return "alpha exceeds k";
  if (vc + alpha != k) return "vc + alpha differs from k";
  if (tau1 && tau2 && *tau1 > *tau2) return "tau1 exceeds tau2";
  if (tau2 && tau3 && *tau2 > *tau3) return "tau2 exceeds tau3";
  if (tau2 && *tau2 > std::max(1, imn)) return "tau2 exceeds max(1, imn)";
  return {};
}

ParamReport param_report(const Graph& h, const TauLimits& limits, TauCache* cache) {
  TauCache local;
  if (!cache) cache = &local;
  ParamReport r;
  r.k = h.num_vertices();
  r.imn = induced_matching_number(h);
  r.alpha = independence_number(h);
  r.vc = r.k - r.alpha;
  if (r.k <= limits.tau1) r.tau1 = tau1(h, cache);
  if (r.k <= limits.tau2) r.tau2 = tau2(h, cache);
  if (r.k <= limits.tau3) r.tau3 = tau3(h, cache);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Fpt: return "FPT";
    case Verdict::Hard: return "#W[1]-hard";
    case Verdict::Fptras: return "FPTRAS";
    case Verdict::Open: return "open";
    case Verdict::Unknown: break;
  }
  return "unknown";
}

Classification classify(const Graph& h, const TauLimits& limits, TauCache* cache) {
  Classification c;
  c.params = param_report(h, limits, cache);
  c.sub_exact_exponent = std::max(1, c.params.imn);
  c.indsub_exact_exponent = c.params.alpha;
  c.hom_exponent = c.params.tau1;
  c.approx_sub_exponent = c.params.tau1;
  c.approx_indsub_exponent = c.params.imn + 1;
  return c;
}

FamilyVerdicts classify_family(const FamilyDeclaration& f) {
  FamilyVerdicts v;
  if (f.imn_bounded) {
    v.sub = *f.imn_bounded ? Verdict::Fpt : Verdict::Hard;
    v.approx_indsub = *f.imn_bounded ? Verdict::Fptras : Verdict::Open;
  }
  if (f.alpha_bounded) v.indsub = *f.alpha_bounded ? Verdict::Fpt : Verdict::Hard;
  if (f.tau1_bounded) {
    v.approx_sub = *f.tau1_bounded ? Verdict::Fptras : Verdict::Open;
    if (*f.tau1_bounded) v.hom = Verdict::Fpt;
  }
  // Bounded induced grid minors leave the homomorphism case open.
  if (v.hom != Verdict::Fpt && f.induced_grid_minors_bounded)
    v.hom = *f.induced_grid_minors_bounded ? Verdict::Open : Verdict::Hard;
  return v;
}

namespace {

struct Emitter {
  std::ostream& out;
  bool key_value;
  void operator()(const std::string& key, const std::string& value) const {
    out << key << (key_value ? "=" : ": ") << value << '\n';
  }
};

std::string opt(const std::optional<int>& x) { return x ? std::to_string(*x) : "exceeds bound"; }

}  // namespace

void write_report(std::ostream& out, const Classification& c, bool key_value) {
  const Emitter emit{out, key_value};
  const ParamReport& p = c.params;
  emit("k", std::to_string(p.k));
  emit("imn", std::to_string(p.imn));
  emit("alpha", std::to_string(p.alpha));
  emit("vc", std::to_string(p.vc));
  emit("tau1", opt(p.tau1));
  emit("tau2", opt(p.tau2));
  emit("tau3", opt(p.tau3));
  emit("sub.exact.exponent", std::to_string(c.sub_exact_exponent));
  emit("indsub.exact.exponent", std::to_string(c.indsub_exact_exponent));
  emit("hom.exact.exponent", opt(c.hom_exponent));
  emit("hom.hardness", "unknown (open problem)");
  emit("sub.approx.exponent", opt(c.approx_sub_exponent));
  emit("indsub.approx.exponent", std::to_string(c.approx_indsub_exponent));
}

void write_family_report(std::ostream& out, const FamilyDeclaration& family, const FamilyVerdicts& v, bool key_value) {
  const Emitter emit{out, key_value};
  emit("family", family.name);
  emit("sub", to_string(v.sub));
  emit("indsub", to_string(v.indsub));
  emit("hom", to_string(v.hom));
  emit("approx.sub", to_string(v.approx_sub));
  emit("approx.indsub", to_string(v.approx_indsub));
}

}  // namespace degencount
