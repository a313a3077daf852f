#include "degencount/gadget.hpp"

#include "degencount/generators.hpp"
#include "degencount/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace degencount {

namespace {

GadgetCheck fail(int condition, std::string message) { return {false, condition, std::move(message)}; }

std::string edge_name(const Edge& e) { return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}"; }

// Connectivity of H[vertices] by BFS over a membership array.
bool connected_in(const Graph& h, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  std::vector<char> in(h.num_vertices(), 0), seen(h.num_vertices(), 0);
  for (Vertex v : vertices) in[v] = 1;
  std::vector<Vertex> queue{vertices[0]};
  seen[vertices[0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : h.neighbours(queue[i]))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == vertices.size();
}

}  // namespace

GadgetCheck validate_fgadget(const Graph& h, const FGadget& g) {
  const Graph& f = g.base;
  const auto f_edges = f.edges();
  if (static_cast<int>(g.S.size()) != f.num_vertices())
    return fail(0, "expected " + std::to_string(f.num_vertices()) + " S blocks, got " + std::to_string(g.S.size()));
  if (g.P.size() != f_edges.size())
    return fail(0, "expected " + std::to_string(f_edges.size()) + " P blocks, got " + std::to_string(g.P.size()));
  // owner: 0..|V(F)|-1 for S, |V(F)|.. for P, -2 for R, -1 unassigned.
  const int n = h.num_vertices(), nf = f.num_vertices();
  std::vector<int> owner(n, -1);
  auto claim = [&](Vertex v, int who) -> bool {
    if (v < 0 || v >= n || owner[v] != -1) return false;
    owner[v] = who;
    return true;
  };
  for (int v = 0; v < nf; ++v)
    for (Vertex x : g.S[v])
      if (!claim(x, v)) return fail(0, "vertex " + std::to_string(x) + " out of range or in two blocks");
  for (std::size_t i = 0; i < g.P.size(); ++i)
    for (Vertex x : g.P[i].interior)
      if (!claim(x, nf + static_cast<int>(i))) return fail(0, "vertex " + std::to_string(x) + " out of range or in two blocks");
  for (Vertex x : g.R)
    if (!claim(x, -2)) return fail(0, "vertex " + std::to_string(x) + " out of range or in two blocks");
  for (Vertex x = 0; x < n; ++x)
    if (owner[x] == -1) return fail(0, "vertex " + std::to_string(x) + " is in no block");

  for (int v = 0; v < nf; ++v) {
    if (g.S[v].empty()) return fail(1, "S_" + std::to_string(v) + " is empty");
    if (!connected_in(h, g.S[v])) return fail(1, "H[S_" + std::to_string(v) + "] is not connected");
  }

  for (std::size_t i = 0; i < f_edges.size(); ++i) {
    const auto [a, b] = f_edges[i];
    const auto& p = g.P[i];
    const std::string name = "P_" + edge_name(f_edges[i]);
    if (p.interior.empty()) return fail(2, name + " is empty");
    if (p.endpoint_a < 0 || p.endpoint_a >= n || owner[p.endpoint_a] != a)
      return fail(2, name + ": endpoint " + std::to_string(p.endpoint_a) + " is not in S_" + std::to_string(a));
    if (p.endpoint_b < 0 || p.endpoint_b >= n || owner[p.endpoint_b] != b)
      return fail(2, name + ": endpoint " + std::to_string(p.endpoint_b) + " is not in S_" + std::to_string(b));
    std::vector<Vertex> path{p.endpoint_a};
    path.insert(path.end(), p.interior.begin(), p.interior.end());
    path.push_back(p.endpoint_b);
    // H[path] must be exactly the path in this order (it is then induced).
    for (std::size_t x = 0; x < path.size(); ++x)
      for (std::size_t y = x + 1; y < path.size(); ++y)
        if (h.has_edge(path[x], path[y]) != (y == x + 1))
          return fail(2, name + ": {" + std::to_string(path[x]) + "," + std::to_string(path[y]) + "} " +
                             (y == x + 1 ? "missing path edge" : "is a chord"));
  }

  for (auto [x, y] : h.edges()) {
    const int ox = owner[x], oy = owner[y];
    if (ox == -2 || oy == -2) continue;
    if (ox == oy && ox < nf) continue;  // inside S_v
    if (ox == oy) continue;             // inside P_e (consecutive, checked above)
    // Across an S block and a P block: must be an attachment edge of that path.
    auto attached = [&](Vertex s, int os, Vertex q, int oq) {
      if (os >= nf || oq < nf) return false;
      const auto& p = g.P[oq - nf];
      return (s == p.endpoint_a && q == p.interior.front()) || (s == p.endpoint_b && q == p.interior.back());
    };
    if (attached(x, ox, y, oy) || attached(y, oy, x, ox)) continue;
    return fail(3, "edge " + edge_name({x, y}) + " is in no S block, no path and avoids R");
  }
  return {};
}

GadgetCheck validate_fgadget(const Graph& f, const Graph& h, const FGadget& g) {
  if (!(f == g.base)) return fail(0, "gadget base differs from F");
  return validate_fgadget(h, g);
}

SubdivisionGadget fgadget_from_subdivision(const Graph& f, int times) {
  if (times < 1) throw PreconditionError("subdivision gadget needs at least one subdivision per edge");
  SubdivisionGadget out;
  out.h = subdivide(f, times);
  out.gadget.base = f;
  for (Vertex v = 0; v < f.num_vertices(); ++v) out.gadget.S.push_back({v});
  Vertex next = f.num_vertices();
  for (auto [a, b] : f.edges()) {
    FGadget::PathBlock p;
    p.endpoint_a = a;
    p.endpoint_b = b;
    for (int t = 0; t < times; ++t) p.interior.push_back(next++);
    out.gadget.P.push_back(p);
  }
  return out;
}

CpReduction reduce_cphom(const Graph& h, const FGadget& gadget, const Graph& g, const std::vector<int>& colouring) {
  const Graph& f = gadget.base;
  if (auto check = validate_fgadget(h, gadget); !check)
    throw PreconditionError("invalid gadget (condition " + std::to_string(check.condition) + "): " + check.message);
  if (static_cast<int>(colouring.size()) != g.num_vertices()) throw PreconditionError("colouring length differs from |V(G)|");
  std::vector<char> hit(f.num_vertices(), 0);
  for (int c : colouring) {
    if (c < 0 || c >= f.num_vertices()) throw PreconditionError("colour outside V(F)");
    hit[c] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw PreconditionError("colouring is not surjective onto V(F)");
  const auto f_edges = f.edges();
  std::map<Edge, int> f_edge_index;
  for (int i = 0; i < static_cast<int>(f_edges.size()); ++i) f_edge_index[f_edges[i]] = i;
  for (auto [x, y] : g.edges())
    if (!f.has_edge(colouring[x], colouring[y]))
      throw PreconditionError("colouring is not a homomorphism G -> F at edge " + edge_name({x, y}));

  const int nh = h.num_vertices();
  std::vector<int> pos(nh, -1);  // position of a vertex inside its S or P block
  for (const auto& s : gadget.S)
    for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;
  for (const auto& p : gadget.P)
    for (int i = 0; i < static_cast<int>(p.interior.size()); ++i) pos[p.interior[i]] = i;
  std::vector<char> in_r(nh, 0);
  for (Vertex r : gadget.R) in_r[r] = 1;

  CpReduction out;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> copies(nh);
  auto new_vertex = [&](Provenance p) {
    const Vertex id = static_cast<Vertex>(out.colouring.size());
    out.colouring.push_back(p.copy_of);
    out.provenance.push_back(p);
    copies[p.copy_of].push_back(id);
    return id;
  };
  std::vector<Vertex> r_copy(nh, -1);
  for (Vertex r : gadget.R) r_copy[r] = new_vertex({Provenance::Kind::Remainder, -1, r});
  // Step 1: a copy of H[S_c(x)] per vertex x of G.
  std::vector<Vertex> s_offset(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto& s = gadget.S[colouring[x]];
    s_offset[x] = static_cast<Vertex>(out.colouring.size());
    for (Vertex hv : s) new_vertex({Provenance::Kind::Vertex, x, hv});
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (h.has_edge(s[i], s[j])) edges.emplace_back(s_offset[x] + i, s_offset[x] + j);
  }
  // Step 2: a copy of H[P_e] per edge of G, attached to the two vertex copies.
  const auto g_edges = g.edges();
  for (int i = 0; i < static_cast<int>(g_edges.size()); ++i) {
    auto [x, y] = g_edges[i];
    if (colouring[x] > colouring[y]) std::swap(x, y);
    const int e = f_edge_index.at({colouring[x], colouring[y]});
    const auto& p = gadget.P[e];
    const Vertex base = static_cast<Vertex>(out.colouring.size());
    for (Vertex hv : p.interior) new_vertex({Provenance::Kind::Edge, i, hv});
    for (std::size_t t = 0; t + 1 < p.interior.size(); ++t) edges.emplace_back(base + t, base + t + 1);
    edges.emplace_back(s_offset[x] + pos[p.endpoint_a], base);
    edges.emplace_back(s_offset[y] + pos[p.endpoint_b], base + static_cast<Vertex>(p.interior.size()) - 1);
  }
  // Step 3: H[R] once, joined to every copy of each neighbour outside R.
  for (auto [a, b] : h.edges()) {
    if (in_r[a] && in_r[b]) {
      edges.emplace_back(r_copy[a], r_copy[b]);
    } else if (in_r[a] || in_r[b]) {
      const Vertex r = in_r[a] ? a : b, other = in_r[a] ? b : a;
      for (Vertex c : copies[other]) edges.emplace_back(r_copy[r], c);
    }
  }
  out.graph = Graph(static_cast<int>(out.colouring.size()), edges);
  return out;
}

ReductionClaims check_reduction_claims(const Graph& h, const Graph& g, const CpReduction& r) {
  ReductionClaims c;
  c.colouring_is_homomorphism = is_homomorphism(r.graph, h, r.colouring);
  c.degeneracy = degeneracy(r.graph);
  c.degeneracy_bound = c.degeneracy <= h.num_vertices() + 2;
  c.size_bound = static_cast<long long>(r.graph.num_vertices()) <=
                 static_cast<long long>(h.num_vertices()) * (g.num_vertices() + g.num_edges());
  return c;
}

WitnessCheck validate_witness(const Graph& h, const Graph& minor, const MinorWitness& w, bool induced) {
  const int m = minor.num_vertices();
  if (static_cast<int>(w.blocks.size()) != m)
    return {false, "expected " + std::to_string(m) + " blocks, got " + std::to_string(w.blocks.size())};
  std::vector<int> owner(h.num_vertices(), -1);
  for (int u = 0; u < m; ++u) {
    if (w.blocks[u].empty()) return {false, "block " + std::to_string(u) + " is empty"};
    for (Vertex x : w.blocks[u]) {
      if (x < 0 || x >= h.num_vertices()) return {false, "vertex " + std::to_string(x) + " out of range"};
      if (owner[x] != -1) return {false, "vertex " + std::to_string(x) + " is in two blocks"};
      owner[x] = u;
    }
    if (!connected_in(h, w.blocks[u])) return {false, "block " + std::to_string(u) + " is not connected"};
  }
  std::set<Edge> realised;
  for (auto [x, y] : h.edges()) {
    const int a = owner[x], b = owner[y];
    if (a < 0 || b < 0 || a == b) continue;
    realised.emplace(std::min(a, b), std::max(a, b));
  }
  for (const auto& e : minor.edges())
    if (!realised.count(e)) return {false, "minor edge " + edge_name(e) + " has no edge between its blocks"};
  if (induced)
    for (const auto& e : realised)
      if (!minor.has_edge(e.first, e.second)) return {false, "blocks " + edge_name(e) + " are adjacent but not in the minor"};
  return {};
}

FGadget grid_fgadget_from_witness(const Graph& h, int k, const MinorWitness& w) {
  if (k < 1) throw PreconditionError("grid size must be positive");
  const Graph big = grid(2 * k);
  if (auto check = validate_witness(h, big, w, true); !check)
    throw PreconditionError("not an induced witness of the " + std::to_string(2 * k) + "-grid: " + check.message);
  const int n = h.num_vertices();
  auto block = [&](int i, int j) -> const std::vector<Vertex>& { return w.blocks[grid_vertex(2 * k, i, j)]; };
  FGadget out;
  out.base = grid(k);
  std::vector<char> used(n, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out.S.push_back(block(2 * i, 2 * j));
      for (Vertex x : out.S.back()) used[x] = 1;
    }
  for (auto [a, b] : out.base.edges()) {
    const int ai = a / k, aj = a % k, bi = b / k, bj = b % k;
    const auto& su = out.S[a];
    const auto& sv = out.S[b];
    const auto& mid = block(ai + bi, aj + bj);  // the odd block between them
    std::vector<char> in_u(n, 0), in_v(n, 0), in_mid(n, 0);
    for (Vertex x : su) in_u[x] = 1;
    for (Vertex x : sv) in_v[x] = 1;
    for (Vertex x : mid) in_mid[x] = 1;
    auto count_in = [&](Vertex x, const std::vector<char>& in) {
      int c = 0;
      for (Vertex y : h.neighbours(x)) c += in[y];
      return c;
    };
    // Sources touch S_u in exactly one vertex, targets touch S_v in exactly
    // one; intermediates touch neither, so the shortest such path is induced
    // together with its two attachment vertices.
    std::vector<int> cu(n, 0), cv(n, 0);
    for (Vertex x : mid) {
      cu[x] = count_in(x, in_u);
      cv[x] = count_in(x, in_v);
    }
    std::vector<Vertex> parent(n, -2);
    std::vector<Vertex> queue;
    for (Vertex x : mid)
      if (cu[x] == 1 && cv[x] <= 1) {
        parent[x] = -1;
        queue.push_back(x);
      }
    Vertex end = -1;
    for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
      const Vertex x = queue[qi];
      if (cv[x] == 1) {
        end = x;
        break;
      }
      if (cv[x] > 0) continue;
      for (Vertex y : h.neighbours(x))
        if (in_mid[y] && parent[y] == -2 && cu[y] == 0 && cv[y] <= 1) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (end < 0)
      throw PreconditionError("no induced path through the connecting block for grid edge " + edge_name({a, b}) +
                              " with single attachments");
    FGadget::PathBlock p;
    for (Vertex x = end; x != -1; x = parent[x]) p.interior.push_back(x);
    std::reverse(p.interior.begin(), p.interior.end());
    for (Vertex y : h.neighbours(p.interior.front()))
      if (in_u[y]) p.endpoint_a = y;
    for (Vertex y : h.neighbours(p.interior.back()))
      if (in_v[y]) p.endpoint_b = y;
    for (Vertex x : p.interior) used[x] = 1;
    out.P.push_back(p);
  }
  for (Vertex x = 0; x < n; ++x)
    if (!used[x]) out.R.push_back(x);
  return out;
}

MinorWitness grid_witness_from_fgadget(const Graph& h, const FGadget& gadget, int k, const MinorWitness& model) {
  const Graph target = grid(k);
  if (auto check = validate_fgadget(h, gadget); !check)
    throw PreconditionError("invalid gadget: " + check.message);
  if (auto check = validate_witness(gadget.base, target, model, false); !check)
    throw PreconditionError("invalid grid model in F: " + check.message);
  const Graph& f = gadget.base;
  std::vector<int> owner(f.num_vertices(), -1);
  for (int u = 0; u < target.num_vertices(); ++u)
    for (Vertex v : model.blocks[u]) owner[v] = u;
  MinorWitness out;
  out.blocks.resize(target.num_vertices());
  for (int u = 0; u < target.num_vertices(); ++u)
    for (Vertex v : model.blocks[u]) out.blocks[u].insert(out.blocks[u].end(), gadget.S[v].begin(), gadget.S[v].end());
  const auto f_edges = f.edges();
  for (std::size_t e = 0; e < f_edges.size(); ++e) {
    const int ou = owner[f_edges[e].first], ov = owner[f_edges[e].second];
    if (ou < 0 || ov < 0) continue;
    int into = -1;
    if (ou == ov) {
      into = ou;  // (a)
    } else {
      // (b)/(c): the edge goes to the block with the smaller grid coordinate.
      const int lo = std::min(ou, ov), hi = std::max(ou, ov);
      if (target.has_edge(lo, hi)) into = lo;
    }
    if (into >= 0)
      out.blocks[into].insert(out.blocks[into].end(), gadget.P[e].interior.begin(), gadget.P[e].interior.end());
  }
  for (auto& b : out.blocks) std::sort(b.begin(), b.end());
  if (auto check = validate_witness(h, target, out, true); !check)
    throw std::logic_error("constructed grid witness is invalid: " + check.message);
  return out;
}

namespace {

// F-hat: vertices of F, then one vertex per edge of F in F.edges() order.
Graph one_subdivision(const Graph& f) { return subdivide(f, 1); }

FGadget gadget_on_vertices(const Graph& f, const std::vector<Vertex>& placement, int host_vertices) {
  FGadget g;
  g.base = f;
  std::vector<char> used(host_vertices, 0);
  for (Vertex v = 0; v < f.num_vertices(); ++v) {
    g.S.push_back({placement[v]});
    used[placement[v]] = 1;
  }
  const auto edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    FGadget::PathBlock p;
    p.interior = {placement[f.num_vertices() + i]};
    p.endpoint_a = placement[edges[i].first];
    p.endpoint_b = placement[edges[i].second];
    used[p.interior[0]] = 1;
    g.P.push_back(p);
  }
  for (Vertex x = 0; x < host_vertices; ++x)
    if (!used[x]) g.R.push_back(x);
  return g;
}

}  // namespace

QuotientGadget quotient_with_grid_gadget(const Graph& h, const Graph& f, const std::vector<Edge>& matching) {
  for (Vertex v = 0; v < f.num_vertices(); ++v)
    if (f.degree(v) == 0) throw PreconditionError("F must not have isolated vertices");
  const Graph fhat = one_subdivision(f);
  const auto fhat_edges = fhat.edges();
  if (matching.size() < fhat_edges.size())
    throw PreconditionError("matching has " + std::to_string(matching.size()) + " edges, need " +
                            std::to_string(fhat_edges.size()));
  std::vector<Vertex> ends;
  for (auto [a, b] : matching) {
    if (!h.has_edge(a, b)) throw PreconditionError("matching pair " + edge_name({a, b}) + " is not an edge");
    ends.push_back(a);
    ends.push_back(b);
  }
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i] == ends[j]) throw PreconditionError("matching edges share a vertex");
      if (i / 2 != j / 2 && h.has_edge(ends[i], ends[j]))
        throw PreconditionError("matching is not induced: edge " + edge_name({ends[i], ends[j]}));
    }
  // Matching edge i realises F-hat edge i; its endpoints join the blocks of
  // the F-hat endpoints.
  const int n = h.num_vertices();
  std::vector<int> fhat_block(fhat.num_vertices(), -1);
  QuotientGadget out;
  out.block_of.assign(n, -1);
  int blocks = 0;
  for (std::size_t i = 0; i < fhat_edges.size(); ++i) {
    const auto [x, y] = fhat_edges[i];
    const auto [a, b] = matching[i];
    for (auto [fv, hv] : {std::pair{x, a}, std::pair{y, b}}) {
      if (fhat_block[fv] < 0) fhat_block[fv] = blocks++;
      out.block_of[hv] = fhat_block[fv];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (out.block_of[v] < 0) out.block_of[v] = blocks++;
  if (quotient_has_self_loop(h, out.block_of)) throw std::logic_error("grid quotient has a self-loop");
  out.quotient = quotient(h, out.block_of);
  out.gadget = gadget_on_vertices(f, fhat_block, out.quotient.num_vertices());
  if (auto check = validate_fgadget(out.quotient, out.gadget); !check)
    throw std::logic_error("quotient gadget is invalid: " + check.message);
  return out;
}

SupergraphGadget supergraph_with_grid_gadget(const Graph& h, const Graph& f, const std::vector<Vertex>& independent) {
  const Graph fhat = one_subdivision(f);
  if (static_cast<int>(independent.size()) < fhat.num_vertices())
    throw PreconditionError("independent set has " + std::to_string(independent.size()) + " vertices, need " +
                            std::to_string(fhat.num_vertices()));
  if (!is_independent_set(h, independent)) throw PreconditionError("vertex set is not independent");
  std::set<Vertex> distinct(independent.begin(), independent.end());
  if (distinct.size() != independent.size()) throw PreconditionError("independent set has repeated vertices");
  SupergraphGadget out;
  for (auto [x, y] : fhat.edges())
    out.added.emplace_back(std::min(independent[x], independent[y]), std::max(independent[x], independent[y]));
  out.supergraph = add_edges(h, out.added);
  std::vector<Vertex> placement(independent.begin(), independent.begin() + fhat.num_vertices());
  out.gadget = gadget_on_vertices(f, placement, h.num_vertices());
  if (auto check = validate_fgadget(out.supergraph, out.gadget); !check)
    throw std::logic_error("supergraph gadget is invalid: " + check.message);
  return out;
}

std::string check_tree_decomposition(const Graph& f, const BagTree& t) {
  try {
    t.check_tree();
  } catch (const GraphError& e) {
    return e.what();
  }
  const int n = f.num_vertices();
  std::vector<std::vector<int>> occurs(n);
  for (int x = 0; x < t.size(); ++x)
    for (Vertex v : t.bags[x]) {
      if (v < 0 || v >= n) return "bag " + std::to_string(x) + " has vertex " + std::to_string(v) + " out of range";
      occurs[v].push_back(x);
    }
  for (Vertex v = 0; v < n; ++v)
    if (occurs[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
  for (auto [a, b] : f.edges()) {
    bool covered = false;
    for (int x : occurs[a])
      if (std::find(t.bags[x].begin(), t.bags[x].end(), b) != t.bags[x].end()) covered = true;
    if (!covered) return "edge " + edge_name({a, b}) + " is in no bag";
  }
  // Occurrence sets are subtrees iff exactly one of them has its parent outside.
  for (Vertex v = 0; v < n; ++v) {
    int tops = 0;
    for (int x : occurs[v]) {
      const int p = t.parent[x];
      if (p < 0 || std::find(t.bags[p].begin(), t.bags[p].end(), v) == t.bags[p].end()) ++tops;
    }
    if (tops != 1) return "bags containing vertex " + std::to_string(v) + " are not connected";
  }
  return {};
}

BagTree trivial_tree_decomposition(const Graph& f) {
  BagTree t;
  t.parent = {-1};
  t.bags.emplace_back();
  for (Vertex v = 0; v < f.num_vertices(); ++v) t.bags[0].push_back(v);
  return t;
}

namespace {

struct GadgetSources {
  VertexMask r = 0;
  std::vector<VertexMask> s, p;
};

GadgetSources local_sources_of(const OrientedGraph& h, const FGadget& gadget) {
  GadgetSources ls;
  ls.r = h.local_sources(vector_to_mask(gadget.R));
  for (const auto& s : gadget.S) ls.s.push_back(h.local_sources(vector_to_mask(s)));
  for (const auto& p : gadget.P) ls.p.push_back(h.local_sources(vector_to_mask(p.interior)));
  return ls;
}

void require_inputs(const OrientedGraph& h, const FGadget& gadget, const BagTree& t_f) {
  if (h.num_vertices() > kMaskBits) throw SizeBoundError("oriented pattern exceeds 64 vertices");
  if (auto check = validate_fgadget(h.underlying(), gadget); !check)
    throw PreconditionError("invalid gadget (condition " + std::to_string(check.condition) + "): " + check.message);
  if (auto msg = check_tree_decomposition(gadget.base, t_f); !msg.empty())
    throw PreconditionError("invalid tree decomposition of F: " + msg);
}

}  // namespace

DagTreeDecomposition dtd_from_fgadget(const OrientedGraph& h, const FGadget& gadget, const BagTree& t_f) {
  require_inputs(h, gadget, t_f);
  const auto ls = local_sources_of(h, gadget);
  const auto f_edges = gadget.base.edges();
  DagTreeDecomposition out;
  out.parent = t_f.parent;
  for (const auto& bag : t_f.bags) {
    VertexMask b = ls.r;
    std::vector<char> in(gadget.base.num_vertices(), 0);
    for (Vertex v : bag) {
      in[v] = 1;
      b |= ls.s[v];
    }
    for (std::size_t e = 0; e < f_edges.size(); ++e)
      if (in[f_edges[e].first] && in[f_edges[e].second]) b |= ls.p[e];
    out.bags.push_back(mask_to_vector(b));
  }
  return out;
}

int fgadget_width_bound(const OrientedGraph& h, const FGadget& gadget, const BagTree& t_f) {
  require_inputs(h, gadget, t_f);
  const auto ls = local_sources_of(h, gadget);
  int s = 0;
  for (auto m : ls.s) s = std::max(s, popcount(m));
  for (auto m : ls.p) s = std::max(s, popcount(m));
  const int tw = t_f.width() - 1;
  return popcount(ls.r) + s * (tw + 1) * (tw + 1);
}

namespace {

std::vector<Vertex> read_ids(std::istringstream& ls, const std::string& line) {
  std::vector<Vertex> ids;
  long long x;
  while (ls >> x) ids.push_back(static_cast<Vertex>(x));
  if (!ls.eof()) throw ParseError("bad vertex list: " + line);
  return ids;
}

}  // namespace

FGadget read_fgadget(std::istream& in) {
  FGadget g;
  std::string line;
  bool have_f = false;
  std::map<int, std::vector<Vertex>> s_blocks;
  std::map<Edge, FGadget::PathBlock> p_blocks;
  bool have_r = false;
  while (next_content_line(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("gadget line without ':': " + line);
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    std::string tag;
    head >> tag;
    if (tag == "F") {
      long long n, m;
      if (!(body >> n >> m) || n < 0 || m < 0) throw ParseError("F section needs 'F: n m'");
      std::vector<Edge> edges;
      for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) throw ParseError("F section ends early");
        std::istringstream es(line);
        long long a, b;
        if (!(es >> a >> b)) throw ParseError("bad F edge: " + line);
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
      g.base = Graph(static_cast<int>(n), edges);
      have_f = true;
    } else if (tag == "S") {
      int v;
      if (!(head >> v)) throw ParseError("S line needs a vertex of F: " + line);
      if (s_blocks.count(v)) throw ParseError("repeated S block " + std::to_string(v));
      s_blocks[v] = read_ids(body, line);
    } else if (tag == "P") {
      int a, b;
      if (!(head >> a >> b)) throw ParseError("P line needs an edge of F: " + line);
      auto ids = read_ids(body, line);
      if (ids.size() < 2) throw ParseError("P line needs interior ids and two endpoints: " + line);
      FGadget::PathBlock p;
      p.endpoint_b = ids.back();
      ids.pop_back();
      p.endpoint_a = ids.back();
      ids.pop_back();
      p.interior = ids;
      if (a > b) {
        std::swap(a, b);
        std::swap(p.endpoint_a, p.endpoint_b);
        std::reverse(p.interior.begin(), p.interior.end());
      }
      if (p_blocks.count({a, b})) throw ParseError("repeated P block " + edge_name({a, b}));
      p_blocks[{a, b}] = p;
    } else if (tag == "R") {
      if (have_r) throw ParseError("repeated R section");
      g.R = read_ids(body, line);
      have_r = true;
    } else {
      throw ParseError("unknown gadget section: " + tag);
    }
  }
  if (!have_f) throw ParseError("gadget has no F section");
  g.S.assign(g.base.num_vertices(), {});
  for (auto& [v, ids] : s_blocks) {
    if (v < 0 || v >= g.base.num_vertices()) throw ParseError("S block for non-vertex " + std::to_string(v));
    g.S[v] = ids;
  }
  for (const auto& e : g.base.edges()) {
    auto it = p_blocks.find(e);
    if (it == p_blocks.end()) throw ParseError("missing P block for edge " + edge_name(e));
    g.P.push_back(it->second);
    p_blocks.erase(it);
  }
  if (!p_blocks.empty()) throw ParseError("P block for non-edge " + edge_name(p_blocks.begin()->first));
  return g;
}

void write_fgadget(std::ostream& out, const FGadget& g) {
  out << "F: " << g.base.num_vertices() << ' ' << g.base.num_edges() << '\n';
  for (auto [a, b] : g.base.edges()) out << a << ' ' << b << '\n';
  for (std::size_t v = 0; v < g.S.size(); ++v) {
    out << "S " << v << ':';
    for (Vertex x : g.S[v]) out << ' ' << x;
    out << '\n';
  }
  const auto edges = g.base.edges();
  for (std::size_t i = 0; i < g.P.size() && i < edges.size(); ++i) {
    out << "P " << edges[i].first << ' ' << edges[i].second << ':';
    for (Vertex x : g.P[i].interior) out << ' ' << x;
    out << ' ' << g.P[i].endpoint_a << ' ' << g.P[i].endpoint_b << '\n';
  }
  out << "R:";
  for (Vertex x : g.R) out << ' ' << x;
  out << '\n';
}

MinorWitness read_witness(std::istream& in) {
  std::map<int, std::vector<Vertex>> blocks;
  std::string line;
  while (next_content_line(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("witness line without ':': " + line);
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    int u;
    if (!(head >> u)) throw ParseError("witness line needs a minor vertex: " + line);
    if (blocks.count(u)) throw ParseError("repeated witness block " + std::to_string(u));
    blocks[u] = read_ids(body, line);
  }
  MinorWitness w;
  for (auto& [u, ids] : blocks) {
    if (u != static_cast<int>(w.blocks.size())) throw ParseError("witness blocks must be numbered 0..m-1");
    w.blocks.push_back(ids);
  }
  return w;
}

void write_witness(std::ostream& out, const MinorWitness& w) {
  for (std::size_t u = 0; u < w.blocks.size(); ++u) {
    out << u << ':';
    for (Vertex x : w.blocks[u]) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace degencount
