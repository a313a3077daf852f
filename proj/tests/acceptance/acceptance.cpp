#include "degencount/basis.hpp"
#include "degencount/canon.hpp"
#include "degencount/colourful.hpp"
#include "degencount/dtd.hpp"
#include "degencount/gadget.hpp"
#include "degencount/generators.hpp"
#include "degencount/hom.hpp"
#include "degencount/params.hpp"
#include "degencount/parse_tree.hpp"
#include "degencount/properties.hpp"
#include "degencount/rng.hpp"
#include "gadget_fixtures.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace degencount;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string summary() const { return count_ == 0 ? "" : std::to_string(count_) + " failures, first: " + first_; }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

std::vector<Graph> graphs_up_to(int n, int from = 0) {
  std::vector<Graph> out;
  for (int i = from; i <= n; ++i)
    for (auto& g : all_graphs(i)) out.push_back(std::move(g));
  return out;
}

std::string name(const Graph& g) { return g.num_vertices() == 0 ? "empty" : to_graph6(g); }

// Restricted growth strings: colourings of n vertices with exactly k colours,
// one per orbit of colour permutations.
void for_each_rgs(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(n, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (n - v < k - used) return;
    if (v == n) {
      if (used == k) f(c);
      return;
    }
    for (int x = 0; x <= std::min(used, k - 1); ++x) {
      c[v] = x;
      rec(v + 1, std::max(used, x + 1));
    }
  };
  if (n == 0) {
    if (k == 0) f(c);
    return;
  }
  rec(0, 0);
}

std::vector<int> random_surjective_colouring(int n, int k, CounterRng& rng) {
  std::vector<int> c(n);
  for (int v = 0; v < n; ++v) c[v] = v < k ? v : static_cast<int>(rng.below(k));
  for (int i = n - 1; i > 0; --i) std::swap(c[i], c[rng.below(i + 1)]);
  return c;
}

bool colourful_set(const std::vector<Vertex>& s, const std::vector<int>& colouring, int k) {
  std::vector<char> seen(k, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= static_cast<Vertex>(colouring.size()) || seen[colouring[v]]) return false;
    seen[colouring[v]] = 1;
  }
  return static_cast<int>(s.size()) == k;
}

bool valid_copy_witness(const Graph& h, const Graph& g, const std::vector<int>& colouring,
                        const std::vector<Vertex>& w, bool induced) {
  const int k = h.num_vertices();
  if (!colourful_set(w, colouring, k)) return false;
  return induced ? oracle::strong(h, g, w) : oracle::preserves_edges(h, g, w);
}

// 1. Exact counting against brute force.
Outcome oracle_equivalence() {
  const auto patterns = graphs_up_to(4, 1);
  const auto hosts = graphs_up_to(6);
  Failures f;
  std::size_t checks = 0;
  for (const Graph& h : patterns) {
    const BigInt aut = automorphism_count(h);
    for (const Graph& g : hosts) {
      const auto hom = oracle::hom(h, g), emb = oracle::emb(h, g), str = oracle::str_emb(h, g);
      const std::string pair = name(h) + " in " + name(g);
      if (count_homs_dtd(h, g) != BigInt(hom)) f.add("hom " + pair);
      if (count_subs_exact(h, g) * aut != BigInt(emb)) f.add("sub " + pair);
      if (count_indsubs_exact(h, g) * aut != BigInt(str)) f.add("indsub " + pair);
      checks += 3;
    }
  }
  std::ostringstream d;
  d << patterns.size() << " patterns x " << hosts.size() << " hosts, " << checks << " counts";
  if (f.count()) d << ", " << f.summary();
  return {f.count() == 0, d.str()};
}

// 2. Linear growth of clique counting in degenerate hosts.
Outcome clique_scaling() {
  const Graph k4 = clique(4);
  const std::vector<int> sizes{10000, 20000, 40000};
  std::vector<double> seconds;
  for (int n : sizes) {
    const Graph g = random_degenerate(n, 3, 4000 + n);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      const BigInt c = count_subs_exact(k4, g);
      best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
      if (c < 0) return {false, "negative count"};
    }
    seconds.push_back(best);
  }
  bool ok = true;
  std::ostringstream d;
  d.precision(3);
  for (std::size_t i = 0; i < sizes.size(); ++i) d << (i ? ", " : "") << "n=" << sizes[i] << " " << seconds[i] << "s";
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    const double ratio = seconds[i] / seconds[i - 1];
    d << (i == 1 ? "; ratios " : " ") << ratio;
    if (ratio > 2.0 * 1.5) ok = false;
  }
  d << " (limit 3)";
  return {ok, d.str()};
}

// 3. Kernel size, kernel decompositions and the quotient dag treewidth bound.
Outcome kernel_bounds() {
  Failures f;
  std::size_t graphs = 0, orientations = 0;
  TauCache cache;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& h : all_graphs(n)) {
      ++graphs;
      const int bound = std::max(1, induced_matching_number(h));
      for_each_acyclic_orientation(h, [&](const OrientedGraph& o) {
        ++orientations;
        const VertexMask kernel = find_kernel(o);
        if (!is_kernel(o, kernel)) f.add("not a kernel in " + name(h));
        if (popcount(kernel) > bound) f.add("kernel size in " + name(h));
        if (!validate_dtd(o, dtd_from_kernel(o, kernel)).ok) f.add("kernel dtd invalid in " + name(h));
      });
      if (tau2(h, &cache) > bound) f.add("tau2 of " + name(h));
    }
  }
  std::ostringstream d;
  d << graphs << " patterns, " << orientations << " orientations";
  if (f.count()) d << ", " << f.summary();
  return {f.count() == 0, d.str()};
}

// 4. Colour-prescribed counts survive the gadget reduction.
Outcome reduction_fidelity() {
  CounterRng rng(3200);
  Failures f;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = fixtures::random_reduction_instance(rng);
    const auto r = reduce_cphom(inst.h, inst.gadget, inst.g, inst.colouring);
    const std::string id = "instance " + std::to_string(trial);
    if (count_cp_homs_brute(inst.gadget.base, inst.g, inst.colouring) != count_cp_homs_brute(inst.h, r.graph, r.colouring))
      f.add(id + " count");
    const auto claims = check_reduction_claims(inst.h, inst.g, r);
    if (!claims.colouring_is_homomorphism) f.add(id + " colouring");
    if (degeneracy(r.graph) > inst.h.num_vertices() + 2) f.add(id + " degeneracy");
    const long long limit = static_cast<long long>(inst.h.num_vertices()) * (inst.g.num_vertices() + inst.g.num_edges());
    if (r.graph.num_vertices() > limit) f.add(id + " size");
  }
  return {f.count() == 0, "100 instances, C = 1" + (f.count() ? ", " + f.summary() : std::string())};
}

// 5. Multicoloured detection against brute force.
struct DetectTally {
  Failures f;
  std::size_t instances = 0;
};

void check_detectors(const Graph& g, const std::vector<int>& c, int k, const std::vector<Graph>& patterns,
                     DetectTally& t, const std::string& id) {
  ++t.instances;
  const auto is = detect_multicol_is(g, c, k);
  if (is.found != oracle::has_multicol_is(g, c, k)) t.f.add("IS " + id);
  if (is.found && (!colourful_set(is.witness, c, k) || !is_independent_set(g, is.witness))) t.f.add("IS witness " + id);
  for (const Graph& h : patterns) {
    for (bool induced : {false, true}) {
      const auto r = induced ? detect_multicol_indsub(h, g, c) : detect_multicol_sub(h, g, c);
      const std::string what = (induced ? "indsub " : "sub ") + name(h) + " " + id;
      if (r.found != oracle::has_multicol_copy(h, g, c, induced)) t.f.add(what);
      if (r.found && !valid_copy_witness(h, g, c, r.witness, induced)) t.f.add("witness " + what);
    }
  }
}

Outcome colourful_decision() {
  std::vector<std::vector<Graph>> patterns(5);
  for (int k = 1; k <= 4; ++k) patterns[k] = all_graphs(k);
  DetectTally random_tally;
  CounterRng rng(6300);
  std::size_t greedy = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Graph g = rng.below(2) ? random_gnp(n, 0.1 + 0.5 * rng.unit(), rng())
                                 : random_degenerate(n, 1 + static_cast<int>(rng.below(3)), rng());
    const int k = 1 + static_cast<int>(rng.below(std::min(4, n)));
    const auto c = random_surjective_colouring(n, k, rng);
    const Graph& h = patterns[k][rng.below(patterns[k].size())];
    check_detectors(g, c, k, {h}, random_tally, "random " + std::to_string(trial));
    greedy += detect_multicol_is(g, c, k).greedy;
  }
  DetectTally exhaustive_is, exhaustive_all;
  for (int n = 0; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int k = 0; k <= std::min(3, n); ++k) {
        for_each_rgs(n, k, [&](const std::vector<int>& c) {
          const std::string id = name(g) + " k=" + std::to_string(k);
          if (n <= 7) {
            check_detectors(g, c, k, k == 0 ? std::vector<Graph>{} : patterns[k], exhaustive_all, id);
          } else {
            ++exhaustive_is.instances;
            const auto is = detect_multicol_is(g, c, k);
            if (is.found != oracle::has_multicol_is(g, c, k)) exhaustive_is.f.add("IS " + id);
            if (is.found && (!colourful_set(is.witness, c, k) || !is_independent_set(g, is.witness)))
              exhaustive_is.f.add("IS witness " + id);
          }
        });
      }
    }
  }
  const std::size_t failures = random_tally.f.count() + exhaustive_is.f.count() + exhaustive_all.f.count();
  std::ostringstream d;
  d << "1000 random instances x 3 detectors (" << greedy << " greedy IS), exhaustive: " << exhaustive_all.instances
    << " coloured hosts n<=7 x all detectors, " << exhaustive_is.instances << " coloured hosts n=8 for IS";
  for (const auto* t : {&random_tally, &exhaustive_all, &exhaustive_is})
    if (t->f.count()) d << ", " << t->f.summary();
  return {failures == 0, d.str()};
}

// 6. Seeded approximate counting within the epsilon band.
struct ApproxFixture {
  std::string label;
  Graph h, g;
  CopyKind kind;
};

Outcome fptras_contract() {
  const Rational eps(1, 5);
  const std::vector<ApproxFixture> fixtures{
      {"sub K3 / degenerate(60,3)", clique(3), random_degenerate(60, 3, 61), CopyKind::Sub},
      {"sub P3 / degenerate(40,2)", path(3), random_degenerate(40, 2, 62), CopyKind::Sub},
      {"indsub P3 / degenerate(50,3)", path(3), random_degenerate(50, 3, 63), CopyKind::IndSub},
      {"sub C4 / degenerate(40,2)", cycle(4), random_degenerate(40, 2, 64), CopyKind::Sub},
      {"indsub C4 / degenerate(50,3)", cycle(4), random_degenerate(50, 3, 65), CopyKind::IndSub},
      {"sub K4 / degenerate(60,3)", clique(4), random_degenerate(60, 3, 66), CopyKind::Sub},
      {"sub K1,3 / degenerate(30,2)", star(3), random_degenerate(30, 2, 67), CopyKind::Sub},
      {"indsub P4 / degenerate(40,2)", path(4), random_degenerate(40, 2, 68), CopyKind::IndSub},
      {"sub P5 / degenerate(20,2)", path(5), random_degenerate(20, 2, 69), CopyKind::Sub},
      {"indsub C5 / degenerate(60,3)", cycle(5), random_degenerate(60, 3, 70), CopyKind::IndSub},
  };
  const std::vector<ApproxFixture> zeros{
      {"sub K4 / degenerate(60,2)", clique(4), random_degenerate(60, 2, 71), CopyKind::Sub},
      {"indsub K3 / biclique(6,6)", clique(3), biclique(6, 6), CopyKind::IndSub},
  };
  ApproxOptions options;
  options.engine = ColourfulEngine::Table;
  // Short runs for the engine cross-check.
  ApproxOptions short_table = options;
  short_table.samples_per_group = 20;
  ApproxOptions short_hom = short_table;
  short_hom.engine = ColourfulEngine::Homomorphism;
  auto run = [&](const ApproxFixture& fx, std::uint64_t seed, const ApproxOptions& o) {
    return fx.kind == CopyKind::Sub ? approx_count_subs(fx.h, fx.g, eps, seed, o)
                                    : approx_count_indsubs(fx.h, fx.g, eps, seed, o);
  };
  bool ok = true;
  std::ostringstream d;
  int worst = 100;
  for (const auto& fx : fixtures) {
    if (fx.g.num_vertices() > 60 || degeneracy(fx.g) > 3 || fx.h.num_vertices() > 5) return {false, fx.label + " out of range"};
    const BigInt exact = fx.kind == CopyKind::Sub ? count_subs_exact(fx.h, fx.g) : count_indsubs_exact(fx.h, fx.g);
    const Rational band = eps * Rational(exact);
    int inside = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto r = run(fx, seed, options);
      const Rational err = r.estimate - Rational(exact);
      if ((err < 0 ? -err : err) <= band) ++inside;
      if (seed <= 2 && run(fx, seed, short_hom).estimate != run(fx, seed, short_table).estimate) {
        ok = false;
        d << fx.label << " engines disagree; ";
      }
    }
    if (exact == 0 || inside < 90) ok = false;
    worst = std::min(worst, inside);
    d << fx.label << " exact " << to_string(exact) << " in band " << inside << "/100; ";
  }
  for (const auto& fx : zeros) {
    const BigInt exact = fx.kind == CopyKind::Sub ? count_subs_exact(fx.h, fx.g) : count_indsubs_exact(fx.h, fx.g);
    if (exact != 0) return {false, fx.label + " is not a zero instance"};
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      if (run(fx, seed, options).estimate != 0) {
        ok = false;
        d << fx.label << " nonzero estimate; ";
        break;
      }
  }
  d << "zero instances exact; worst " << worst << "/100";
  return {ok, d.str()};
}

// 7. Monte Carlo counting of independent sets.
Outcome property_counting() {
  const Property phi = is_edgeless;
  const Rational eps(1, 5);
  const int k = 4;
  bool ok = true;
  std::ostringstream d;
  if (property_sample_count(k, 2, eps) != 1555200) {
    ok = false;
    d << "sample count formula mismatch; ";
  }
  for (std::uint64_t fixture = 0; fixture < 2; ++fixture) {
    const Graph g = random_degenerate(30, 2, 7100 + fixture);
    if (degeneracy(g) != 2) return {false, "fixture degeneracy is not 2"};
    const BigInt exact = count_property_brute(phi, k, g);
    const Rational band = eps * Rational(exact);
    int inside = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto r = approx_count_property(phi, k, g, eps, seed, 1);
      if (r.trials != property_sample_count(k, 2, eps)) ok = false;
      const Rational err = r.estimate - Rational(exact);
      if ((err < 0 ? -err : err) <= band) ++inside;
    }
    if (inside < 90) ok = false;
    d << "fixture " << fixture << " exact " << to_string(exact) << " in band " << inside << "/100; ";
  }
  const Graph big = random_degenerate(30, 2, 7200);
  const auto small_k = approx_count_property(phi, k, big, eps, 1, k + 1);
  const Graph small = random_degenerate(10, 2, 7201);
  const auto small_n = approx_count_property(phi, k, small, eps, 1, 1);
  const bool exact_branches = small_k.method == "exact" && small_k.estimate == Rational(count_property_brute(phi, k, big)) &&
                              small_n.method == "exact" && small_n.estimate == Rational(count_property_brute(phi, k, small));
  if (!exact_branches) ok = false;
  d << "k<c and n<k(d+1) branches " << (exact_branches ? "exact" : "NOT exact");
  return {ok, d.str()};
}

// 8. Clique parse decompositions on random skeletons.
Outcome clique_parse() {
  CounterRng rng(5700);
  Failures f;
  int tight = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = instances::random_skeleton_instance(rng, 8, 2 + static_cast<int>(rng.below(3)));
    const auto dtd = dtd_from_clique_parse(inst.dag, inst.tree);
    const std::string id = "instance " + std::to_string(trial);
    if (!validate_dtd(inst.dag, dtd).ok || !oracle::dtd_valid(inst.dag, dtd)) f.add(id + " invalid");
    if (dtd.width() > inst.tree.num_labels()) f.add(id + " width above label count");
    const int optimum = dag_treewidth(inst.dag, 16).width;
    if (dtd.width() < optimum) f.add(id + " width below optimum");
    tight += dtd.width() == optimum;
  }
  std::ostringstream d;
  d << "200 instances, width equals optimum on " << tight;
  if (f.count()) d << ", " << f.summary();
  return {f.count() == 0, d.str()};
}

// 9. Grid witness and gadget translations.
Outcome grid_translations() {
  Failures f;
  int checks = 0;
  for (int k : {2, 3}) {
    for (const auto& fx : {fixtures::grid_fixture(k), fixtures::subdivided_grid_fixture(k)}) {
      const std::string id = "k=" + std::to_string(k) + " host " + std::to_string(fx.h.num_vertices());
      if (!validate_witness(fx.h, grid(2 * k), fx.witness, true).ok) f.add(id + " input witness");
      const auto gadget = grid_fgadget_from_witness(fx.h, k, fx.witness);
      if (!validate_fgadget(grid(k), fx.h, gadget).ok) f.add(id + " gadget");
      const auto back = grid_witness_from_fgadget(fx.h, gadget, k, fixtures::singleton_witness(k * k));
      if (!validate_witness(fx.h, grid(k), back, true).ok) f.add(id + " witness");
      checks += 2;
    }
    for (int times : {1, 2}) {
      const auto sg = fgadget_from_subdivision(grid(k), times);
      if (!validate_fgadget(grid(k), sg.h, sg.gadget).ok) f.add("subdivision gadget");
      const auto w = grid_witness_from_fgadget(sg.h, sg.gadget, k, fixtures::singleton_witness(k * k));
      if (!validate_witness(sg.h, grid(k), w, true).ok) f.add("subdivision witness k=" + std::to_string(k));
      ++checks;
    }
  }
  return {f.count() == 0, std::to_string(checks) + " constructions validated" + (f.count() ? ", " + f.summary() : std::string())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},   {"clique scaling", clique_scaling},
      {"kernel and dtd bounds", kernel_bounds},      {"reduction fidelity", reduction_fidelity},
      {"colourful decision", colourful_decision},   {"fptras contract", fptras_contract},
      {"property counting", property_counting},     {"clique parse", clique_parse},
      {"grid translations", grid_translations},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %d %s: %s (%.1fs) %s\n", id, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
