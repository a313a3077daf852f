#include "degencount/basis.hpp"
#include "degencount/canon.hpp"
#include "degencount/colourful.hpp"
#include "degencount/generators.hpp"
#include "degencount/hom.hpp"
#include "degencount/properties.hpp"
#include "degencount/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace degencount;

namespace {

std::vector<int> random_surjective_colouring(int n, int k, CounterRng& rng) {
  std::vector<int> c(n);
  for (int v = 0; v < n; ++v) c[v] = v < k ? v : static_cast<int>(rng.below(k));
  for (int i = n - 1; i > 0; --i) std::swap(c[i], c[rng.below(i + 1)]);
  return c;
}

Graph random_host(CounterRng& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng.below(max_n));
  return rng.below(2) ? random_gnp(n, 0.15 + 0.5 * rng.unit(), rng()) : random_degenerate(n, 1 + rng.below(3), rng());
}

bool is_colourful(const std::vector<Vertex>& s, const std::vector<int>& colouring, int k) {
  std::vector<char> seen(k, 0);
  for (Vertex v : s) {
    if (seen[colouring[v]]) return false;
    seen[colouring[v]] = 1;
  }
  return static_cast<int>(s.size()) == k;
}

}  // namespace

TEST_CASE("multicoloured independent set examples") {
  CHECK(detect_multicol_is(independent_set(4), {0, 1, 2, 3}, 4).found);
  CHECK_FALSE(detect_multicol_is(clique(2), {0, 1}, 2).found);
  CHECK(detect_multicol_is(Graph(0), {}, 0).found);
  CHECK_THROWS_AS(detect_multicol_is(clique(3), {0, 0, 1}, 3), PreconditionError);
  CHECK_THROWS_AS(detect_multicol_is(clique(3), {0, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(detect_multicol_is(clique(3), {0, 1, 5}, 3), PreconditionError);
}

TEST_CASE("multicoloured independent set agrees with brute force") {
  CounterRng rng(6201);
  int greedy = 0, yes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = random_host(rng, 12);
    const int k = 1 + static_cast<int>(rng.below(std::min(4, g.num_vertices())));
    const auto c = random_surjective_colouring(g.num_vertices(), k, rng);
    const auto r = detect_multicol_is(g, c, k);
    REQUIRE(r.found == oracle::has_multicol_is(g, c, k));
    if (!r.found) continue;
    ++yes;
    greedy += r.greedy;
    CHECK(is_colourful(r.witness, c, k));
    CHECK(is_independent_set(g, r.witness));
  }
  CHECK(yes > 100);
  CHECK(greedy > 20);
}

TEST_CASE("greedy branch on large classes") {
  // Every class exceeds d(k-1) on a long path.
  const Graph g = path(40);
  std::vector<int> c(40);
  for (int v = 0; v < 40; ++v) c[v] = v % 4;
  const auto r = detect_multicol_is(g, c, 4);
  REQUIRE(r.found);
  CHECK(r.greedy);
  CHECK(is_colourful(r.witness, c, 4));
  CHECK(is_independent_set(g, r.witness));
}

TEST_CASE("multicoloured subgraph examples") {
  CHECK(detect_multicol_sub(clique(3), clique(3), {0, 1, 2}).found);
  CHECK_FALSE(detect_multicol_sub(clique(3), clique(3), {0, 1, 1}).found);
  CHECK_FALSE(detect_multicol_sub(clique(3), cycle(4), {0, 1, 2, 0}).found);
  const auto r = detect_multicol_sub(path(3), clique(3), {2, 0, 1});
  REQUIRE(r.found);
  CHECK(oracle::preserves_edges(path(3), clique(3), r.witness));
}

TEST_CASE("multicoloured induced subgraph examples") {
  CHECK(detect_multicol_indsub(path(3), path(3), {0, 1, 2}).found);
  CHECK_FALSE(detect_multicol_indsub(path(3), clique(3), {0, 1, 2}).found);
  CHECK(detect_multicol_indsub(independent_set(3), independent_set(3), {2, 1, 0}).found);
  CHECK_FALSE(detect_multicol_indsub(independent_set(2), clique(2), {0, 1}).found);
  CHECK(detect_multicol_indsub(biclique(2, 2), cycle(4), {0, 1, 2, 3}).found);
  CHECK_FALSE(detect_multicol_indsub(biclique(2, 2), clique(4), {0, 1, 2, 3}).found);
}

TEST_CASE("pattern detectors agree with brute force") {
  CounterRng rng(6301);
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : all_graphs(n)) patterns.push_back(h);
  int yes_sub = 0, yes_ind = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph& h = patterns[rng.below(patterns.size())];
    const int k = h.num_vertices();
    Graph g = random_host(rng, 10);
    if (g.num_vertices() < k) g = disjoint_union(g, independent_set(k));
    const auto c = random_surjective_colouring(g.num_vertices(), k, rng);
    const auto s = detect_multicol_sub(h, g, c);
    REQUIRE_MESSAGE(s.found == oracle::has_multicol_copy(h, g, c, false), to_graph6(h), " in ", to_graph6(g));
    if (s.found) {
      ++yes_sub;
      CHECK(is_colourful(s.witness, c, k));
      CHECK(oracle::preserves_edges(h, g, s.witness));
    }
    const auto i = detect_multicol_indsub(h, g, c);
    REQUIRE_MESSAGE(i.found == oracle::has_multicol_copy(h, g, c, true), to_graph6(h), " in ", to_graph6(g));
    if (i.found) {
      ++yes_ind;
      CHECK(is_colourful(i.witness, c, k));
      CHECK(oracle::strong(h, g, i.witness));
    }
  }
  CHECK(yes_sub > 50);
  CHECK(yes_ind > 50);
}

TEST_CASE("colourful counters match the oracle under both engines") {
  CounterRng rng(6401);
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : all_graphs(n)) patterns.push_back(h);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph& h = patterns[trial % patterns.size()];
    const int k = h.num_vertices();
    const Graph g = random_degenerate(9, 1 + trial % 3, rng());
    for (CopyKind kind : {CopyKind::Sub, CopyKind::IndSub}) {
      const ColourfulCounter hom(h, g, kind, ColourfulEngine::Homomorphism);
      const ColourfulCounter table(h, g, kind, ColourfulEngine::Table);
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<int> c(g.num_vertices());
        for (auto& x : c) x = static_cast<int>(rng.below(k));
        const BigInt want(oracle::colourful_copies(h, g, c, kind == CopyKind::IndSub));
        CHECK(hom.count(c) == want);
        CHECK(table.count(c) == want);
      }
    }
  }
}

TEST_CASE("scaled colourful count is unbiased over all colourings") {
  const std::vector<std::pair<Graph, Graph>> cases = {
      {clique(2), cycle(5)},
      {path(3), random_gnp(6, 0.5, 3)},
      {clique(3), clique(5)},
      {independent_set(2), path(4)},
      {Graph(3, {{0, 1}}), random_degenerate(6, 2, 9)},
      {path(3), wreath(3, 2)},
  };
  for (const auto& [h, g] : cases) {
    const int k = h.num_vertices(), n = g.num_vertices();
    for (CopyKind kind : {CopyKind::Sub, CopyKind::IndSub}) {
      const ColourfulCounter counter(h, g, kind, ColourfulEngine::Table);
      std::vector<int> c(n, 0);
      BigInt total = 0, colourings = 0;
      while (true) {
        total += counter.count(c);
        ++colourings;
        int i = 0;
        while (i < n && ++c[i] == k) c[i++] = 0;
        if (i == n) break;
      }
      const Rational mean = Rational(total) * colourful_scale(k) / Rational(colourings);
      const BigInt want = kind == CopyKind::Sub ? count_subs_exact(h, g) : count_indsubs_exact(h, g);
      CHECK(mean == Rational(want));
    }
  }
}

TEST_CASE("sample count formulas") {
  CHECK(colourful_scale(3) == Rational(27, 6));
  CHECK(colourful_samples_per_group(2, Rational(1, 5)) == 150);
  CHECK(colourful_samples_per_group(3, Rational(1, 2)) == 54);
  CHECK(property_sample_count(4, 2, Rational(1, 5)) == 1555200);
  CHECK_THROWS_AS(colourful_samples_per_group(2, 0), PreconditionError);
  CHECK_THROWS_AS(property_sample_count(2, 1, 1), PreconditionError);
}

TEST_CASE("approximate subgraph counts") {
  const Rational eps(1, 5);
  SUBCASE("zero count is exact") {
    const auto r = approx_count_subs(clique(3), biclique(4, 5), eps, 3);
    CHECK(r.estimate == 0);
    CHECK(r.method == "sampling");
    CHECK(r.trials == 9 * colourful_samples_per_group(3, eps));
  }
  SUBCASE("edges") {
    const Graph g = random_degenerate(30, 2, 4);
    const auto r = approx_count_subs(clique(2), g, eps, 11);
    const Rational m(g.num_edges());
    CHECK(r.estimate >= (1 - eps) * m);
    CHECK(r.estimate <= (1 + eps) * m);
  }
  SUBCASE("seeded determinism across threads and engines") {
    const Graph g = random_degenerate(14, 2, 5);
    ApproxOptions one;
    one.samples_per_group = 40;
    ApproxOptions many = one;
    many.threads = 4;
    many.engine = ColourfulEngine::Table;
    const auto a = approx_count_subs(cycle(4), g, eps, 7, one);
    const auto b = approx_count_subs(cycle(4), g, eps, 7, one);
    const auto c = approx_count_subs(cycle(4), g, eps, 7, many);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    CHECK(a.trials == 360);
    CHECK(a.seed == 7);
    int differ = 0;
    for (std::uint64_t seed = 8; seed < 13; ++seed) differ += approx_count_subs(cycle(4), g, eps, seed, one).estimate != a.estimate;
    CHECK(differ >= 3);
  }
  SUBCASE("cliques have equal induced and plain estimates") {
    const Graph g = random_degenerate(25, 3, 6);
    ApproxOptions o;
    o.samples_per_group = 100;
    CHECK(approx_count_subs(clique(3), g, eps, 2, o).estimate == approx_count_indsubs(clique(3), g, eps, 2, o).estimate);
  }
  SUBCASE("trivial sizes") {
    CHECK(approx_count_subs(Graph(0), clique(3), eps, 1).estimate == 1);
    CHECK(approx_count_subs(clique(4), clique(3), eps, 1).estimate == 0);
    CHECK_THROWS_AS(approx_count_subs(clique(2), clique(3), 1, 1), PreconditionError);
  }
}

TEST_CASE("approximate counts land in the band on most seeds") {
  const Rational eps(1, 5);
  const Graph g = random_degenerate(40, 2, 77);
  const BigInt subs = count_subs_exact(cycle(4), g);
  const BigInt ind = count_indsubs_exact(biclique(1, 3), g);
  REQUIRE(subs > 0);
  REQUIRE(ind > 0);
  ApproxOptions o;
  o.engine = ColourfulEngine::Table;
  int in_band = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = approx_count_subs(cycle(4), g, eps, seed, o).estimate;
    const auto b = approx_count_indsubs(biclique(1, 3), g, eps, seed, o).estimate;
    in_band += a >= (1 - eps) * Rational(subs) && a <= (1 + eps) * Rational(subs);
    in_band += b >= (1 - eps) * Rational(ind) && b <= (1 + eps) * Rational(ind);
  }
  CHECK(in_band >= 17);
}

TEST_CASE("property counting branches") {
  const Rational eps(1, 5);
  const Property indep = is_edgeless;
  const Property always = [](const Graph&) { return true; };
  SUBCASE("true property gives the binomial") {
    const Graph g = random_degenerate(30, 2, 3);
    const auto r = approx_count_property(always, 3, g, eps, 5, 1);
    CHECK(r.method == "sampling");
    CHECK(r.estimate == 4060);
  }
  SUBCASE("small k is exact") {
    const Graph g = random_degenerate(30, 2, 3);
    const auto r = approx_count_property(indep, 2, g, eps, 5, 3);
    CHECK(r.method == "exact");
    CHECK(r.estimate == Rational(435 - g.num_edges()));
  }
  SUBCASE("small host is exact") {
    const Graph g = random_degenerate(11, 2, 3);
    const auto r = approx_count_property(indep, 4, g, eps, 5, 1);
    CHECK(r.method == "exact");
    CHECK(r.estimate == Rational(count_indsubs_exact(independent_set(4), g)));
  }
  SUBCASE("independent sets by sampling") {
    const Graph g = random_degenerate(30, 2, 12);
    REQUIRE(degeneracy(g) == 2);
    const Rational want(count_property_brute(indep, 4, g));
    const auto r = approx_count_property(indep, 4, g, eps, 19, 1, {9, 3, {}, 4});
    CHECK(r.method == "sampling");
    CHECK(r.trials == property_sample_count(4, 2, eps));
    CHECK(r.estimate >= (1 - eps) * want);
    CHECK(r.estimate <= (1 + eps) * want);
    CHECK(approx_count_property(indep, 4, g, eps, 19, 1).estimate == r.estimate);
  }
  SUBCASE("k larger than n") { CHECK(approx_count_property(indep, 5, clique(3), eps, 1, 1).estimate == 0); }
}

TEST_CASE("brute property count matches the indsub basis") {
  const Graph g = random_gnp(9, 0.4, 21);
  for (const auto& p : property_registry())
    for (int k = 1; k <= 4; ++k) CHECK(count_property_brute(p.predicate, k, g) == count_property_exact(p.predicate, k, g));
}

TEST_CASE("independent set thresholds") {
  CHECK(independent_set_threshold(is_edgeless) == 1);
  CHECK(independent_set_threshold(is_claw_free) == 1);
  CHECK_FALSE(independent_set_threshold([](const Graph& g) { return is_connected(g); }));
  CHECK(independent_set_threshold([](const Graph& g) { return g.num_vertices() >= 3; }) == 3);
  CHECK(first_failing_independent_set([](const Graph&) { return false; }) == 1);
  CHECK(first_failing_independent_set([](const Graph& g) { return g.num_vertices() <= 2; }) == 3);
  CHECK_FALSE(first_failing_independent_set(is_planar));
}

TEST_CASE("minor-closed counting") {
  const Rational eps(1, 5);
  const Graph g = random_degenerate(20, 2, 8);
  const Property tiny = [](const Graph& h) { return h.num_vertices() <= 2; };
  const auto zero = approx_count_minor_closed(tiny, 4, g, eps, 1);
  CHECK(zero.estimate == 0);
  CHECK(zero.method == "zero");
  const auto exact = approx_count_minor_closed(tiny, 2, g, eps, 1);
  CHECK(exact.method == "exact");
  CHECK(exact.estimate == 190);
  CHECK(approx_count_minor_closed([](const Graph&) { return false; }, 3, g, eps, 1).estimate == 0);
  const auto planar = approx_count_minor_closed(is_planar, 3, g, eps, 1);
  CHECK(planar.method == "sampling");
  CHECK(planar.estimate == 1140);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.2") == Rational(1, 5));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("-0.5"), ParseError);
}
