#include "oracles.hpp"

#include "degencount/canon.hpp"
#include "degencount/dtd.hpp"
#include "degencount/generators.hpp"
#include "degencount/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace degencount;

namespace {

OrientedGraph alternating_cycle(int k) {
  std::vector<Edge> arcs;
  for (int i = 0; i < k; ++i) {
    int a = i, b = (i + 1) % k;
    arcs.push_back(i % 2 == 0 ? Edge{a, b} : Edge{b, a});
  }
  return OrientedGraph(k, arcs);
}

OrientedGraph oriented_matching(int k) {
  std::vector<Edge> arcs;
  for (int i = 0; i < k; ++i) arcs.emplace_back(2 * i, 2 * i + 1);
  return OrientedGraph(2 * k, arcs);
}

BagTree random_tree(int m, int n, CounterRng& rng) {
  BagTree t;
  for (int i = 0; i < m; ++i) {
    t.parent.push_back(i == 0 ? -1 : static_cast<int>(rng.below(i)));
    std::vector<Vertex> bag;
    for (int v = 0; v < n; ++v)
      if (rng.below(4) == 0) bag.push_back(v);
    t.bags.push_back(bag);
  }
  return t;
}

}  // namespace

TEST_CASE("acyclic orientation counts") {
  // Values of |chromatic polynomial at -1|.
  CHECK(acyclic_orientations(clique(4)).size() == 24);
  CHECK(acyclic_orientations(cycle(4)).size() == 14);
  CHECK(acyclic_orientations(path(5)).size() == 16);
  CHECK(acyclic_orientations(clique(6)).size() == 720);
  CHECK_THROWS_AS(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}), GraphError);
  for (const Graph& h : {cycle(4), clique(4), path(4), biclique(2, 3)}) {
    std::size_t total = 0;
    for (const auto& c : orientation_classes(h)) total += c.multiplicity;
    CHECK(total == acyclic_orientations(h).size());
  }
  CHECK(orientation_classes(cycle(4)).size() == 3);
  CHECK(orientation_classes(clique(5)).size() == 1);
}

TEST_CASE("kernels are minimal and bounded by the induced matching number") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& h : all_graphs(n))
      for_each_acyclic_orientation(h, [&](const OrientedGraph& o) {
        VertexMask k = find_kernel(o);
        CHECK(is_kernel(o, k));
        CHECK(popcount(k) <= std::max(1, oracle::imn(h)));
        if (popcount(k) > 1)
          for (VertexMask m = k; m; m &= m - 1) CHECK_FALSE(is_kernel(o, k & ~bit(lowest(m))));
        auto t = kernel_dtd(o);
        CHECK(validate_dtd(o, t).ok);
        CHECK(oracle::dtd_valid(o, t));
        CHECK(t.width() == popcount(k));
      });
  CHECK(popcount(find_kernel(oriented_matching(3))) == 3);
  CHECK(kernel_dtd(oriented_matching(3)).width() == 3);
}

TEST_CASE("validation agrees with the per-vertex connectivity oracle") {
  CounterRng rng(7);
  int valid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Graph h = random_gnp(6, 0.4, static_cast<std::uint64_t>(trial));
    auto orientations = acyclic_orientations(h);
    const auto& o = orientations[rng.below(orientations.size())];
    BagTree t = random_tree(1 + static_cast<int>(rng.below(4)), 6, rng);
    auto res = validate_dtd(o, t);
    CHECK(res.ok == oracle::dtd_valid(o, t));
    if (res.ok) ++valid;
    if (!res.ok && res.clause == 3) {
      CHECK(res.node >= 0);
      CHECK(res.node1 >= 0);
      CHECK(res.node2 >= 0);
    }
  }
  CHECK(valid > 50);
  BagTree bad{{-1}, {{5}}};
  CHECK(validate_dtd(alternating_cycle(4), bad).clause == 1);
  BagTree uncovered{{-1}, {{0}}};
  CHECK(validate_dtd(alternating_cycle(4), uncovered).clause == 2);
  BagTree cyc{{1, 0}, {{0}, {2}}};
  CHECK(validate_dtd(alternating_cycle(4), cyc).clause == 0);
}

TEST_CASE("dag treewidth of known dags") {
  auto tour = orient_by_order(clique(5), {0, 1, 2, 3, 4});
  CHECK(dag_treewidth(tour).width == 1);
  // Node sets of the matching components are disjoint, so single sources suffice.
  for (int k = 1; k <= 4; ++k) CHECK(dag_treewidth(oriented_matching(k)).width == 1);
  CHECK(dag_treewidth(alternating_cycle(4)).width == 1);
  // The three sink subtrees pairwise meet, so they would need a common node.
  CHECK(dag_treewidth(alternating_cycle(6)).width == 2);
  CHECK(dag_treewidth(alternating_cycle(8)).width == 2);
  for (int k : {4, 6, 8}) CHECK(validate_dtd(alternating_cycle(k), dag_treewidth(alternating_cycle(k)).dtd).ok);
}

TEST_CASE("dag treewidth matches brute force on four vertices") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& h : all_graphs(n))
      for_each_acyclic_orientation(h, [&](const OrientedGraph& o) {
        auto res = dag_treewidth(o);
        CHECK(oracle::dtd_valid(o, res.dtd));
        CHECK(res.dtd.width() == res.width);
        CHECK(res.width == oracle::dtw_bruteforce(o, 4));
      });
}

TEST_CASE("tau parameters") {
  CHECK(tau1(independent_set(3)) == 1);
  CHECK(tau1(clique(5)) == 1);
  CHECK(tau1(cycle(6)) == 2);
  CHECK(tau1(matching(3)) == 1);
  TauCache cache;
  CHECK(tau2(path(4), &cache) == 1);
  CHECK(tau2(matching(2), &cache) <= 2);
  CHECK(tau3(path(3), &cache) == 1);
  for (const Graph& h : all_graphs(5)) {
    int t1 = tau1(h, &cache), t2 = tau2(h, &cache);
    CHECK(t1 <= t2);
    CHECK(t2 <= std::max(1, oracle::imn(h)));
  }
}

TEST_CASE("skeleton") {
  // 0 -> 2 <- 1, 2 -> 3, 0 -> 4
  OrientedGraph o(5, {{0, 2}, {1, 2}, {2, 3}, {0, 4}});
  auto sk = skeleton(o);
  CHECK(sk.sources == (bit(0) | bit(1)));
  CHECK(sk.joints == (bit(2) | bit(3)));
  CHECK(sk.arcs.size() == 4);
  std::vector<Vertex> ids;
  auto dag = sk.as_dag(ids);
  CHECK(dag.num_vertices() == 4);
}

TEST_CASE("source-only bags validate on the dag iff on its skeleton") {
  CounterRng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph h = random_gnp(7, 0.35, 1000 + static_cast<std::uint64_t>(trial));
    auto orientations = acyclic_orientations(h);
    const auto& o = orientations[rng.below(orientations.size())];
    auto sk = skeleton(o);
    std::vector<Vertex> ids;
    auto dag = sk.as_dag(ids);
    std::vector<int> index(7, -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
    BagTree t, tc;
    const int m = 1 + static_cast<int>(rng.below(4));
    auto srcs = mask_to_vector(sk.sources);
    for (int i = 0; i < m; ++i) {
      int p = i == 0 ? -1 : static_cast<int>(rng.below(i));
      std::vector<Vertex> bag, cbag;
      for (Vertex s : srcs)
        if (rng.below(3) == 0) {
          bag.push_back(s);
          cbag.push_back(index[s]);
        }
      t.parent.push_back(p);
      tc.parent.push_back(p);
      t.bags.push_back(bag);
      tc.bags.push_back(cbag);
    }
    CHECK(validate_dtd(o, t).ok == validate_dtd(dag, tc).ok);
  }
}

TEST_CASE("bag tree text format round trip") {
  BagTree t{{-1, 0, 0}, {{0, 2}, {1}, {}}};
  std::ostringstream out;
  write_bag_tree(out, t);
  CHECK(out.str() == "0 -1: 0 2\n1 0: 1\n2 0:\n");
  std::istringstream in(out.str());
  auto back = read_bag_tree(in);
  CHECK(back.parent == t.parent);
  CHECK(back.bags == t.bags);
}
