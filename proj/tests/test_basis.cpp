#include "degencount/basis.hpp"
#include "degencount/canon.hpp"
#include "degencount/generators.hpp"
#include "degencount/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace degencount;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : all_graphs(k)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("sub basis examples") {
  auto k3 = sub_basis(clique(3));
  CHECK(k3.size() == 1);
  CHECK(k3.coefficient(clique(3)) == q(1, 6));
  auto p3 = sub_basis(path(3));
  CHECK(p3.size() == 2);
  CHECK(p3.coefficient(path(3)) == q(1, 2));
  CHECK(p3.coefficient(clique(2)) == q(-1, 2));
  auto k2 = sub_basis(clique(2));
  CHECK(k2.size() == 1);
  CHECK(k2.coefficient(clique(2)) == q(1, 2));
}

TEST_CASE("indsub basis examples") {
  for (int k = 1; k <= 5; ++k) {
    auto a = indsub_basis(clique(k)), b = sub_basis(clique(k));
    CHECK(a.terms().size() == b.terms().size());
    for (const auto& [label, term] : a.terms()) CHECK(b.coefficient(term.graph) == term.coefficient);
  }
  auto is2 = indsub_basis(independent_set(2));
  CHECK(is2.coefficient(independent_set(2)) == q(1, 2));
  CHECK(is2.coefficient(clique(1)) == q(-1, 2));
  CHECK(is2.coefficient(clique(2)) == q(-1, 2));
  CHECK(count_indsubs_exact(independent_set(2), clique(3)) == 0);
}

TEST_CASE("exact counting examples") {
  CHECK(count_subs_exact(clique(3), clique(4)) == 4);
  CHECK(count_subs_exact(matching(2), cycle(4)) == 2);
  CHECK(count_subs_exact(path(3), clique(3)) == 3);
  CHECK(count_indsubs_exact(cycle(4), clique(4)) == 0);
  CHECK(count_indsubs_exact(path(3), cycle(4)) == 4);
  Graph g = random_gnp(9, 0.4, 2);
  CHECK(count_indsubs_exact(clique(2), g) == g.num_edges());
}

TEST_CASE("basis identity on small corpora") {
  const auto patterns = graphs_up_to(4);
  std::vector<Graph> hosts = graphs_up_to(5);
  for (std::uint64_t s = 0; s < 6; ++s) hosts.push_back(random_gnp(6, 0.5, 100 + s));
  for (const auto& h : patterns) {
    const auto sb = sub_basis(h), ib = indsub_basis(h);
    for (const auto& g : hosts) {
      const BigInt sub = evaluate_integral(sb, g), ind = evaluate_integral(ib, g);
      CHECK(sub == oracle::sub(h, g));
      CHECK(ind == oracle::indsub(h, g));
      CHECK(ind <= sub);
    }
  }
}

TEST_CASE("quotient and supergraph coefficients are nonzero") {
  for (const auto& h : graphs_up_to(5)) {
    const auto sb = sub_basis(h), ib = indsub_basis(h);
    for_each_partition(h.num_vertices(), [&](const std::vector<int>& block_of, int) {
      if (quotient_has_self_loop(h, block_of)) return;
      CHECK(sb.coefficient(quotient(h, block_of)) != 0);
    });
    std::vector<Edge> non_edges;
    for (int u = 0; u < h.num_vertices(); ++u)
      for (int v = u + 1; v < h.num_vertices(); ++v)
        if (!h.has_edge(u, v)) non_edges.emplace_back(u, v);
    for (std::uint32_t s = 0; s < (1u << non_edges.size()); ++s) {
      std::vector<Edge> extra;
      for (std::size_t i = 0; i < non_edges.size(); ++i)
        if (s >> i & 1) extra.push_back(non_edges[i]);
      CHECK(ib.coefficient(add_edges(h, extra)) != 0);
    }
  }
}

TEST_CASE("property counting") {
  Graph k4 = clique(4);
  CHECK(count_property_exact([](const Graph& h) { return is_connected(h); }, 3, k4) == 4);
  Graph g = random_gnp(9, 0.4, 8);
  CHECK(count_property_exact([](const Graph&) { return true; }, 3, g) == 84);
  CHECK(count_property_exact([](const Graph&) { return false; }, 3, g) == 0);
  const BigInt connected = count_property_exact([](const Graph& h) { return is_connected(h); }, 4, g);
  std::uint64_t want = 0;
  for (const auto& h : all_graphs(4))
    if (is_connected(h)) want += oracle::indsub(h, g);
  CHECK(connected == want);
}

TEST_CASE("basis dump format") {
  std::ostringstream out;
  write_basis(out, sub_basis(path(3)));
  const std::string s = out.str();
  CHECK(s.find("1/2\t") != std::string::npos);
  CHECK(s.find("-1/2\t") != std::string::npos);
  std::istringstream in(s);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    CHECK(from_graph6(line.substr(tab + 1)).num_vertices() >= 2);
    ++lines;
  }
  CHECK(lines == 2);
}

TEST_CASE("partition bound is enforced") {
  CHECK_THROWS_AS(sub_basis(path(11)), SizeBoundError);
}

TEST_CASE("tensor recovery") {
  auto oracle_sub = [](const Graph& h) {
    return [h](const Graph& x) { return count_subs_exact(h, x); };
  };
  auto r = recover_hom_counts_via_tensor(path(3), clique(3), oracle_sub(path(3)));
  CHECK(r.homs.at(canonical_label(path(3))) == 12);
  CHECK(r.homs.at(canonical_label(clique(2))) == 6);
  auto single = recover_hom_counts_via_tensor(clique(2), cycle(5), oracle_sub(clique(2)));
  CHECK(single.queries.size() == 1);
  CHECK(single.homs.at(canonical_label(clique(2))) == 10);

  CounterRng rng(77);
  const auto patterns = graphs_up_to(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph& h = patterns[rng.below(patterns.size())];
    Graph g = random_gnp(2 + static_cast<int>(rng.below(4)), 0.5, 500 + trial);
    auto rec = recover_hom_counts_via_tensor(h, g, oracle_sub(h), trial + 1);
    const auto basis = sub_basis(h);
    for (const auto& [label, term] : basis.terms()) CHECK(rec.homs.at(label) == count_homs_brute(term.graph, g));
  }
}
