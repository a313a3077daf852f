#include "oracles.hpp"
#include "random_instances.hpp"

#include "degencount/parse_tree.hpp"

#include <doctest.h>

#include <sstream>

using namespace degencount;

TEST_CASE("parse tree text format and evaluation") {
  // Path 0 - 2 - 1 with 0, 1 labelled 0 and 2 labelled 1.
  std::istringstream in(
      "0 -1 CLIQUE 0 1\n"
      "1 0 UNION\n"
      "2 1 UNION\n"
      "3 2 CREATE 0 0\n"
      "4 2 CREATE 0 1\n"
      "5 1 CREATE 1 2\n");
  auto t = read_parse_tree(in);
  auto ev = evaluate(t);
  CHECK(ev.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(ev.edges == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(t.num_labels() == 2);
  std::ostringstream out;
  write_parse_tree(out, t);
  std::istringstream back(out.str());
  CHECK(evaluate(read_parse_tree(back)).edges == ev.edges);

  OrientedGraph h(3, {{0, 2}, {1, 2}});
  auto dtd = dtd_from_clique_parse(h, t);
  CHECK(validate_dtd(h, dtd).ok);
  CHECK(dtd.width() <= 2);
}

TEST_CASE("parse tree errors") {
  std::istringstream loop("0 -1 CLIQUE 1 1\n1 0 CREATE 1\n");
  CHECK_THROWS_AS(read_parse_tree(loop), ParseError);
  std::istringstream arity("0 -1 UNION\n1 0 CREATE 0\n");
  CHECK_THROWS_AS(read_parse_tree(arity), ParseError);
  std::istringstream op("0 -1 JOIN 0 1\n");
  CHECK_THROWS_AS(read_parse_tree(op), ParseError);
  std::istringstream single("0 -1 CREATE 0 0\n");
  auto t = read_parse_tree(single);
  OrientedGraph wrong(3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(dtd_from_clique_parse(wrong, t), PreconditionError);
}

TEST_CASE("parse-tree decompositions on random skeletons") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = instances::random_skeleton_instance(rng, 8, 2 + static_cast<int>(rng.below(3)));
    auto dtd = dtd_from_clique_parse(inst.dag, inst.tree);
    CHECK(validate_dtd(inst.dag, dtd).ok);
    CHECK(oracle::dtd_valid(inst.dag, dtd));
    CHECK(dtd.width() <= inst.tree.num_labels());
    for (const auto& bag : dtd.bags)
      for (Vertex v : bag) CHECK((inst.dag.sources() & bit(v)) != 0);
    if (inst.dag.num_vertices() <= 10) CHECK(dtd.width() >= dag_treewidth(inst.dag).width);
  }
}
