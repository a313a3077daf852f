#pragma once

#include "degencount/dtd.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <vector>

namespace degencount {

enum class ParseOp { Create, Union, Clique, Relabel };

struct ParseNode {
  ParseOp op = ParseOp::Create;
  int parent = -1;
  int a = -1;         // CREATE label, CLIQUE first label, RELAB source label
  int b = -1;         // CLIQUE second label, RELAB target label
  Vertex vertex = -1; // CREATE: vertex id of the created vertex
};

// Clique-width expression in tree form. Children are ordered by node id.
struct CliqueParseTree {
  std::vector<ParseNode> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  int root() const;
  std::vector<std::vector<int>> children() const;
  int num_labels() const;  // distinct labels occurring anywhere
  // Throws ParseError on bad arity, CLIQUE(i, i) or a malformed tree.
  void check() const;
};

struct ParseEvaluation {
  // Label of every vertex of H_x, for each node x.
  std::vector<std::map<Vertex, int>> labels;
  // Edges created at each node (CLIQUE nodes only).
  std::vector<std::vector<Edge>> created;
  std::vector<Vertex> vertices;  // sorted vertex ids of the root graph
  std::vector<Edge> edges;       // sorted, u < v
};

ParseEvaluation evaluate(const CliqueParseTree& t);

// Lines "id parent_id OP args": CREATE label [vertex], UNION, CLIQUE i j, RELAB i j.
// CREATE without a vertex id numbers vertices in line order.
CliqueParseTree read_parse_tree(std::istream& in);
void write_parse_tree(std::ostream& out, const CliqueParseTree& t);

// For a parse tree of the (undirected) skeleton of h, a dag tree
// decomposition of h on the same tree shape with width at most the number
// of labels.
DagTreeDecomposition dtd_from_clique_parse(const OrientedGraph& h, const CliqueParseTree& t);

}  // namespace degencount
