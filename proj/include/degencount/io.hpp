#pragma once

#include "degencount/graph.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace degencount {

// Header "n m" followed by m lines "u v". Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Same layout, but each line is an arc u -> v.
std::vector<Edge> read_arc_list(std::istream& in, int& n);

// One colour per vertex, one per line.
std::vector<int> read_colouring(std::istream& in, int n);
std::vector<int> read_colouring_file(const std::string& path, int n);
void write_colouring(std::ostream& out, const std::vector<int>& colouring);

// One block per line, vertices separated by whitespace.
Partition read_partition(std::istream& in);
void write_partition(std::ostream& out, const Partition& p);

// Accepts a generator expression (clique:4, ...) or an edge-list path.
Graph load_graph(const std::string& spec);

// Next non-empty, non-comment line; false at end of input.
bool next_content_line(std::istream& in, std::string& line);

}  // namespace degencount
