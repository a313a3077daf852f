#include "degencount/io.hpp"

#include "degencount/generators.hpp"

#include <fstream>
#include <sstream>

namespace degencount {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    return true;
  }
  return false;
}

namespace {

std::vector<Edge> read_pairs(std::istream& in, int& n, bool require_ordered) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("missing header line");
  std::istringstream header(line);
  long long nn = -1, m = -1;
  if (!(header >> nn >> m) || nn < 0 || m < 0) throw ParseError("bad header: " + line);
  n = static_cast<int>(nn);
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) throw ParseError("expected " + std::to_string(m) + " edge lines");
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("bad edge line: " + line);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range: " + line);
    if (u == v) throw SelfLoopError("self-loop in input: " + line);
    if (require_ordered && u > v) throw ParseError("edge line must satisfy u < v: " + line);
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line)) throw ParseError("trailing content after edge list: " + line);
  return pairs;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  int n = 0;
  auto edges = read_pairs(in, n, true);
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<Edge> read_arc_list(std::istream& in, int& n) { return read_pairs(in, n, false); }

std::vector<int> read_colouring(std::istream& in, int n) {
  std::vector<int> c;
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream ls(line);
    long long x;
    std::string extra;
    if (!(ls >> x) || (ls >> extra) || x < 0) throw ParseError("bad colouring line: " + line);
    c.push_back(static_cast<int>(x));
  }
  if (static_cast<int>(c.size()) != n)
    throw ParseError("colouring has " + std::to_string(c.size()) + " entries, expected " + std::to_string(n));
  return c;
}

std::vector<int> read_colouring_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_colouring(in, n);
}

void write_colouring(std::ostream& out, const std::vector<int>& colouring) {
  for (int c : colouring) out << c << '\n';
}

Partition read_partition(std::istream& in) {
  Partition p;
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream ls(line);
    std::vector<Vertex> block;
    long long v;
    while (ls >> v) block.push_back(static_cast<Vertex>(v));
    if (!ls.eof()) throw ParseError("bad partition line: " + line);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

void write_partition(std::ostream& out, const Partition& p) {
  for (const auto& b : p.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
}

Graph load_graph(const std::string& spec) {
  Graph g;
  if (parse_generator(spec, g)) return g;
  return read_edge_list_file(spec);
}

}  // namespace degencount
