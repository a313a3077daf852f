#include "degencount/parse_tree.hpp"

#include "degencount/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace degencount {

int CliqueParseTree::root() const {
  for (int i = 0; i < size(); ++i)
    if (nodes[i].parent == -1) return i;
  return -1;
}

std::vector<std::vector<int>> CliqueParseTree::children() const {
  std::vector<std::vector<int>> ch(size());
  for (int i = 0; i < size(); ++i)
    if (nodes[i].parent >= 0) ch[nodes[i].parent].push_back(i);
  return ch;
}

int CliqueParseTree::num_labels() const {
  std::set<int> labels;
  for (const auto& n : nodes) {
    if (n.a >= 0) labels.insert(n.a);
    if (n.b >= 0) labels.insert(n.b);
  }
  return static_cast<int>(labels.size());
}

void CliqueParseTree::check() const {
  if (nodes.empty()) throw ParseError("parse tree has no nodes");
  BagTree shape;
  for (const auto& n : nodes) {
    shape.parent.push_back(n.parent);
    shape.bags.emplace_back();
  }
  try {
    shape.check_tree();
  } catch (const GraphError& e) {
    throw ParseError(std::string("parse tree: ") + e.what());
  }
  auto ch = children();
  for (int i = 0; i < size(); ++i) {
    const auto& n = nodes[i];
    const std::size_t want = n.op == ParseOp::Create ? 0 : n.op == ParseOp::Union ? 2 : 1;
    if (ch[i].size() != want) throw ParseError("parse node " + std::to_string(i) + " has wrong number of children");
    if (n.op != ParseOp::Union && n.a < 0) throw ParseError("parse node " + std::to_string(i) + " lacks a label");
    if ((n.op == ParseOp::Clique || n.op == ParseOp::Relabel) && n.b < 0)
      throw ParseError("parse node " + std::to_string(i) + " lacks a second label");
    if (n.op == ParseOp::Clique && n.a == n.b) throw ParseError("CLIQUE(i, i) is not allowed");
    if (n.op == ParseOp::Create && n.vertex < 0) throw ParseError("CREATE without vertex id");
  }
}

ParseEvaluation evaluate(const CliqueParseTree& t) {
  t.check();
  ParseEvaluation ev;
  ev.labels.resize(t.size());
  ev.created.resize(t.size());
  auto ch = t.children();
  // Post-order without recursion.
  std::vector<int> order, stack{t.root()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int c : ch[x]) stack.push_back(c);
  }
  std::set<Edge> edges;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    const auto& node = t.nodes[x];
    auto& lab = ev.labels[x];
    switch (node.op) {
      case ParseOp::Create:
        lab[node.vertex] = node.a;
        break;
      case ParseOp::Union:
        lab = ev.labels[ch[x][0]];
        for (auto [v, l] : ev.labels[ch[x][1]])
          if (!lab.emplace(v, l).second) throw ParseError("UNION of graphs sharing vertex " + std::to_string(v));
        break;
      case ParseOp::Clique: {
        lab = ev.labels[ch[x][0]];
        for (auto [u, lu] : lab)
          for (auto [v, lv] : lab)
            if (lu == node.a && lv == node.b) {
              Edge e{std::min(u, v), std::max(u, v)};
              ev.created[x].push_back(e);
              edges.insert(e);
            }
        break;
      }
      case ParseOp::Relabel:
        lab = ev.labels[ch[x][0]];
        for (auto& [v, l] : lab)
          if (l == node.a) l = node.b;
        break;
    }
  }
  for (auto [v, l] : ev.labels[t.root()]) ev.vertices.push_back(v);
  ev.edges.assign(edges.begin(), edges.end());
  return ev;
}

CliqueParseTree read_parse_tree(std::istream& in) {
  std::vector<std::pair<int, ParseNode>> rows;
  std::string line;
  Vertex next_vertex = 0;
  while (next_content_line(in, line)) {
    std::istringstream ls(line);
    long long id, parent;
    std::string op;
    if (!(ls >> id >> parent >> op)) throw ParseError("bad parse tree line: " + line);
    ParseNode n;
    n.parent = static_cast<int>(parent);
    std::vector<long long> args;
    long long x;
    while (ls >> x) args.push_back(x);
    if (!ls.eof()) throw ParseError("bad parse tree arguments: " + line);
    if (op == "CREATE") {
      if (args.empty() || args.size() > 2) throw ParseError("CREATE takes a label and an optional vertex: " + line);
      n.op = ParseOp::Create;
      n.a = static_cast<int>(args[0]);
      n.vertex = args.size() == 2 ? static_cast<Vertex>(args[1]) : next_vertex;
      ++next_vertex;
    } else if (op == "UNION") {
      if (!args.empty()) throw ParseError("UNION takes no arguments: " + line);
      n.op = ParseOp::Union;
    } else if (op == "CLIQUE" || op == "RELAB") {
      if (args.size() != 2) throw ParseError(op + " takes two labels: " + line);
      n.op = op == "CLIQUE" ? ParseOp::Clique : ParseOp::Relabel;
      n.a = static_cast<int>(args[0]);
      n.b = static_cast<int>(args[1]);
    } else {
      throw ParseError("unknown parse operation: " + op);
    }
    rows.emplace_back(static_cast<int>(id), n);
  }
  CliqueParseTree t;
  t.nodes.resize(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (auto& [id, n] : rows) {
    if (id < 0 || id >= static_cast<int>(rows.size()) || seen[id]) throw ParseError("parse node ids must be 0..m-1, each once");
    seen[id] = 1;
    t.nodes[id] = n;
  }
  t.check();
  return t;
}

void write_parse_tree(std::ostream& out, const CliqueParseTree& t) {
  for (int i = 0; i < t.size(); ++i) {
    const auto& n = t.nodes[i];
    out << i << ' ' << n.parent << ' ';
    switch (n.op) {
      case ParseOp::Create: out << "CREATE " << n.a << ' ' << n.vertex; break;
      case ParseOp::Union: out << "UNION"; break;
      case ParseOp::Clique: out << "CLIQUE " << n.a << ' ' << n.b; break;
      case ParseOp::Relabel: out << "RELAB " << n.a << ' ' << n.b; break;
    }
    out << '\n';
  }
}

DagTreeDecomposition dtd_from_clique_parse(const OrientedGraph& h, const CliqueParseTree& t) {
  const ParseEvaluation ev = evaluate(t);
  const Skeleton sk = skeleton(h);
  std::vector<Vertex> expected_vertices = mask_to_vector(sk.sources | sk.joints);
  std::vector<Edge> expected_edges;
  for (auto [s, j] : sk.arcs) expected_edges.emplace_back(std::min(s, j), std::max(s, j));
  std::sort(expected_edges.begin(), expected_edges.end());
  if (ev.vertices != expected_vertices || ev.edges != expected_edges)
    throw PreconditionError("parse tree does not evaluate to the skeleton of the dag");

  const int m = t.size();
  auto ch = t.children();
  std::vector<int> parent(m), depth(m, 0);
  for (int i = 0; i < m; ++i) parent[i] = t.nodes[i].parent;
  {
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int c : ch[x]) {
        depth[c] = depth[x] + 1;
        stack.push_back(c);
      }
    }
  }
  std::map<Vertex, int> x_on, x_off;
  for (int x = 0; x < m; ++x)
    if (t.nodes[x].op == ParseOp::Create) x_on[t.nodes[x].vertex] = x;
  for (auto [v, x] : x_on) x_off[v] = x;
  for (int x = 0; x < m; ++x)
    for (auto [u, v] : ev.created[x])
      for (Vertex w : {u, v})
        if (depth[x] < depth[x_off[w]]) x_off[w] = x;

  std::map<Vertex, Vertex> designated;
  for (Vertex v : expected_vertices) {
    if (sk.sources & bit(v)) {
      designated[v] = v;
      continue;
    }
    Vertex best = -1;
    for (auto [a, b] : ev.created[x_off[v]]) {
      Vertex other = a == v ? b : b == v ? a : -1;
      if (other >= 0 && (sk.sources & bit(other)) && (best == -1 || other < best)) best = other;
    }
    if (best == -1) throw std::logic_error("joint without a source edge at its last edge node");
    designated[v] = best;
  }

  DagTreeDecomposition out;
  out.parent = parent;
  out.bags.resize(m);
  for (int x = 0; x < m; ++x) {
    std::map<int, Vertex> representative;  // label -> smallest active vertex
    for (auto [v, label] : ev.labels[x]) {
      if (depth[x] < depth[x_off[v]]) continue;  // past its last edge node
      auto it = representative.find(label);
      if (it == representative.end() || v < it->second) representative[label] = v;
    }
    std::set<Vertex> bag;
    for (auto [label, v] : representative) bag.insert(designated[v]);
    out.bags[x].assign(bag.begin(), bag.end());
  }
  return out;
}

}  // namespace degencount
