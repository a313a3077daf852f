#include "degencount/generators.hpp"

#include "degencount/rng.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace degencount {

namespace {

void require_size(int k, int min, const char* what) {
  if (k < min) throw GraphError(std::string(what) + ": size parameter too small");
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw ParseError("bad integer in generator: " + item);
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph clique(int k) {
  require_size(k, 1, "clique");
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph(k, edges);
}

Graph independent_set(int k) {
  require_size(k, 1, "independent set");
  return Graph(k);
}

Graph path(int k) {
  require_size(k, 1, "path");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return Graph(k, edges);
}

Graph cycle(int k) {
  require_size(k, 3, "cycle");
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return Graph(k, edges);
}

Graph matching(int k) {
  require_size(k, 1, "matching");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * k, edges);
}

Graph biclique(int a, int b) {
  require_size(a, 1, "biclique");
  require_size(b, 1, "biclique");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph grid(int k) {
  require_size(k, 1, "grid");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i + 1 < k) edges.emplace_back(grid_vertex(k, i, j), grid_vertex(k, i + 1, j));
      if (j + 1 < k) edges.emplace_back(grid_vertex(k, i, j), grid_vertex(k, i, j + 1));
    }
  return Graph(k * k, edges);
}

Graph star(int leaves) {
  require_size(leaves, 1, "star");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph wreath(int k, int class_size) {
  require_size(k, 3, "wreath");
  require_size(class_size, 1, "wreath");
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) {
    int d = (c + 1) % k;
    for (int a = 0; a < class_size; ++a)
      for (int b = 0; b < class_size; ++b) edges.emplace_back(c * class_size + a, d * class_size + b);
  }
  return Graph(k * class_size, edges);
}

Graph random_degenerate(int n, int d, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> picked;
  for (int v = 1; v < n; ++v) {
    const int want = std::min(v, d);
    picked.clear();
    while (static_cast<int>(picked.size()) < want) {
      Vertex u = static_cast<Vertex>(rng.below(v));
      if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
    }
    for (Vertex u : picked) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool parse_generator(const std::string& spec, Graph& out) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return false;
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto args = [&](std::size_t count) {
    std::vector<int> v = parse_ints(rest);
    if (v.size() != count) throw ParseError("generator " + name + " expects " + std::to_string(count) + " argument(s)");
    return v;
  };
  if (name == "clique") out = clique(args(1)[0]);
  else if (name == "grid") out = grid(args(1)[0]);
  else if (name == "path") out = path(args(1)[0]);
  else if (name == "cycle") out = cycle(args(1)[0]);
  else if (name == "matching") out = matching(args(1)[0]);
  else if (name == "is") out = independent_set(args(1)[0]);
  else if (name == "star") out = star(args(1)[0]);
  else if (name == "biclique") {
    auto v = args(2);
    out = biclique(v[0], v[1]);
  } else if (name == "wreath") {
    auto v = parse_ints(rest);
    if (v.size() == 1) out = wreath(v[0]);
    else if (v.size() == 2) out = wreath(v[0], v[1]);
    else throw ParseError("generator wreath expects k or k,s");
  } else if (name == "degenerate") {
    auto v = args(3);
    out = random_degenerate(v[0], v[1], static_cast<std::uint64_t>(v[2]));
  } else if (name == "subdiv") {
    const auto last = rest.rfind(':');
    if (last == std::string::npos) throw ParseError("subdiv expects subdiv:NAME:times");
    Graph inner;
    if (!parse_generator(rest.substr(0, last), inner)) throw ParseError("subdiv: unknown inner generator");
    std::size_t used = 0;
    const std::string times = rest.substr(last + 1);
    int t = std::stoi(times, &used);
    if (used != times.size()) throw ParseError("subdiv: bad times");
    out = subdivide(inner, t);
  } else {
    return false;
  }
  return true;
}

}  // namespace degencount
