#include "degencount/basis.hpp"

#include "degencount/canon.hpp"
#include "degencount/generators.hpp"

#include <stdexcept>
#include <unordered_map>

namespace degencount {

void HomBasis::add(const Graph& g, const Rational& coefficient) {
  if (coefficient == 0) return;
  const std::string label = canonical_label(g);
  auto it = terms_.find(label);
  if (it == terms_.end()) {
    terms_.emplace(label, BasisTerm{from_graph6(label), coefficient});
    return;
  }
  it->second.coefficient += coefficient;
  if (it->second.coefficient == 0) terms_.erase(it);
}

void HomBasis::add(const HomBasis& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [label, term] : other.terms_) {
    auto it = terms_.find(label);
    if (it == terms_.end()) {
      terms_.emplace(label, BasisTerm{term.graph, term.coefficient * scale});
      continue;
    }
    it->second.coefficient += term.coefficient * scale;
    if (it->second.coefficient == 0) terms_.erase(it);
  }
}

Rational HomBasis::coefficient(const Graph& g) const {
  auto it = terms_.find(canonical_label(g));
  return it == terms_.end() ? Rational(0) : it->second.coefficient;
}

Rational HomBasis::evaluate(const std::function<BigInt(const Graph&)>& hom) const {
  Rational total = 0;
  for (const auto& [label, term] : terms_) total += term.coefficient * Rational(hom(term.graph));
  return total;
}

HomBasis emb_basis(const Graph& h) {
  if (h.num_vertices() > kMaxPartitionVertices)
    throw SizeBoundError("partition enumeration limited to " + std::to_string(kMaxPartitionVertices) + " vertices");
  // Collect labelled quotients first so each class is canonicalised once per distinct edge set.
  std::map<std::pair<int, std::vector<Edge>>, BigInt> raw;
  for_each_partition(h.num_vertices(), [&](const std::vector<int>& block_of, int blocks) {
    if (quotient_has_self_loop(h, block_of)) return;
    Graph q = quotient(h, block_of);
    raw[{blocks, q.edges()}] += partition_moebius(block_of, blocks);
  });
  HomBasis basis;
  for (const auto& [key, mu] : raw) basis.add(Graph(key.first, key.second), Rational(mu));
  return basis;
}

HomBasis sub_basis(const Graph& h) {
  HomBasis basis;
  basis.add(emb_basis(h), Rational(BigInt(1), automorphism_count(h)));
  return basis;
}

HomBasis indsub_basis(const Graph& h) {
  const int n = h.num_vertices();
  std::vector<Edge> non_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!h.has_edge(u, v)) non_edges.emplace_back(u, v);
  if (static_cast<int>(non_edges.size()) > kMaxSupergraphNonEdges)
    throw SizeBoundError("supergraph expansion limited to " + std::to_string(kMaxSupergraphNonEdges) + " non-edges");
  if (n > kMaxPartitionVertices)
    throw SizeBoundError("partition enumeration limited to " + std::to_string(kMaxPartitionVertices) + " vertices");
  // Signed number of labelled edge sets per isomorphism class of H + S.
  std::unordered_map<std::string, BigInt> weight;
  const std::uint64_t subsets = 1ULL << non_edges.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < non_edges.size(); ++i)
      if (s >> i & 1) extra.push_back(non_edges[i]);
    const std::string label = canonical_label(add_edges(h, extra));
    weight[label] += (extra.size() % 2) ? -1 : 1;
  }
  const Rational inv_aut(BigInt(1), automorphism_count(h));
  HomBasis basis;
  for (const auto& [label, w] : weight)
    if (w != 0) basis.add(emb_basis(from_graph6(label)), Rational(w) * inv_aut);
  return basis;
}

HomBasis property_basis(const std::function<bool(const Graph&)>& phi, int k) {
  if (k < 0 || k > 8) throw SizeBoundError("property counting enumerates graphs on at most 8 vertices");
  HomBasis basis;
  for (const auto& h : all_graphs(k))
    if (phi(h)) basis.add(indsub_basis(h));
  return basis;
}

BigInt evaluate_integral(const HomBasis& basis, const Graph& g, const HomOptions& options) {
  HostDag host(g);
  Rational total = basis.evaluate([&](const Graph& h) { return count_homs_dtd(h, host, {}, options); });
  if (denominator(total) != 1) throw std::logic_error("basis evaluation is not integral: " + to_string(total));
  if (total < 0) throw std::logic_error("basis evaluation is negative: " + to_string(total));
  return numerator(total);
}

BigInt count_subs_exact(const Graph& h, const Graph& g, const HomOptions& options) {
  return evaluate_integral(sub_basis(h), g, options);
}

BigInt count_indsubs_exact(const Graph& h, const Graph& g, const HomOptions& options) {
  return evaluate_integral(indsub_basis(h), g, options);
}

BigInt count_property_exact(const std::function<bool(const Graph&)>& phi, int k, const Graph& g,
                            const HomOptions& options) {
  return evaluate_integral(property_basis(phi, k), g, options);
}

void write_basis(std::ostream& out, const HomBasis& basis) {
  for (const auto& [label, term] : basis.terms()) out << to_string(term.coefficient) << '\t' << label << '\n';
}

namespace {

// Incremental row echelon form over the rationals.
class Echelon {
 public:
  explicit Echelon(int columns) : columns_(columns) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds row (with right-hand side) if it is independent of the current rows.
  bool add(std::vector<Rational> row, Rational rhs) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = row[pivots_[i]];
      if (f == 0) continue;
      for (int c = 0; c < columns_; ++c) row[c] -= f * rows_[i][c];
      rhs -= f * rhs_[i];
    }
    int pivot = -1;
    for (int c = 0; c < columns_; ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) return false;
    const Rational p = row[pivot];
    for (auto& x : row) x /= p;
    rhs /= p;
    // Keep the system reduced: clear the new pivot column from earlier rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = rows_[i][pivot];
      if (f == 0) continue;
      for (int c = 0; c < columns_; ++c) rows_[i][c] -= f * row[c];
      rhs_[i] -= f * rhs;
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
    pivots_.push_back(pivot);
    return true;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = rhs_[i];
    return x;
  }

 private:
  int columns_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> pivots_;
};

}  // namespace

TensorRecovery recover_hom_counts_via_tensor(const Graph& h, const Graph& g,
                                             const std::function<BigInt(const Graph&)>& sub_oracle,
                                             std::uint64_t seed, int max_extra) {
  const HomBasis basis = sub_basis(h);
  std::vector<const BasisTerm*> terms;
  std::vector<std::string> labels;
  for (const auto& [label, term] : basis.terms()) {
    terms.push_back(&term);
    labels.push_back(label);
  }
  const int m = static_cast<int>(terms.size());
  Echelon system(m);
  TensorRecovery out;
  auto try_query = [&](const Graph& q) {
    std::vector<Rational> row(m);
    for (int j = 0; j < m; ++j) row[j] = terms[j]->coefficient * Rational(count_homs_dtd(terms[j]->graph, q));
    // Check independence before paying for the oracle call.
    Echelon probe = system;
    if (!probe.add(row, 0)) return;
    const BigInt value = sub_oracle(tensor_product(g, q));
    system.add(row, Rational(value));
    out.queries.push_back(q);
  };
  for (int i = 1; i <= m && system.rank() < m; ++i) try_query(clique(i));
  for (int attempt = 0; attempt < max_extra && system.rank() < m; ++attempt) {
    const int size = 2 + attempt % std::max(2, h.num_vertices() + 2);
    try_query(random_gnp(size, 0.5, seed * 1000003ULL + attempt));
  }
  if (system.rank() < m)
    throw SingularSystemError("tensor system stayed singular after " + std::to_string(max_extra) + " random graphs");
  const auto x = system.solution();
  for (int j = 0; j < m; ++j) {
    if (denominator(x[j]) != 1) throw std::logic_error("recovered hom count is not integral");
    out.homs[labels[j]] = numerator(x[j]);
  }
  return out;
}

}  // namespace degencount
