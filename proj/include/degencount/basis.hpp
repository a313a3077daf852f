#pragma once

#include "degencount/graph.hpp"
#include "degencount/hom.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <string>

namespace degencount {

inline constexpr int kMaxPartitionVertices = 10;
inline constexpr int kMaxSupergraphNonEdges = 21;

struct BasisTerm {
  Graph graph;  // canonical representative
  Rational coefficient;
};

// Linear combination of hom counts, keyed by canonical label. Zero
// coefficients are never stored.
class HomBasis {
 public:
  void add(const Graph& g, const Rational& coefficient);
  void add(const HomBasis& other, const Rational& scale = 1);
  Rational coefficient(const Graph& g) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<std::string, BasisTerm>& terms() const { return terms_; }

  Rational evaluate(const std::function<BigInt(const Graph&)>& hom) const;

 private:
  std::map<std::string, BasisTerm> terms_;
};

// Emb(H, G) = sum over self-loop-free quotients of mu(bottom, rho) Hom(H/rho, G).
HomBasis emb_basis(const Graph& h);
// Emb basis scaled by 1/|Aut(H)|.
HomBasis sub_basis(const Graph& h);
// 1/|Aut(H)| sum over labelled edge sets S of non-edges of (-1)^|S| Emb(H+S, G).
HomBasis indsub_basis(const Graph& h);
// Sum of indsub bases over k-vertex graphs satisfying phi.
HomBasis property_basis(const std::function<bool(const Graph&)>& phi, int k);

// Dot product with count_homs_dtd; throws std::logic_error if non-integral or negative.
BigInt evaluate_integral(const HomBasis& basis, const Graph& g, const HomOptions& options = {});

BigInt count_subs_exact(const Graph& h, const Graph& g, const HomOptions& options = {});
BigInt count_indsubs_exact(const Graph& h, const Graph& g, const HomOptions& options = {});
BigInt count_property_exact(const std::function<bool(const Graph&)>& phi, int k, const Graph& g,
                            const HomOptions& options = {});

// "coefficient<TAB>canonical graph6" per term, ordered by label.
void write_basis(std::ostream& out, const HomBasis& basis);

struct TensorRecovery {
  std::map<std::string, BigInt> homs;  // canonical label -> |Hom(H', G)|
  std::vector<Graph> queries;          // the graphs H_i used
};

// Recovers |Hom(H', G)| for every term of sub_basis(H) from a Sub(H, .) oracle
// queried on G x H_i. H_i are cliques K_1, K_2, ..., then seeded random graphs
// until the system has full rank. Throws SingularSystemError after max_extra
// random attempts.
TensorRecovery recover_hom_counts_via_tensor(const Graph& h, const Graph& g,
                                             const std::function<BigInt(const Graph&)>& sub_oracle,
                                             std::uint64_t seed = 1, int max_extra = 200);

}  // namespace degencount
