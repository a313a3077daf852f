#pragma once

#include "degencount/dtd.hpp"
#include "degencount/graph.hpp"

#include <cstdint>
#include <vector>

namespace degencount {

// Host oriented along a degeneracy order: out-degrees are at most d(G).
class HostDag {
 public:
  explicit HostDag(const Graph& g);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int degeneracy() const { return degeneracy_; }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  bool has_arc(Vertex u, Vertex v) const;
  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<std::vector<Vertex>> out_;
  int degeneracy_ = 0;
};

// Restricts pattern vertex v to host vertices g with host_colour[g] == pattern_colour[v].
struct ColourFilter {
  std::vector<int> host_colour;
  std::vector<int> pattern_colour;
  bool active() const { return !host_colour.empty(); }
};

enum class DtdStrategy { Kernel, Optimal, Automatic };

struct HomOptions {
  DtdStrategy strategy = DtdStrategy::Automatic;
  bool hashed_dictionary = false;
};

// Environment variable DEGENCOUNT_BUDGET overrides the default of 1e12.
std::uint64_t brute_force_budget();

// Exhaustive backtracking oracles. Throw BudgetExceeded when
// |V(G)|^|V(H)| exceeds the budget.
BigInt count_homs_brute(const Graph& h, const Graph& g);
BigInt count_embeddings_brute(const Graph& h, const Graph& g);
BigInt count_strong_embeddings_brute(const Graph& h, const Graph& g);
BigInt count_subs_brute(const Graph& h, const Graph& g);
BigInt count_indsubs_brute(const Graph& h, const Graph& g);
BigInt count_cp_homs_brute(const Graph& h, const Graph& g, const std::vector<int>& colouring);

DagTreeDecomposition choose_dtd(const OrientedGraph& h, DtdStrategy strategy);

// Homomorphisms of an oriented pattern into the oriented host, dynamic
// programming over the given decomposition.
BigInt count_oriented_homs(const OrientedGraph& h, const DagTreeDecomposition& t, const HostDag& host,
                           const ColourFilter& filter = {}, bool hashed = false);

// Sum over acyclic orientations of the oriented counts; components are
// counted separately and multiplied.
BigInt count_homs_dtd(const Graph& h, const Graph& g, const HomOptions& options = {});
BigInt count_homs_dtd(const Graph& h, const HostDag& host, const ColourFilter& filter, const HomOptions& options = {});

enum class CpMethod { Filter, InclusionExclusion };

// colouring: V(G) -> V(H), required to be a homomorphism G -> H.
BigInt count_cp_homs(const Graph& h, const Graph& g, const std::vector<int>& colouring,
                     CpMethod method = CpMethod::Filter);
BigInt count_cf_homs(const Graph& h, const Graph& g, const std::vector<int>& colouring);
BigInt count_colour_respecting_homs(const Graph& h, const std::vector<int>& pattern_colouring, const Graph& g,
                                    const std::vector<int>& host_colouring);

void require_colouring_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& colouring);

}  // namespace degencount
