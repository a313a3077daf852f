#pragma once

#include "degencount/graph.hpp"
#include "degencount/properties.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace degencount {

// Host colourings map V(G) into {0, ..., k-1}. The independent set detector
// requires surjectivity and throws PreconditionError otherwise; the pattern
// detectors answer NO for non-surjective colourings.
struct DetectResult {
  bool found = false;
  // IS: the k chosen host vertices. Sub/IndSub: witness[v] = image of pattern vertex v.
  std::vector<Vertex> witness;
  bool greedy = false;  // IS: some level answered through the greedy branch
  explicit operator bool() const { return found; }
};

DetectResult detect_multicol_is(const Graph& g, const std::vector<int>& colouring, int k);
DetectResult detect_multicol_sub(const Graph& h, const Graph& g, const std::vector<int>& colouring);
DetectResult detect_multicol_indsub(const Graph& h, const Graph& g, const std::vector<int>& colouring);

enum class CopyKind { Sub, IndSub };

// Homomorphism: inclusion-exclusion over colour classes with the hom engine.
// Table: the copies are listed once and each colouring is a lookup.
enum class ColourfulEngine { Homomorphism, Table };

// Exact number of colourful (one vertex per colour) copies of H in G.
class ColourfulCounter {
 public:
  ColourfulCounter(const Graph& h, const Graph& g, CopyKind kind, ColourfulEngine engine);
  ~ColourfulCounter();
  ColourfulCounter(ColourfulCounter&&) noexcept;

  int k() const;
  BigInt count(const std::vector<int>& colouring) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// k^k / k!: inverse probability that a fixed k-set is colourful.
Rational colourful_scale(int k);

struct ApproxOptions {
  int groups = 9;
  Rational sample_constant = 3;
  std::optional<std::uint64_t> samples_per_group;  // overrides the formula
  int threads = 1;
  ColourfulEngine engine = ColourfulEngine::Homomorphism;
};

struct ApproxResult {
  Rational estimate;
  Rational epsilon;
  Rational confidence{2, 3};
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string method;  // sampling, exact, zero
};

// ceil(constant * k^k / (k! * eps^2)).
std::uint64_t colourful_samples_per_group(int k, const Rational& eps, const Rational& constant = 3);
// ceil(3 * (d*k + k)^k / eps^2).
std::uint64_t property_sample_count(int k, int d, const Rational& eps);

// Median over groups of the mean scaled colourful count, each sample a
// uniform colouring drawn from CounterRng(seed, sample index).
ApproxResult approx_count_subs(const Graph& h, const Graph& g, const Rational& eps, std::uint64_t seed,
                               const ApproxOptions& options = {});
ApproxResult approx_count_indsubs(const Graph& h, const Graph& g, const Rational& eps, std::uint64_t seed,
                                  const ApproxOptions& options = {});

// Number of k-subsets of V(G) whose induced subgraph satisfies phi, by enumeration.
BigInt count_property_brute(const Property& phi, int k, const Graph& g);

// c: phi holds on every independent set of size at least c. Exact when
// k < c or |V(G)| < k(d+1), otherwise uniform k-subset sampling.
ApproxResult approx_count_property(const Property& phi, int k, const Graph& g, const Rational& eps,
                                   std::uint64_t seed, int c, const ApproxOptions& options = {});

// Smallest c such that phi holds on the independent sets of sizes c..cap;
// empty if phi fails on the one of size cap.
std::optional<int> independent_set_threshold(const Property& phi, int cap = 16);
// Smallest c <= cap with phi false on the independent set of size c.
std::optional<int> first_failing_independent_set(const Property& phi, int cap = 16);

// Minor-closed phi: 0 if phi fails on an independent set of size c < k,
// exact enumeration if k <= c, sampling with threshold 1 if phi holds on all
// independent sets up to cap.
ApproxResult approx_count_minor_closed(const Property& phi, int k, const Graph& g, const Rational& eps,
                                       std::uint64_t seed, int cap = 16, const ApproxOptions& options = {});

// Parses decimals such as "0.2" or fractions "1/5" exactly.
Rational parse_rational(const std::string& text);

}  // namespace degencount
