#pragma once

#include "degencount/dtd.hpp"
#include "degencount/graph.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace degencount {

inline constexpr int kMaxParamVertices = 24;

// Exhaustive searches; throw SizeBoundError beyond kMaxParamVertices.
int induced_matching_number(const Graph& h);
int independence_number(const Graph& h);
int vertex_cover_number(const Graph& h);
std::vector<Edge> maximum_induced_matching(const Graph& h);
std::vector<Vertex> maximum_independent_set(const Graph& h);

// H - e isomorphic to H - e' for every pair of edges.
bool is_edge_transitive(const Graph& h);

// Largest pattern size for which each tau is computed exhaustively.
struct TauLimits {
  int tau1 = 8;
  int tau2 = 7;
  int tau3 = 6;
};

struct ParamReport {
  int k = 0;
  int imn = 0, alpha = 0, vc = 0;
  std::optional<int> tau1, tau2, tau3;  // empty: exceeds bound
  // Empty when all invariants hold, otherwise the first violation.
  std::string check() const;
};

ParamReport param_report(const Graph& h, const TauLimits& limits = {}, TauCache* cache = nullptr);

enum class Verdict { Fpt, Hard, Fptras, Open, Unknown };
std::string to_string(Verdict v);

// Exponents for a single pattern.
struct Classification {
  ParamReport params;
  int sub_exact_exponent = 1;     // max(1, imn)
  int indsub_exact_exponent = 1;  // alpha
  std::optional<int> hom_exponent;          // tau1 upper bound
  std::optional<int> approx_sub_exponent;   // tau1
  int approx_indsub_exponent = 0;           // imn + 1
};

Classification classify(const Graph& h, const TauLimits& limits = {}, TauCache* cache = nullptr);

// Caller-declared boundedness of a pattern family. Unset entries are not
// claimed and yield Verdict::Unknown.
struct FamilyDeclaration {
  std::string name;
  std::optional<bool> imn_bounded;
  std::optional<bool> alpha_bounded;
  std::optional<bool> tau1_bounded;
  std::optional<bool> induced_grid_minors_bounded;
};

struct FamilyVerdicts {
  Verdict sub = Verdict::Unknown;
  Verdict indsub = Verdict::Unknown;
  Verdict hom = Verdict::Unknown;
  Verdict approx_sub = Verdict::Unknown;
  Verdict approx_indsub = Verdict::Unknown;
};

FamilyVerdicts classify_family(const FamilyDeclaration& family);

void write_report(std::ostream& out, const Classification& c, bool key_value);
void write_family_report(std::ostream& out, const FamilyDeclaration& family, const FamilyVerdicts& v, bool key_value);

}  // namespace degencount
