#pragma once

#include "degencount/dtd.hpp"
#include "degencount/graph.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace degencount {

// Partition (S, P, R) of V(H) against a base graph F. S is indexed by the
// vertices of F, P by F.edges() (each edge {a, b} with a < b).
struct FGadget {
  struct PathBlock {
    std::vector<Vertex> interior;  // in path order from endpoint_a's side
    Vertex endpoint_a = -1;        // in S_a
    Vertex endpoint_b = -1;        // in S_b
  };
  Graph base;
  std::vector<std::vector<Vertex>> S;
  std::vector<PathBlock> P;
  std::vector<Vertex> R;
};

struct GadgetCheck {
  bool ok = true;
  int condition = 0;  // 0 shape/partition, 1 blocks S, 2 paths P, 3 edge coverage
  std::string message;
  explicit operator bool() const { return ok; }
};

GadgetCheck validate_fgadget(const Graph& h, const FGadget& g);
GadgetCheck validate_fgadget(const Graph& f, const Graph& h, const FGadget& g);

struct SubdivisionGadget {
  Graph h;
  FGadget gadget;
};
// H = subdivide(F, times), S_v = {v}, P_e = the internal vertices of e.
SubdivisionGadget fgadget_from_subdivision(const Graph& f, int times);

// Origin of a vertex of the reduced host.
struct Provenance {
  enum class Kind { Vertex, Edge, Remainder } kind = Kind::Vertex;
  int source = -1;   // G vertex (Vertex), G edge index in G.edges() (Edge), -1 (Remainder)
  Vertex copy_of = -1;  // vertex of H this is a copy of
};

struct CpReduction {
  Graph graph;                  // G'
  std::vector<int> colouring;   // c_H : V(G') -> V(H)
  std::vector<Provenance> provenance;
};

// Builds G' from an F-coloured G. Requires a valid gadget and a surjective
// homomorphism colouring G -> F; throws PreconditionError otherwise.
CpReduction reduce_cphom(const Graph& h, const FGadget& gadget, const Graph& g, const std::vector<int>& colouring);

struct ReductionClaims {
  bool colouring_is_homomorphism = false;
  int degeneracy = 0;
  bool degeneracy_bound = false;  // d(G') <= |V(H)| + 2
  bool size_bound = false;        // |V(G')| <= |V(H)| * (|V(G)| + |E(G)|)
  bool ok() const { return colouring_is_homomorphism && degeneracy_bound && size_bound; }
};
ReductionClaims check_reduction_claims(const Graph& h, const Graph& g, const CpReduction& r);

// One block per minor vertex.
struct MinorWitness {
  std::vector<std::vector<Vertex>> blocks;
};

struct WitnessCheck {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

// Blocks nonempty, disjoint, connected in H. Induced: an edge between B_u and
// B_v iff {u, v} in E(minor). Non-induced (model): only the "if" direction.
WitnessCheck validate_witness(const Graph& h, const Graph& minor, const MinorWitness& w, bool induced);

// Witness of the (2k x 2k) grid as an induced minor of H -> gadget over the k x k grid.
FGadget grid_fgadget_from_witness(const Graph& h, int k, const MinorWitness& w);
// Gadget over F plus a model of the k x k grid in F -> induced witness of that grid in H.
MinorWitness grid_witness_from_fgadget(const Graph& h, const FGadget& gadget, int k, const MinorWitness& model);

struct QuotientGadget {
  std::vector<int> block_of;  // partition of V(H)
  Graph quotient;             // H / rho
  FGadget gadget;             // over F, in the quotient
};
// M: induced matching of H with |M| >= 2|E(F)|; F without isolated vertices.
QuotientGadget quotient_with_grid_gadget(const Graph& h, const Graph& f, const std::vector<Edge>& matching);

struct SupergraphGadget {
  std::vector<Edge> added;  // A
  Graph supergraph;         // (V(H), E(H) + A)
  FGadget gadget;           // over F, in the supergraph
};
// I: independent set of H with |I| >= |V(F)| + |E(F)|.
SupergraphGadget supergraph_with_grid_gadget(const Graph& h, const Graph& f, const std::vector<Vertex>& independent);

// Tree decomposition of an undirected graph: vertex and edge coverage and
// connected occurrence sets. Empty message when valid.
std::string check_tree_decomposition(const Graph& f, const BagTree& t);
BagTree trivial_tree_decomposition(const Graph& f);

// Bags B_t = ls(R) + ls(t) on the shape of t_f.
DagTreeDecomposition dtd_from_fgadget(const OrientedGraph& h, const FGadget& gadget, const BagTree& t_f);
// r + s * (width(T_F) + 1)^2, with width(T_F) = largest bag - 1.
int fgadget_width_bound(const OrientedGraph& h, const FGadget& gadget, const BagTree& t_f);

// Sections "F: n m" followed by m edge lines, "S v: ids",
// "P a b: interior ids endpoint_a endpoint_b", "R: ids".
FGadget read_fgadget(std::istream& in);
void write_fgadget(std::ostream& out, const FGadget& g);

// One line per minor vertex "u: ids".
MinorWitness read_witness(std::istream& in);
void write_witness(std::ostream& out, const MinorWitness& w);

}  // namespace degencount
