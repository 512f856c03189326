#pragma once

#include <stdexcept>
#include <vector>

#include "kdom/graph.hpp"
#include "kdom/hypergraph.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom::solvers {

// Every invariant is computed by two independent routes:
//  - reference: enumerate candidate sets by increasing cardinality, first
//    feasible wins.  Slow and obviously correct; this is the oracle.
//  - pruned: branch and bound on the most constrained element with a greedy
//    incumbent and packing lower bounds.
// Both routes return identical results, including the witness.
enum class SolverPath { reference, pruned };

// Canonical witness: among optimal solutions, the one whose vertex set has
// the smallest numeric mask; edge parts tie-break by the smallest numeric
// mask over edge indices (colex order).
struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::vector<int> edge_witness;  // sorted edge indices; only rho and tc use it
  long long explored = 0;         // search nodes, diagnostics only
};

struct UncoverableError : std::invalid_argument {
  explicit UncoverableError(int v)
      : std::invalid_argument("vertex " + std::to_string(v) +
                              " lies in no hyperedge; no edge cover exists"),
        vertex(v) {}
  int vertex;
};

// ---- verifier predicates ----

// Every vertex outside d has a neighbor in d.
bool is_dominating(const Graph& g, VertexSet d);
// Every vertex outside d has at least k neighbors in d (k >= 1).
bool is_k_dominating(const Graph& g, VertexSet d, int k);
// t meets every hyperedge.
bool is_transversal(const Hypergraph& h, VertexSet t);
// x contains no full hyperedge.
bool is_weakly_independent(const Hypergraph& h, VertexSet x);
// The union of the indexed edges is the whole vertex set.
bool is_edge_cover(const Hypergraph& h, const std::vector<int>& edge_indices);
// t is a transversal and the indexed edges cover every vertex outside t.
bool is_tc_set(const Hypergraph& h, VertexSet t, const std::vector<int>& edge_indices);

// ---- exact solvers ----

// Minimum dominating set.
SolveResult gamma(const Graph& g, SolverPath path = SolverPath::pruned);

// Minimum k-dominating set, k >= 1; gamma_k(g, 1) == gamma(g).  Total for
// every k: vertices of degree < k are forced members.
SolveResult gamma_k(const Graph& g, int k, SolverPath path = SolverPath::pruned);

// Minimum transversal (vertex cover of the hypergraph).
SolveResult transversal_number(const Hypergraph& h, SolverPath path = SolverPath::pruned);

// Dual of the transversal number: value = n - tau, witness = complement of
// the canonical minimum transversal.
SolveResult weak_independence_number(const Hypergraph& h,
                                     SolverPath path = SolverPath::pruned);

// Minimum number of edges covering all vertices; witness lives in
// edge_witness.  Throws UncoverableError when some vertex has degree 0.
SolveResult edge_cover_number(const Hypergraph& h, SolverPath path = SolverPath::pruned);

// Minimum size of a transversal T plus an edge set R covering V - T.
// Degree-0 vertices are forced into T.
SolveResult tc_number(const Hypergraph& h, SolverPath path = SolverPath::pruned);

// Maximum X within the window such that no hyperedge of h is contained in X.
// Witness = window minus the canonical minimum transversal of the hypergraph
// restricted to edges inside the window.
SolveResult max_weakly_independent_within(const Hypergraph& h, VertexSet window,
                                          SolverPath path = SolverPath::pruned);

// No induced 2K2, P4 or C4 (checked over all 4-subsets).
bool is_threshold(const Graph& g);

// All minimum k-dominating sets, by full enumeration at the optimum size.
// Intended for small n.
std::vector<VertexSet> enumerate_minimum_k_dominating(const Graph& g, int k);

}  // namespace kdom::solvers
