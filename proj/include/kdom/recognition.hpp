#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdom/families.hpp"
#include "kdom/graph.hpp"
#include "kdom/hypergraph.hpp"

namespace kdom::recognition {

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Structured verdict with a certificate trail.  Every "no" names the first
// failed check together with a finite witness.
struct RecognitionReport {
  bool yes = false;
  std::string reason_code;     // stable machine-readable code
  std::string reason_message;  // human-readable
  std::optional<VertexSet> d_class;
  std::optional<Hypergraph> underlying;
  std::vector<int> d_vertices;  // underlying vertex i corresponds to d_vertices[i]
  std::vector<CheckEntry> checks;

  std::string to_text() const;      // line-oriented certificate
  std::string to_kv_dump() const;   // key=value lines for harnesses
};

struct ExtractResult {
  bool ok = false;
  std::string code;    // "ok" or the first failed condition
  std::string detail;
  std::optional<Hypergraph> underlying;
  std::vector<int> d_vertices;
  VertexSet x_vertices;  // witnesses of extracted edges
  VertexSet y_vertices;  // attachment-type vertices
};

// Recovers the k-uniform hypergraph on d whose edges are the size-k
// neighborhoods shared by at least two outside vertices.  Requires d and its
// complement to be independent; every outside vertex must either join a
// shared size-k neighborhood group or see a neighborhood all of whose
// k-subsets are extracted edges.  The hypergraph must come out connected and
// cover d.
ExtractResult extract_underlying(const Graph& g, VertexSet d, int k);

// Tries both partite classes of a connected bipartite graph as d.
RecognitionReport membership_Bk(const Graph& g, int k);

// Double incidence graph of the extracted underlying hypergraph (the member
// with all extra twins and attachment vertices removed).  Throws
// std::invalid_argument for non-members.
Graph gamma_k_simplified(const Graph& g, int k);

struct TcExtremalResult {
  bool extremal = true;
  // violation certificate: |edges| <= k-1 whose union holds an independent
  // set larger than |edges| + k - 2
  std::vector<int> edge_indices;
  VertexSet independent_set;
  std::string note;
};

// Whether tc(f) = |V(f)| - k + 2, decided through the bounded window
// condition: every union of l <= k-1 edges carries at most l + k - 2 weakly
// independent vertices.  Polynomial for fixed k.  Throws when f is not
// k-uniform.
TcExtremalResult tc_is_extremal(const Hypergraph& f, int k);

struct StarPropertyResult {
  bool holds = true;
  VertexSet violating_quadruple;
};

// For 3-uniform f: every four vertices splittable into two adjacent pairs
// must contain a hyperedge.
StarPropertyResult satisfies_star_property(const Hypergraph& f);

// Canonical form under vertex relabeling: the lexicographically smallest
// sorted edge-mask vector over all permutations.  Intended for small orders.
std::vector<SetWord> hypergraph_canonical_form(const Hypergraph& h);

// All 3-uniform hypergraphs, up to isomorphism, with every vertex covered,
// edge cover number <= 2 and weak independence number >= edge cover number
// + 2.  Their order is at most 6, so the enumeration is exhaustive.  Only
// k = 3 is supported.
std::vector<Hypergraph> enumerate_Hk(int k = 3);

// First induced subhypergraph of f isomorphic to one of the members, if any.
std::optional<VertexSet> find_induced_member(const Hypergraph& f,
                                             const std::vector<Hypergraph>& members);

// Polynomial recognizer: does g satisfy max-degree >= k together with
// gamma_k = gamma + k - 2?  Only k >= 3 is supported; k = 2 has a different
// theory and is rejected with reason code "unsupported-k".  Disconnected
// inputs are accepted exactly when all but one component are isolated
// vertices and the remaining component passes.
RecognitionReport is_gamma_gamma_k_graph_bipartite(const Graph& g, int k);

// Structural match against the subdivided multi-star family with k = 3;
// branch sizes come back sorted ascending.  Scope: bipartite inputs with
// minimum degree >= 3.
std::optional<families::SkShape> is_gamma_gamma3_perfect(const Graph& g);

}  // namespace kdom::recognition
