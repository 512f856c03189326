#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kdom/graph.hpp"
#include "kdom/hypergraph.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom::families {

// Deterministic RNG wrapper.  mt19937_64 has a fully specified sequence, and
// the helpers below avoid std::*_distribution, so identical seeds give
// identical outputs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  // Uniform on [lo, hi], inclusive; rejection sampling.
  int uniform_int(int lo, int hi);
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

// ---- plain shapes (plumbing) ----
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// ---- constructions ----

// Subdivided multi-star: a star K_{1,r} whose j-th edge is replaced by
// branch_sizes[j] parallel edges, each subdivided once, plus k-2 extra false
// twins of the center.  Requires k >= 2, r >= 1 and every branch size >= k.
struct SkShape {
  int k = 2;
  std::vector<int> branch_sizes;

  SkShape(int k_, std::vector<int> sizes);  // validates the constraints
  int order() const;
};

// Vertex order: center, k-2 twins, r leaves, then subdivision vertices
// grouped by branch.
Graph build_Sk(const SkShape& shape);

// Double incidence graph of a connected k-uniform hypergraph f: the vertices
// of f first, then one witness pair per edge in canonical edge order
// (x_1^1, x_1^2, x_2^1, ...).  Each witness is adjacent to exactly its edge.
Graph double_incidence_graph(const Hypergraph& f, int k);

// Extension recipe over the double incidence graph: extra false twins of the
// first witness of each edge, plus one new vertex per attachment set S, where
// S must induce a complete subhypergraph of f and have |S| >= k.
struct BkRecipe {
  Hypergraph f;
  std::vector<int> twin_counts;         // one entry per edge of f
  std::vector<VertexSet> y_attachments; // subsets of V(f)
};

struct BkMember {
  Graph graph;
  VertexSet d;  // = V(f), the first |V(f)| vertices
};

// Vertex order: V(f), witness pairs, extra twins grouped by edge, then the
// attachment vertices in recipe order.
BkMember build_Bk_member(const BkRecipe& recipe, int k);

// All C(n, k) k-subsets as edges; requires n >= k >= 2.
Hypergraph complete_uniform_hypergraph(int n, int k);

// For even k = 2l >= 4: vertices W (|W| = l, indices 0..l-1) and U
// (|U| = l+1, indices l..2l), edges e_i = V - {u_i}; k-uniform on 2l+1
// vertices with l+1 edges.
Hypergraph build_Fk_example(int k);

// ---- seeded random generators ----

Graph random_graph(int n, double edge_prob, std::uint64_t seed);
Graph random_graph(int n, double edge_prob, Rng& rng);

// Bipartite with sides of size a and b; crossing edges drawn independently.
Graph random_bipartite_graph(int a, int b, double edge_prob, Rng& rng);

// Exactly m distinct k-edges; throws when m exceeds C(n, k).
Hypergraph random_uniform_hypergraph(int n, int k, int m, std::uint64_t seed);
Hypergraph random_uniform_hypergraph(int n, int k, int m, Rng& rng);

// Resamples until connected; m must allow connectivity.
Hypergraph random_connected_uniform_hypergraph(int n, int k, int m, Rng& rng);

struct BkSamplerParams {
  int f_order = 4;
  int f_edges = 3;
  int max_extra_twins = 2;
  int max_attachments = 2;
};

struct BkSample {
  BkRecipe recipe;
  BkMember member;
};

// Member of the class by construction: random connected k-uniform underlying
// hypergraph, then a random recipe over it.
BkSample random_connected_bipartite_Bk(int k, const BkSamplerParams& params,
                                       std::uint64_t seed);
BkSample random_connected_bipartite_Bk(int k, const BkSamplerParams& params, Rng& rng);

// Binomial coefficient, saturating at INT64_MAX.
std::int64_t binomial(int n, int k);

}  // namespace kdom::families
