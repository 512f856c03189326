#pragma once

#include <optional>
#include <vector>

#include "kdom/graph.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

// Hypergraph on vertices 0..n-1.  Every edge has at least two vertices.
// Duplicate edges collapse on construction and edges are kept sorted by
// numeric mask, which fixes a canonical edge order for witnesses and files.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws std::invalid_argument for edges of size < 2 or out of range.
  Hypergraph(int n, std::vector<VertexSet> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const VertexSet& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

  // Number of edges containing v.
  int degree(int v) const;
  VertexSet covered_vertices() const;

  bool is_uniform(int k) const;
  // Common edge size, or nullopt when edgeless or non-uniform.
  std::optional<int> uniformity() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// Two vertices are adjacent when they share an edge; connectivity follows
// adjacency chains.  A one-vertex hypergraph counts as connected; a vertex in
// no edge disconnects any larger one.
bool hypergraph_is_connected(const Hypergraph& h);

// Same vertex set; uv is an edge iff some hyperedge contains both.
Graph two_section(const Hypergraph& h);

// Bipartite graph on n + m vertices: vertex i is adjacent to n + j iff edge j
// contains i.  Hypergraph vertices come first, then edges in canonical order.
Graph incidence_graph(const Hypergraph& h);

}  // namespace kdom
