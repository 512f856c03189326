#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdom/vertex_set.hpp"

namespace kdom {

// Simple undirected graph on vertices 0..n-1 with one adjacency word per
// vertex.  Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, out-of-range endpoints or
  // n > kMaxVertices.  Parallel edges collapse silently (adjacency is a set).
  Graph(int n, std::span<const std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, std::span<const std::pair<int, int>>(edges));
  }

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  int min_degree() const;
  int max_degree() const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label if present, 1-based vertex number otherwise (display convention).
  std::string display_label(int v) const;

  // Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// A bipartition; class_a and class_b partition the vertex set and both sides
// are independent.
struct PartiteSplit {
  VertexSet class_a;
  VertexSet class_b;
};

struct InducedSubgraph {
  Graph graph;
  // vertex_map[i] = original vertex of the i-th new vertex; strictly increasing.
  std::vector<int> vertex_map;
};

// BFS 2-coloring.  The lowest vertex of every component lands in class_a, so
// the split is deterministic for disconnected inputs as well.
std::optional<PartiteSplit> is_bipartite(const Graph& g);

// Components sorted by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Subgraph induced by s, with the order-preserving index map.
// Throws std::invalid_argument when s has a vertex outside the graph.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Graph on d where two vertices are adjacent iff their distance in g is <= 2.
InducedSubgraph graph_square_induced(const Graph& g, VertexSet d);

// Lexicographic product with the edgeless graph on t vertices: every vertex
// becomes t independent false twins.  Copy i of vertex v gets index v*t + i.
// Throws std::invalid_argument for t < 1 or when n*t exceeds the cap.
Graph lexicographic_blowup(const Graph& g, int t);

}  // namespace kdom
