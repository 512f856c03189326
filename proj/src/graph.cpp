#include "kdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdom {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds the vertex cap " + std::to_string(kMaxVertices));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count does not match graph order");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
  }
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::display_label(int v) const {
  if (has_labels()) return labels_[static_cast<std::size_t>(v)];
  return std::to_string(v + 1);
}

std::optional<PartiteSplit> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  PartiteSplit split;
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] == 0)
      split.class_a.add(v);
    else
      split.class_b.add(v);
  }
  return split;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int start = 0; start < n; ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      frontier = next - comp;
      comp |= frontier;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: vertex out of range");
  InducedSubgraph out;
  out.vertex_map = s.elements();
  const int m = static_cast<int>(out.vertex_map.size());
  std::vector<int> inverse(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) inverse[static_cast<std::size_t>(out.vertex_map[i])] = i;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    const int u = out.vertex_map[static_cast<std::size_t>(i)];
    for (int v : g.neighbors(u) & s)
      if (u < v) edges.emplace_back(i, inverse[static_cast<std::size_t>(v)]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(static_cast<std::size_t>(m));
    for (int v : out.vertex_map) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
  }
  out.graph = Graph(m, edges, std::move(labels));
  return out;
}

InducedSubgraph graph_square_induced(const Graph& g, VertexSet d) {
  if (!d.subset_of(g.vertices()))
    throw std::invalid_argument("graph_square_induced: vertex out of range");
  InducedSubgraph out;
  out.vertex_map = d.elements();
  const int m = static_cast<int>(out.vertex_map.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int u = out.vertex_map[static_cast<std::size_t>(i)];
      const int v = out.vertex_map[static_cast<std::size_t>(j)];
      if (g.adjacent(u, v) || g.neighbors(u).intersects(g.neighbors(v)))
        edges.emplace_back(i, j);
    }
  }
  out.graph = Graph(m, edges);
  return out;
}

Graph lexicographic_blowup(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("blowup factor must be positive");
  const int n = g.order();
  if (n > 0 && n * t > kMaxVertices)
    throw std::invalid_argument("blowup exceeds the vertex cap");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) edges.emplace_back(u * t + i, v * t + j);
  return Graph(n * t, edges);
}

}  // namespace kdom
