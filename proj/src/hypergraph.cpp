#include "kdom/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdom {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("hypergraph order must be nonnegative");
  if (n > kMaxVertices)
    throw std::invalid_argument("hypergraph order exceeds the vertex cap");
  const VertexSet all = VertexSet::range(n);
  for (const VertexSet& e : edges_) {
    if (!e.subset_of(all)) throw std::invalid_argument("hyperedge vertex out of range");
    if (e.count() < 2) throw std::invalid_argument("hyperedges must have at least 2 vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Hypergraph::degree(int v) const {
  int d = 0;
  for (const VertexSet& e : edges_)
    if (e.contains(v)) ++d;
  return d;
}

VertexSet Hypergraph::covered_vertices() const {
  VertexSet cov;
  for (const VertexSet& e : edges_) cov |= e;
  return cov;
}

bool Hypergraph::is_uniform(int k) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [k](const VertexSet& e) { return e.count() == k; });
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const int k = edges_.front().count();
  return is_uniform(k) ? std::optional<int>(k) : std::nullopt;
}

bool hypergraph_is_connected(const Hypergraph& h) {
  const int n = h.order();
  if (n <= 1) return true;
  VertexSet comp = VertexSet::single(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const VertexSet& e : h.edges()) {
      if (e.intersects(comp) && !e.subset_of(comp)) {
        comp |= e;
        grew = true;
      }
    }
  }
  return comp == h.vertices();
}

Graph two_section(const Hypergraph& h) {
  std::vector<std::pair<int, int>> edges;
  for (const VertexSet& e : h.edges())
    for (int u : e)
      for (int v : e)
        if (u < v) edges.emplace_back(u, v);
  return Graph(h.order(), edges);
}

Graph incidence_graph(const Hypergraph& h) {
  const int n = h.order();
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < h.edge_count(); ++j)
    for (int v : h.edge(j)) edges.emplace_back(v, n + j);
  return Graph(n + h.edge_count(), edges);
}

}  // namespace kdom
