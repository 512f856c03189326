#include "kdom/families.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace kdom::families {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = gen_();
  while (x >= limit) x = gen_();
  return lo + static_cast<int>(x % span);
}

double Rng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / (n - k + i)) return std::numeric_limits<std::int64_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

SkShape::SkShape(int k_, std::vector<int> sizes) : k(k_), branch_sizes(std::move(sizes)) {
  if (k < 2) throw std::invalid_argument("SkShape: k must be at least 2");
  if (branch_sizes.empty()) throw std::invalid_argument("SkShape: need at least one branch");
  for (int s : branch_sizes)
    if (s < k)
      throw std::invalid_argument("SkShape: branch sizes must be at least k");
}

int SkShape::order() const {
  int total = 1 + (k - 2) + static_cast<int>(branch_sizes.size());
  for (int s : branch_sizes) total += s;
  return total;
}

Graph build_Sk(const SkShape& shape) {
  const int k = shape.k;
  const int r = static_cast<int>(shape.branch_sizes.size());
  // layout: 0 = center, 1..k-2 = twins, k-1..k-2+r = leaves, then branches
  const int first_leaf = k - 1;
  int next = first_leaf + r;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(static_cast<std::size_t>(shape.order()));
  labels[0] = "c";
  for (int t = 1; t <= k - 2; ++t) labels[static_cast<std::size_t>(t)] = "c" + std::to_string(t + 1);
  for (int j = 0; j < r; ++j) {
    const int leaf = first_leaf + j;
    labels[static_cast<std::size_t>(leaf)] = "u" + std::to_string(j + 1);
    for (int i = 0; i < shape.branch_sizes[static_cast<std::size_t>(j)]; ++i) {
      const int sub = next++;
      labels[static_cast<std::size_t>(sub)] =
          "s" + std::to_string(j + 1) + "." + std::to_string(i + 1);
      edges.emplace_back(0, sub);
      for (int t = 1; t <= k - 2; ++t) edges.emplace_back(t, sub);
      edges.emplace_back(leaf, sub);
    }
  }
  return Graph(shape.order(), edges, std::move(labels));
}

Graph double_incidence_graph(const Hypergraph& f, int k) {
  if (!f.is_uniform(k) || f.edge_count() == 0)
    throw std::invalid_argument("double incidence graph needs a k-uniform hypergraph");
  if (!hypergraph_is_connected(f))
    throw std::invalid_argument("double incidence graph needs a connected hypergraph");
  const int n = f.order();
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < f.edge_count(); ++j)
    for (int w = 0; w < 2; ++w)
      for (int v : f.edge(j)) edges.emplace_back(v, n + 2 * j + w);
  return Graph(n + 2 * f.edge_count(), edges);
}

namespace {

bool induces_complete_subhypergraph(const Hypergraph& f, VertexSet s, int k) {
  bool ok = true;
  const std::vector<int> verts = s.elements();
  const int sn = static_cast<int>(verts.size());
  for_each_subset_of_count(sn, k, [&](VertexSet idx) {
    VertexSet subset;
    for (int i : idx) subset.add(verts[static_cast<std::size_t>(i)]);
    if (std::find(f.edges().begin(), f.edges().end(), subset) == f.edges().end()) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace

BkMember build_Bk_member(const BkRecipe& recipe, int k) {
  const Hypergraph& f = recipe.f;
  if (static_cast<int>(recipe.twin_counts.size()) != f.edge_count())
    throw std::invalid_argument("twin_counts must have one entry per edge");
  for (int c : recipe.twin_counts)
    if (c < 0) throw std::invalid_argument("twin counts must be nonnegative");
  for (const VertexSet& s : recipe.y_attachments) {
    if (!s.subset_of(f.vertices()))
      throw std::invalid_argument("attachment set out of range");
    if (s.count() < k)
      throw std::invalid_argument("attachment sets need at least k vertices");
    if (!induces_complete_subhypergraph(f, s, k))
      throw std::invalid_argument("attachment set " + s.to_string() +
                                  " does not induce a complete subhypergraph");
  }
  const Graph base = double_incidence_graph(f, k);
  const int n = f.order();
  std::vector<std::pair<int, int>> edges = base.edge_list();
  int next = base.order();
  for (int j = 0; j < f.edge_count(); ++j)
    for (int c = 0; c < recipe.twin_counts[static_cast<std::size_t>(j)]; ++c) {
      for (int v : f.edge(j)) edges.emplace_back(v, next);
      ++next;
    }
  for (const VertexSet& s : recipe.y_attachments) {
    for (int v : s) edges.emplace_back(v, next);
    ++next;
  }
  BkMember out;
  out.graph = Graph(next, edges);
  out.d = VertexSet::range(n);
  return out;
}

Hypergraph complete_uniform_hypergraph(int n, int k) {
  if (k < 2 || n < k)
    throw std::invalid_argument("complete uniform hypergraph needs n >= k >= 2");
  std::vector<VertexSet> edges;
  for_each_subset_of_count(n, k, [&](VertexSet s) {
    edges.push_back(s);
    return true;
  });
  return Hypergraph(n, std::move(edges));
}

Hypergraph build_Fk_example(int k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("the construction needs an even k >= 4");
  const int l = k / 2;
  const int n = 2 * l + 1;
  const VertexSet all = VertexSet::range(n);
  std::vector<VertexSet> edges;
  for (int i = 0; i < l + 1; ++i) {
    VertexSet e = all;
    e.remove(l + i);  // u_i
    edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

Graph random_graph(int n, double edge_prob, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(n, edge_prob, rng);
}

Graph random_bipartite_graph(int a, int b, double edge_prob, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

Hypergraph random_uniform_hypergraph(int n, int k, int m, Rng& rng) {
  if (k < 2 || k > n) throw std::invalid_argument("need n >= k >= 2");
  if (m < 0 || static_cast<std::int64_t>(m) > binomial(n, k))
    throw std::invalid_argument("edge count exceeds the number of k-subsets");
  std::vector<VertexSet> edges;
  std::vector<int> pool(static_cast<std::size_t>(n));
  while (static_cast<int>(edges.size()) < m) {
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    VertexSet e;
    for (int i = 0; i < k; ++i) {
      const int j = rng.uniform_int(i, n - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      e.add(pool[static_cast<std::size_t>(i)]);
    }
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_uniform_hypergraph(int n, int k, int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_uniform_hypergraph(n, k, m, rng);
}

Hypergraph random_connected_uniform_hypergraph(int n, int k, int m, Rng& rng) {
  if (static_cast<std::int64_t>(m) * (k - 1) < n - 1)
    throw std::invalid_argument("too few edges for a connected hypergraph");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Hypergraph h = random_uniform_hypergraph(n, k, m, rng);
    if (hypergraph_is_connected(h)) return h;
  }
  throw std::runtime_error("failed to sample a connected hypergraph");
}

BkSample random_connected_bipartite_Bk(int k, const BkSamplerParams& params, Rng& rng) {
  BkRecipe recipe;
  recipe.f = random_connected_uniform_hypergraph(params.f_order, k, params.f_edges, rng);
  for (int j = 0; j < recipe.f.edge_count(); ++j)
    recipe.twin_counts.push_back(rng.uniform_int(0, params.max_extra_twins));
  // candidate attachment sets: the edges themselves plus complete (k+1)-sets
  std::vector<VertexSet> candidates = recipe.f.edges();
  for_each_subset_of_count(recipe.f.order(), k + 1, [&](VertexSet s) {
    if (induces_complete_subhypergraph(recipe.f, s, k)) candidates.push_back(s);
    return true;
  });
  const int want = rng.uniform_int(0, params.max_attachments);
  for (int i = 0; i < want; ++i)
    recipe.y_attachments.push_back(
        candidates[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(candidates.size()) - 1))]);
  BkSample sample{recipe, build_Bk_member(recipe, k)};
  return sample;
}

BkSample random_connected_bipartite_Bk(int k, const BkSamplerParams& params,
                                       std::uint64_t seed) {
  Rng rng(seed);
  return random_connected_bipartite_Bk(k, params, rng);
}

}  // namespace kdom::families
