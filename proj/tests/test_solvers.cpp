#include <doctest.h>

#include <stdexcept>

#include "kdom/families.hpp"
#include "kdom/solvers.hpp"

using namespace kdom;
using solvers::SolverPath;

TEST_CASE("domination predicates") {
  const Graph c4 = families::cycle_graph(4);
  CHECK(solvers::is_dominating(c4, c4.vertices()));
  CHECK_FALSE(solvers::is_dominating(c4, VertexSet::single(0)));

  const Graph k34 = families::complete_bipartite(3, 4);
  const VertexSet small_side = VertexSet::range(3);
  CHECK(solvers::is_dominating(k34, small_side));
  CHECK(solvers::is_k_dominating(k34, small_side, 3));
  CHECK_FALSE(solvers::is_k_dominating(k34, small_side, 4));
  CHECK(solvers::is_k_dominating(k34, k34.vertices(), 7));
}

TEST_CASE("domination numbers on fixed graphs") {
  CHECK(solvers::gamma(families::complete_bipartite(3, 4)).value == 2);
  CHECK(solvers::gamma(families::edgeless_graph(0)).value == 0);
  CHECK(solvers::gamma(families::edgeless_graph(5)).value == 5);

  // blown-up 6-cycle: gamma = 4, gamma_4 = 6
  const Graph c6k2 = lexicographic_blowup(families::cycle_graph(6), 2);
  CHECK(solvers::gamma(c6k2).value == 4);
  CHECK(solvers::gamma_k(c6k2, 4).value == 6);

  // subdivided multi-star: gamma = r+1 and gamma_k = r+k-1
  const Graph s334 = families::build_Sk(families::SkShape(3, {3, 3, 4}));
  CHECK(solvers::gamma(s334).value == 4);
  CHECK(solvers::gamma_k(s334, 3).value == 5);

  // edgeless graphs force every vertex for any k
  CHECK(solvers::gamma_k(families::edgeless_graph(6), 3).value == 6);
  // k beyond the maximum degree still works
  CHECK(solvers::gamma_k(families::cycle_graph(5), 4).value == 5);
  CHECK(solvers::gamma_k(families::complete_bipartite(3, 4), 1).value == 2);
}

TEST_CASE("canonical witnesses are the smallest optimal masks") {
  const Graph k34 = families::complete_bipartite(3, 4);
  const auto res = solvers::gamma(k34);
  CHECK(res.value == 2);
  CHECK(res.witness == VertexSet::of({0, 3}));  // smallest mask over {side-a, side-b} picks
  CHECK(solvers::is_dominating(k34, res.witness));
}

TEST_CASE("transversal and weak independence numbers") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const Hypergraph h = families::complete_uniform_hypergraph(n, k);
      CHECK(solvers::transversal_number(h).value == n - k + 1);
      CHECK(solvers::weak_independence_number(h).value == k - 1);
    }
  const Hypergraph empty(4, {});
  CHECK(solvers::transversal_number(empty).value == 0);
  CHECK(solvers::weak_independence_number(empty).value == 4);
  CHECK(solvers::transversal_number(
            Hypergraph(6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}))
            .value == 2);
}

TEST_CASE("tau plus alpha_w equals the order") {
  families::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(3, 8);
    const int m = rng.uniform_int(1, 8);
    const Hypergraph h = families::random_uniform_hypergraph(
        n, 3, std::min<int>(m, static_cast<int>(families::binomial(n, 3))), rng);
    const auto tau = solvers::transversal_number(h);
    const auto alpha = solvers::weak_independence_number(h);
    CHECK(tau.value + alpha.value == n);
    CHECK(solvers::is_transversal(h, tau.witness));
    CHECK(solvers::is_weakly_independent(h, alpha.witness));
  }
}

TEST_CASE("edge cover numbers") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k)
      CHECK(solvers::edge_cover_number(families::complete_uniform_hypergraph(n, k)).value ==
            (n + k - 1) / k);

  CHECK(solvers::edge_cover_number(Hypergraph(3, {VertexSet::of({0, 1, 2})})).value == 1);

  // a cycle of three triples on six vertices: every pair of edges misses a
  // vertex, so all three are needed
  const Hypergraph ring(6, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4}),
                            VertexSet::of({4, 5, 0})});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK_FALSE(solvers::is_edge_cover(ring, {i, j}));
  CHECK(solvers::edge_cover_number(ring, SolverPath::reference).value == 3);
  CHECK(solvers::edge_cover_number(ring).value == 3);

  CHECK_THROWS_AS(solvers::edge_cover_number(Hypergraph(4, {VertexSet::of({0, 1, 2})})),
                  solvers::UncoverableError);
}

TEST_CASE("tc numbers") {
  // 2-uniform hypergraphs (graphs) always need the whole vertex set
  families::Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const int n = rng.uniform_int(2, 7);
    const int max_m = static_cast<int>(families::binomial(n, 2));
    const Hypergraph h =
        families::random_uniform_hypergraph(n, 2, rng.uniform_int(1, max_m), rng);
    CHECK(solvers::tc_number(h).value == n);
  }

  CHECK(solvers::tc_number(families::complete_uniform_hypergraph(5, 3)).value == 4);
  CHECK(solvers::tc_number(Hypergraph(3, {VertexSet::of({0, 1, 2})})).value == 2);
  CHECK(solvers::tc_number(Hypergraph(4, {})).value == 4);

  // degree-0 vertices are forced into the vertex part
  const Hypergraph iso(4, {VertexSet::of({0, 1, 2})});
  const auto res = solvers::tc_number(iso);
  CHECK(res.value == 3);
  CHECK(res.witness.contains(3));
  CHECK(solvers::is_tc_set(iso, res.witness, res.edge_witness));
}

TEST_CASE("tc upper bound by smallest edge size") {
  families::Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform_int(3, 7);
    const int k = rng.uniform_int(2, n);
    const int max_m = static_cast<int>(std::min<std::int64_t>(6, families::binomial(n, k)));
    const Hypergraph h =
        families::random_uniform_hypergraph(n, k, rng.uniform_int(1, max_m), rng);
    const auto res = solvers::tc_number(h);
    CHECK(res.value <= n - k + 2);
    CHECK(solvers::is_tc_set(h, res.witness, res.edge_witness));
  }
}

TEST_CASE("weak independence within a window") {
  const Hypergraph h(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})});
  CHECK(solvers::max_weakly_independent_within(h, VertexSet{}).value == 0);
  CHECK(solvers::max_weakly_independent_within(
            families::complete_uniform_hypergraph(5, 3), VertexSet::range(5))
            .value == 2);
  const auto res = solvers::max_weakly_independent_within(h, VertexSet::of({0, 1, 2, 3}));
  CHECK(res.value == 3);
  CHECK(res.witness.subset_of(VertexSet::of({0, 1, 2, 3})));
  CHECK(solvers::is_weakly_independent(h, res.witness));
}

TEST_CASE("threshold recognition") {
  CHECK(solvers::is_threshold(families::complete_graph(5)));
  CHECK(solvers::is_threshold(families::edgeless_graph(5)));
  CHECK(solvers::is_threshold(families::complete_bipartite(1, 4)));
  CHECK_FALSE(solvers::is_threshold(families::cycle_graph(4)));
  CHECK_FALSE(solvers::is_threshold(families::path_graph(4)));
  CHECK_FALSE(solvers::is_threshold(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  // triangle plus isolated vertex is fine
  CHECK(solvers::is_threshold(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("reference and pruned routes agree") {
  families::Rng rng(31);
  for (int t = 0; t < 120; ++t) {
    const int n = rng.uniform_int(1, 9);
    const Graph g = families::random_graph(n, 0.2 + 0.6 * rng.uniform01(), rng);
    for (int k = 1; k <= 3; ++k) {
      const auto ref = solvers::gamma_k(g, k, SolverPath::reference);
      const auto fast = solvers::gamma_k(g, k, SolverPath::pruned);
      CHECK(ref.value == fast.value);
      CHECK(ref.witness == fast.witness);
      CHECK(solvers::is_k_dominating(g, fast.witness, k));
    }
  }
  for (int t = 0; t < 120; ++t) {
    const int n = rng.uniform_int(3, 7);
    const int k = rng.uniform_int(2, 3 > n ? n : 3);
    const int max_m = static_cast<int>(std::min<std::int64_t>(8, families::binomial(n, k)));
    const Hypergraph h =
        families::random_uniform_hypergraph(n, k, rng.uniform_int(1, max_m), rng);

    const auto tau_r = solvers::transversal_number(h, SolverPath::reference);
    const auto tau_p = solvers::transversal_number(h, SolverPath::pruned);
    CHECK(tau_r.value == tau_p.value);
    CHECK(tau_r.witness == tau_p.witness);

    if (h.covered_vertices() == h.vertices()) {
      const auto rho_r = solvers::edge_cover_number(h, SolverPath::reference);
      const auto rho_p = solvers::edge_cover_number(h, SolverPath::pruned);
      CHECK(rho_r.value == rho_p.value);
      CHECK(rho_r.edge_witness == rho_p.edge_witness);
    }

    const auto tc_r = solvers::tc_number(h, SolverPath::reference);
    const auto tc_p = solvers::tc_number(h, SolverPath::pruned);
    CHECK(tc_r.value == tc_p.value);
    CHECK(tc_r.witness == tc_p.witness);
    CHECK(tc_r.edge_witness == tc_p.edge_witness);
    CHECK(solvers::is_tc_set(h, tc_p.witness, tc_p.edge_witness));

    const VertexSet window{rng.next() & h.vertices().bits()};
    const auto w_r = solvers::max_weakly_independent_within(h, window, SolverPath::reference);
    const auto w_p = solvers::max_weakly_independent_within(h, window, SolverPath::pruned);
    CHECK(w_r.value == w_p.value);
    CHECK(w_r.witness == w_p.witness);
  }
}

TEST_CASE("no smaller feasible set exists below the optimum") {
  families::Rng rng(37);
  for (int t = 0; t < 25; ++t) {
    const int n = rng.uniform_int(4, 9);
    const Graph g = families::random_graph(n, 0.3 + 0.4 * rng.uniform01(), rng);
    const int k = rng.uniform_int(1, 3);
    const auto res = solvers::gamma_k(g, k);
    bool smaller_exists = false;
    for_each_subset_of_count(n, res.value - 1, [&](VertexSet d) {
      if (solvers::is_k_dominating(g, d, k)) {
        smaller_exists = true;
        return false;
      }
      return true;
    });
    CHECK_FALSE(smaller_exists);
  }
}

TEST_CASE("every minimum witness on equality instances is sparse inside") {
  // K_{3,3} with k=3 attains gamma_3 = gamma + 1
  const Graph k33 = families::complete_bipartite(3, 3);
  CHECK(solvers::gamma_k(k33, 3).value == solvers::gamma(k33).value + 1);
  for (const VertexSet& d : solvers::enumerate_minimum_k_dominating(k33, 3)) {
    const Graph inside = induced_subgraph(k33, d).graph;
    CHECK(inside.max_degree() <= 1);
    CHECK(solvers::gamma(inside).value >= solvers::gamma_k(k33, 3).value - 1);
  }
}
