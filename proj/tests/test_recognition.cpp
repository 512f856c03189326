#include <doctest.h>

#include <stdexcept>

#include "kdom/families.hpp"
#include "kdom/recognition.hpp"
#include "kdom/solvers.hpp"

using namespace kdom;

namespace {

// Two complete bipartite K_{2,3} blocks joined by a single edge between two
// degree-2 vertices, keeping the maximum degree at three.
Graph two_block_bridge() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) edges.emplace_back(a, b);
  for (int a = 5; a < 7; ++a)
    for (int b = 7; b < 10; ++b) edges.emplace_back(a, b);
  edges.emplace_back(2, 7);
  return Graph(10, edges);
}

}  // namespace

TEST_CASE("underlying hypergraph extraction round trips") {
  const Hypergraph f = families::complete_uniform_hypergraph(4, 3);
  const Graph g = families::double_incidence_graph(f, 3);
  const auto ex = recognition::extract_underlying(g, VertexSet::range(4), 3);
  REQUIRE(ex.ok);
  CHECK(*ex.underlying == f);
  CHECK(ex.x_vertices == (g.vertices() - VertexSet::range(4)));
  CHECK(ex.y_vertices.empty());

  families::Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    families::BkSamplerParams params;
    params.f_order = rng.uniform_int(3, 5);
    params.f_edges = rng.uniform_int(2, 4);
    const auto sample = families::random_connected_bipartite_Bk(3, params, rng);
    const auto rt =
        recognition::extract_underlying(sample.member.graph, sample.member.d, 3);
    REQUIRE(rt.ok);
    CHECK(*rt.underlying == sample.recipe.f);
  }
}

TEST_CASE("extraction on a complete bipartite graph") {
  const Graph k34 = families::complete_bipartite(3, 4);
  const auto ex = recognition::extract_underlying(k34, VertexSet::range(3), 3);
  REQUIRE(ex.ok);
  CHECK(ex.underlying->edge_count() == 1);
  CHECK(ex.underlying->edge(0) == VertexSet::range(3));
  CHECK(ex.x_vertices.count() == 4);
}

TEST_CASE("extraction failure codes") {
  const Graph k34 = families::complete_bipartite(3, 4);
  // big side as d: the three left vertices all see a 4-set that yields no edge
  CHECK(recognition::extract_underlying(k34, k34.vertices() - VertexSet::range(3), 3)
            .code == "missing-edge-for-attachment");
  const Graph c6 = families::cycle_graph(6);
  CHECK(recognition::extract_underlying(c6, VertexSet::of({0, 2, 4}), 3).code ==
        "outside-degree-below-k");
  const Graph k4 = families::complete_graph(4);
  CHECK_FALSE(recognition::extract_underlying(k4, VertexSet::of({0, 1}), 3).ok);
}

TEST_CASE("class membership") {
  const auto yes = recognition::membership_Bk(
      families::build_Sk(families::SkShape(3, {3, 3, 4})), 3);
  CHECK(yes.yes);
  REQUIRE(yes.underlying.has_value());
  CHECK(yes.underlying->edge_count() == 3);
  // the extracted edges pairwise share the center/twin pair
  VertexSet common = yes.underlying->edge(0);
  for (int i = 1; i < 3; ++i) common &= yes.underlying->edge(i);
  CHECK(common.count() == 2);

  CHECK_FALSE(recognition::membership_Bk(families::cycle_graph(6), 3).yes);
  CHECK(recognition::membership_Bk(families::complete_bipartite(3, 3), 3).yes);
  CHECK_FALSE(recognition::membership_Bk(families::complete_graph(4), 3).yes);

  // random members are recognized
  families::Rng rng(59);
  for (int t = 0; t < 30; ++t) {
    const auto sample = families::random_connected_bipartite_Bk(3, {}, rng.next());
    CHECK(recognition::membership_Bk(sample.member.graph, 3).yes);
  }
}

TEST_CASE("simplified members") {
  CHECK(recognition::gamma_k_simplified(families::complete_bipartite(3, 5), 3) ==
        families::complete_bipartite(3, 2));
  CHECK_THROWS_AS(recognition::gamma_k_simplified(families::cycle_graph(6), 3),
                  std::invalid_argument);

  families::Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    const auto sample = families::random_connected_bipartite_Bk(3, {}, rng.next());
    CHECK(recognition::gamma_k_simplified(sample.member.graph, 3) ==
          families::double_incidence_graph(sample.recipe.f, 3));
  }
}

TEST_CASE("window condition for the covering bound") {
  for (int n = 3; n <= 6; ++n)
    CHECK(recognition::tc_is_extremal(families::complete_uniform_hypergraph(n, 3), 3)
              .extremal);

  const Hypergraph disjoint(6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})});
  const auto bad = recognition::tc_is_extremal(disjoint, 3);
  CHECK_FALSE(bad.extremal);
  CHECK(bad.edge_indices.size() == 2);
  CHECK(bad.independent_set.count() > 3);

  const Hypergraph f4 = families::build_Fk_example(4);
  CHECK(recognition::tc_is_extremal(f4, 4).extremal);
  CHECK(solvers::tc_number(f4).value == f4.order() - 4 + 2);

  CHECK_THROWS_AS(recognition::tc_is_extremal(
                      Hypergraph(4, {VertexSet::of({0, 1})}), 3),
                  std::invalid_argument);
}

TEST_CASE("adjacent-pairs property") {
  CHECK(recognition::satisfies_star_property(families::complete_uniform_hypergraph(4, 3))
            .holds);
  const Hypergraph sharing_one(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})});
  const auto res = recognition::satisfies_star_property(sharing_one);
  CHECK_FALSE(res.holds);
  CHECK(res.violating_quadruple == VertexSet::of({0, 1, 3, 4}));
}

TEST_CASE("obstruction family for k=3") {
  CHECK_THROWS_AS(recognition::enumerate_Hk(4), std::invalid_argument);
  const auto members = recognition::enumerate_Hk(3);
  CHECK(!members.empty());
  for (const Hypergraph& h : members) {
    CHECK(h.order() <= 6);
    CHECK(h.covered_vertices() == h.vertices());
    const int rho = solvers::edge_cover_number(h).value;
    CHECK(rho <= 2);
    CHECK(solvers::weak_independence_number(h).value >= rho + 2);
  }
  // the disjoint pair of edges belongs to the family
  const Hypergraph disjoint(6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})});
  bool found = false;
  const auto canon = recognition::hypergraph_canonical_form(disjoint);
  for (const Hypergraph& h : members)
    if (h.order() == 6 && recognition::hypergraph_canonical_form(h) == canon) found = true;
  CHECK(found);
  // and it is detected as an induced member of a larger hypergraph
  const Hypergraph bigger(7, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5}),
                              VertexSet::of({4, 5, 6})});
  CHECK(recognition::find_induced_member(bigger, members).has_value());
  CHECK_FALSE(recognition::find_induced_member(
                  families::complete_uniform_hypergraph(6, 3), members)
                  .has_value());
}

TEST_CASE("recognizer on fixed instances") {
  CHECK(recognition::is_gamma_gamma_k_graph_bipartite(
            families::build_Sk(families::SkShape(3, {3, 3, 4})), 3)
            .yes);
  CHECK(recognition::is_gamma_gamma_k_graph_bipartite(
            families::complete_bipartite(3, 3), 3)
            .yes);

  // two edges sharing a single vertex violate the window condition
  const Hypergraph sharing_one(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})});
  const Graph g = families::double_incidence_graph(sharing_one, 3);
  const auto rep = recognition::is_gamma_gamma_k_graph_bipartite(g, 3);
  CHECK_FALSE(rep.yes);
  CHECK(rep.reason_code == "tc-not-extremal");

  // brute-force confirmation of the verdicts above
  CHECK(solvers::gamma_k(g, 3).value != solvers::gamma(g).value + 1);
}

TEST_CASE("recognizer handles disconnected inputs and the k=2 boundary") {
  const Graph member = families::build_Sk(families::SkShape(3, {3, 3}));
  // adding isolated vertices keeps the verdict
  std::vector<std::pair<int, int>> edges = member.edge_list();
  const Graph padded(member.order() + 2, edges);
  CHECK(recognition::is_gamma_gamma_k_graph_bipartite(padded, 3).yes);

  // a second nontrivial component flips it
  edges.emplace_back(member.order(), member.order() + 1);
  const Graph doubled(member.order() + 2, edges);
  const auto rep = recognition::is_gamma_gamma_k_graph_bipartite(doubled, 3);
  CHECK_FALSE(rep.yes);
  CHECK(rep.reason_code == "multiple-nontrivial-components");

  CHECK(recognition::is_gamma_gamma_k_graph_bipartite(families::edgeless_graph(4), 3)
            .reason_code == "edgeless");

  const auto k2 = recognition::is_gamma_gamma_k_graph_bipartite(member, 2);
  CHECK_FALSE(k2.yes);
  CHECK(k2.reason_code == "unsupported-k");
}

TEST_CASE("recognizer agrees with brute force on small graphs") {
  families::Rng rng(67);
  for (int t = 0; t < 150; ++t) {
    Graph g;
    if (t % 2 == 0) {
      const int n = rng.uniform_int(6, 10);
      const int a = rng.uniform_int(1, n - 1);
      g = families::random_bipartite_graph(a, n - a, 0.3 + 0.5 * rng.uniform01(), rng);
      if (!is_connected(g)) continue;
    } else {
      const auto sample = families::random_connected_bipartite_Bk(3, {}, rng.next());
      if (sample.member.graph.order() > 12) continue;
      g = sample.member.graph;
    }
    const bool oracle =
        g.max_degree() >= 3 &&
        solvers::gamma_k(g, 3, solvers::SolverPath::reference).value ==
            solvers::gamma(g, solvers::SolverPath::reference).value + 1;
    CHECK(recognition::is_gamma_gamma_k_graph_bipartite(g, 3).yes == oracle);
  }
}

TEST_CASE("the two-block bridge fixture") {
  const Graph h = two_block_bridge();
  CHECK(h.max_degree() == 3);
  CHECK(is_bipartite(h).has_value());
  CHECK(solvers::gamma(h).value == 4);
  CHECK(solvers::gamma_k(h, 2).value == 4);
  const auto rep = recognition::is_gamma_gamma_k_graph_bipartite(h, 2);
  CHECK_FALSE(rep.yes);
  CHECK(rep.reason_code == "unsupported-k");
}

TEST_CASE("multi-star pattern matching") {
  const auto round = recognition::is_gamma_gamma3_perfect(
      families::build_Sk(families::SkShape(3, {3, 4})));
  REQUIRE(round.has_value());
  CHECK(round->k == 3);
  CHECK(round->branch_sizes == std::vector<int>{3, 4});

  const auto k33 = recognition::is_gamma_gamma3_perfect(families::complete_bipartite(3, 3));
  REQUIRE(k33.has_value());
  CHECK(k33->branch_sizes == std::vector<int>{3});

  CHECK_FALSE(recognition::is_gamma_gamma3_perfect(
                  lexicographic_blowup(families::cycle_graph(6), 2))
                  .has_value());
  CHECK_FALSE(recognition::is_gamma_gamma3_perfect(families::complete_bipartite(2, 3))
                  .has_value());
  CHECK_FALSE(recognition::is_gamma_gamma3_perfect(
                  families::build_Sk(families::SkShape(4, {4, 4})))
                  .has_value());
  // unsorted input sizes come back sorted
  const auto sorted = recognition::is_gamma_gamma3_perfect(
      families::build_Sk(families::SkShape(3, {5, 3, 4})));
  REQUIRE(sorted.has_value());
  CHECK(sorted->branch_sizes == std::vector<int>{3, 4, 5});
}

TEST_CASE("report serialization carries the trail") {
  const auto rep = recognition::is_gamma_gamma_k_graph_bipartite(
      families::complete_bipartite(3, 3), 3);
  const std::string text = rep.to_text();
  CHECK(text.find("verdict: yes") != std::string::npos);
  CHECK(text.find("check ") != std::string::npos);
  const std::string kv = rep.to_kv_dump();
  CHECK(kv.find("verdict=yes") != std::string::npos);
  CHECK(kv.find("underlying_order=") != std::string::npos);
}
