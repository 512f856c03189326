#include <doctest.h>

#include <stdexcept>

#include "kdom/families.hpp"
#include "kdom/graph.hpp"
#include "kdom/hypergraph.hpp"

using namespace kdom;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);  // parallel edges collapse
}

TEST_CASE("bipartition of small graphs") {
  const Graph c4 = families::cycle_graph(4);
  const auto split = is_bipartite(c4);
  REQUIRE(split.has_value());
  CHECK(split->class_a == VertexSet::of({0, 2}));
  CHECK(split->class_b == VertexSet::of({1, 3}));

  CHECK_FALSE(is_bipartite(families::complete_graph(3)).has_value());

  const auto k34 = is_bipartite(families::complete_bipartite(3, 4));
  REQUIRE(k34.has_value());
  CHECK(k34->class_a == VertexSet::range(3));
  CHECK(k34->class_b.count() == 4);
}

TEST_CASE("bipartition puts the lowest vertex of every component in class a") {
  // two disjoint edges
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const auto split = is_bipartite(g);
  REQUIRE(split.has_value());
  CHECK(split->class_a == VertexSet::of({0, 2}));
}

TEST_CASE("bipartition splits have no internal edges") {
  families::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Graph g = families::random_bipartite_graph(rng.uniform_int(1, 5),
                                                     rng.uniform_int(1, 5),
                                                     rng.uniform01(), rng);
    const auto split = is_bipartite(g);
    REQUIRE(split.has_value());
    for (auto [u, v] : g.edge_list()) {
      CHECK(split->class_a.contains(u) != split->class_a.contains(v));
    }
  }
}

TEST_CASE("connected components") {
  const auto none = connected_components(families::edgeless_graph(3));
  REQUIRE(none.size() == 3);
  CHECK(none[0] == VertexSet::single(0));
  CHECK(none[2] == VertexSet::single(2));

  CHECK(connected_components(families::cycle_graph(5)).size() == 1);

  const Graph mixed = Graph::from_edges(3, {{0, 1}});
  const auto comps = connected_components(mixed);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::single(2));
}

TEST_CASE("induced subgraphs") {
  const Graph k4 = families::complete_graph(4);
  const auto whole = induced_subgraph(k4, VertexSet::range(4));
  CHECK(whole.graph == k4);
  CHECK(whole.vertex_map == std::vector<int>{0, 1, 2, 3});

  const auto pair = induced_subgraph(k4, VertexSet::of({1, 3}));
  CHECK(pair.graph == families::complete_graph(2));
  CHECK(pair.vertex_map == std::vector<int>{1, 3});

  CHECK_THROWS_AS(induced_subgraph(k4, VertexSet::single(4)), std::invalid_argument);

  // one partite class of the smallest k=3 multi-star induces no edges
  const Graph s33 = families::build_Sk(families::SkShape(3, {3}));
  const auto split = is_bipartite(s33);
  REQUIRE(split.has_value());
  const VertexSet small_side =
      split->class_a.count() == 3 ? split->class_a : split->class_b;
  REQUIRE(small_side.count() == 3);
  CHECK(induced_subgraph(s33, small_side).graph == families::edgeless_graph(3));
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
  families::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = families::random_graph(8, 0.4, rng);
    const VertexSet s{rng.next() & VertexSet::range(8).bits()};
    const auto sub = induced_subgraph(g, s);
    int expected = 0;
    for (auto [u, v] : g.edge_list())
      if (s.contains(u) && s.contains(v)) ++expected;
    CHECK(sub.graph.edge_count() == expected);
  }
}

TEST_CASE("hypergraph construction and edge canonicalization") {
  CHECK_THROWS_AS(Hypergraph(3, {VertexSet::single(0)}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, {VertexSet::of({0, 2})}), std::invalid_argument);
  const Hypergraph h(4, {VertexSet::of({1, 2, 3}), VertexSet::of({0, 1}),
                         VertexSet::of({1, 2, 3})});
  CHECK(h.edge_count() == 2);  // duplicates collapse
  CHECK(h.edge(0) == VertexSet::of({0, 1}));
  CHECK(h.degree(1) == 2);
  CHECK(h.uniformity() == std::nullopt);
  CHECK(Hypergraph(3, {VertexSet::of({0, 1, 2})}).uniformity() == 3);
}

TEST_CASE("hypergraph connectivity") {
  CHECK(hypergraph_is_connected(families::complete_uniform_hypergraph(5, 3)));
  CHECK_FALSE(hypergraph_is_connected(
      Hypergraph(6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})})));
  CHECK(hypergraph_is_connected(
      Hypergraph(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})})));
  CHECK(hypergraph_is_connected(Hypergraph(1, {})));
  CHECK_FALSE(hypergraph_is_connected(Hypergraph(4, {VertexSet::of({0, 1, 2})})));
}

TEST_CASE("two-section graphs") {
  CHECK(two_section(Hypergraph(3, {VertexSet::of({0, 1, 2})})) ==
        families::complete_graph(3));
  CHECK(two_section(families::complete_uniform_hypergraph(4, 3)) ==
        families::complete_graph(4));

  const Graph glued =
      two_section(Hypergraph(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4})}));
  CHECK(glued == Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("incidence graphs") {
  const Graph star = incidence_graph(Hypergraph(3, {VertexSet::of({0, 1, 2})}));
  CHECK(star == families::complete_bipartite(3, 1));

  // the triangle, read as a 2-uniform hypergraph, has a 6-cycle incidence graph
  const Graph c6 = incidence_graph(families::complete_uniform_hypergraph(3, 2));
  CHECK(c6.order() == 6);
  CHECK(c6.min_degree() == 2);
  CHECK(c6.max_degree() == 2);
  CHECK(is_connected(c6));
  CHECK(is_bipartite(c6).has_value());
}

TEST_CASE("connectivity agrees between a hypergraph and its derived graphs") {
  families::Rng rng(3);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.uniform_int(3, 7);
    const int m = rng.uniform_int(1, 5);
    Hypergraph h = families::random_uniform_hypergraph(n, 3, std::min<int>(m, 5), rng);
    const bool direct = hypergraph_is_connected(h);
    CHECK(direct == is_connected(two_section(h)));
    CHECK(direct == is_connected(incidence_graph(h)));
  }
}

TEST_CASE("square restricted to a vertex set") {
  const Graph p3 = families::path_graph(3);
  CHECK(graph_square_induced(p3, VertexSet::of({0, 2})).graph ==
        families::complete_graph(2));
  CHECK(graph_square_induced(p3, VertexSet::single(1)).graph ==
        families::complete_graph(1));
  CHECK_THROWS_AS(graph_square_induced(p3, VertexSet::single(3)), std::invalid_argument);
}

TEST_CASE("square on the small side of a double star") {
  // S_3(3,3): the minimum 3-dominating set is the 4-vertex partite class
  // {center, twin, leaf1, leaf2}.  Center and twin sit at distance 2 from
  // everything, but the two leaves have disjoint neighborhoods, hence
  // distance 4: the square misses exactly that one pair.
  const Graph g = families::build_Sk(families::SkShape(3, {3, 3}));
  const VertexSet d = VertexSet::range(4);  // layout: c, twin, u1, u2
  const Graph sq = graph_square_induced(g, d).graph;
  CHECK(sq.edge_count() == 5);
  CHECK(sq.adjacent(0, 1));
  CHECK(sq.adjacent(0, 2));
  CHECK(sq.adjacent(0, 3));
  CHECK(sq.adjacent(1, 2));
  CHECK(sq.adjacent(1, 3));
  CHECK_FALSE(sq.adjacent(2, 3));
}

TEST_CASE("blowup by independent sets") {
  const Graph c6k2 = lexicographic_blowup(families::cycle_graph(6), 2);
  CHECK(c6k2.order() == 12);
  CHECK(c6k2.min_degree() == 4);
  CHECK(c6k2.max_degree() == 4);

  const Graph base = families::random_graph(7, 0.5, 99);
  CHECK(lexicographic_blowup(base, 1) == base);

  CHECK(lexicographic_blowup(families::complete_graph(2), 3) ==
        families::complete_bipartite(3, 3));

  CHECK_THROWS_AS(lexicographic_blowup(base, 0), std::invalid_argument);
}

TEST_CASE("blowups preserve bipartiteness") {
  families::Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const Graph g = families::random_bipartite_graph(rng.uniform_int(1, 4),
                                                     rng.uniform_int(1, 4),
                                                     rng.uniform01(), rng);
    const int factor = rng.uniform_int(1, 3);
    CHECK(is_bipartite(lexicographic_blowup(g, factor)).has_value());
  }
}
