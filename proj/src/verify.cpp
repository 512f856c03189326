#include "kdom/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kdom/families.hpp"
#include "kdom/io.hpp"
#include "kdom/recognition.hpp"
#include "kdom/satreduce.hpp"
#include "kdom/solvers.hpp"

namespace kdom::verify {

namespace {

using families::Rng;

std::string graph_blob(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  std::string s = out.str();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::string hypergraph_blob(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  std::string s = out.str();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Largest subset of `within` whose induced subgraph has min degree >= k.
VertexSet k_core(const Graph& g, int k, VertexSet within) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : within)
      if ((g.neighbors(v) & within).count() < k) {
        within.remove(v);
        changed = true;
      }
  }
  return within;
}

Graph random_graph_with_degree(Rng& rng, int n, int k) {
  while (true) {
    const double p = 0.15 + 0.7 * rng.uniform01();
    Graph g = families::random_graph(n, p, rng);
    if (g.max_degree() >= k) return g;
  }
}

Graph random_connected_bipartite(Rng& rng, int n) {
  while (true) {
    const int a = rng.uniform_int(1, n - 1);
    const double p = 0.25 + 0.55 * rng.uniform01();
    Graph g = families::random_bipartite_graph(a, n - a, p, rng);
    if (is_connected(g)) return g;
  }
}

families::BkSample random_bk_member_with_order(Rng& rng, int k, int lo, int hi) {
  while (true) {
    families::BkSamplerParams params;
    params.f_order = rng.uniform_int(k, k + 2);
    const int min_edges =
        (params.f_order - 1 + (k - 1) - 1) / (k - 1);  // connectivity floor
    const auto max_possible = families::binomial(params.f_order, k);
    const int max_edges = static_cast<int>(std::min<std::int64_t>(4, max_possible));
    if (min_edges > max_edges) continue;
    params.f_edges = rng.uniform_int(min_edges, max_edges);
    params.max_extra_twins = 2;
    params.max_attachments = 2;
    families::BkSample sample = families::random_connected_bipartite_Bk(k, params, rng);
    const int order = sample.member.graph.order();
    if (order >= lo && order <= hi) return sample;
  }
}

// All non-decreasing branch-size tuples of length r over {k, k+1, k+2}.
std::vector<std::vector<int>> grid_branch_sizes(int k, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), k);
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == k + 2) --i;
    if (i < 0) break;
    const int next = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < r; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport verify_bounds(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "bounds";
  const int trials = opts.trials > 0 ? opts.trials : 1000;
  const int n_max = opts.n_max > 0 ? opts.n_max : 14;
  Rng rng(opts.seed);

  bool bound_ok = true, witness_ok = true;
  int equality_instances = 0;

  const auto check_equality_witnesses = [&](const Graph& g, int k, int gk_value) {
    ++equality_instances;
    for (const VertexSet& d : solvers::enumerate_minimum_k_dominating(g, k)) {
      const Graph induced = induced_subgraph(g, d).graph;
      if (induced.max_degree() > k - 2 ||
          solvers::gamma(induced).value < gk_value - (k - 2)) {
        witness_ok = false;
        rep.note("counterexample: k=" + std::to_string(k) + " witness " + d.to_string() +
                 " graph " + graph_blob(g));
      }
    }
  };

  for (int t = 0; t < trials; ++t) {
    const int k = 2 + t % 3;
    const int n = rng.uniform_int(5, n_max);
    const Graph g = random_graph_with_degree(rng, n, k);
    const int gk = solvers::gamma_k(g, k).value;
    const int gamma = solvers::gamma(g).value;
    if (gk < gamma + k - 2) {
      bound_ok = false;
      rep.note("counterexample: k=" + std::to_string(k) + " graph " + graph_blob(g));
    }
    if (gk == gamma + k - 2 && n <= 14) check_equality_witnesses(g, k, gk);
  }

  // guaranteed equality instances so the witness lemmas are exercised
  for (int k = 2; k <= 4; ++k) {
    std::vector<std::vector<int>> shapes = {{k, k}, {k, k + 1}};
    if (k == 2) shapes.push_back({2, 2, 2});
    if (k == 3) shapes.push_back({3, 3, 3});
    for (const auto& sizes : shapes) {
      const Graph g = families::build_Sk(families::SkShape(k, sizes));
      if (g.order() > 14) continue;
      const int gk = solvers::gamma_k(g, k).value;
      const int gamma = solvers::gamma(g).value;
      if (gk != gamma + k - 2) {
        bound_ok = false;
        rep.note("counterexample: multi-star misses equality, k=" + std::to_string(k));
        continue;
      }
      check_equality_witnesses(g, k, gk);
    }
  }

  rep.note("trials=" + std::to_string(trials) +
           " equality_instances=" + std::to_string(equality_instances));
  rep.property("lower-bound", bound_ok);
  rep.property("equality-witness-structure", witness_ok && equality_instances > 0,
               "instances=" + std::to_string(equality_instances));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_recognition_oracle(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "recognition-oracle";
  const int trials = opts.trials > 0 ? opts.trials : 2000;
  const int n_max = opts.n_max > 0 ? opts.n_max : 13;
  Rng rng(opts.seed);

  bool agree_ok = true, threshold_ok = true;
  int yes_count = 0;

  for (int t = 0; t < trials; ++t) {
    Graph g;
    if (t % 2 == 0) {
      g = random_connected_bipartite(rng, rng.uniform_int(6, n_max));
    } else {
      g = random_bk_member_with_order(rng, 3, 6, n_max).member.graph;
    }
    const auto rep3 = recognition::is_gamma_gamma_k_graph_bipartite(g, 3);
    const bool oracle =
        g.max_degree() >= 3 &&
        solvers::gamma_k(g, 3, solvers::SolverPath::reference).value ==
            solvers::gamma(g, solvers::SolverPath::reference).value + 1;
    if (rep3.yes != oracle) {
      agree_ok = false;
      rep.note("counterexample: recognizer=" + std::string(rep3.yes ? "yes" : "no") +
               " oracle=" + std::string(oracle ? "yes" : "no") + " graph " + graph_blob(g));
    }
    if (rep3.yes) {
      ++yes_count;
      const Graph sq = graph_square_induced(g, *rep3.d_class).graph;
      if (!solvers::is_threshold(sq)) {
        threshold_ok = false;
        rep.note("counterexample: non-threshold square on d, graph " + graph_blob(g));
      }
    }
  }
  rep.note("trials=" + std::to_string(trials) + " yes_instances=" + std::to_string(yes_count));
  rep.property("oracle-agreement", agree_ok && yes_count > 0,
               "yes=" + std::to_string(yes_count));
  rep.property("threshold-on-d", threshold_ok);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_simplify_equiv(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "simplify-equiv";
  const int trials = opts.trials > 0 ? opts.trials : 300;
  Rng rng(opts.seed);

  bool ok = true;
  int equality_instances = 0;
  for (int t = 0; t < trials; ++t) {
    const Graph g = random_bk_member_with_order(rng, 3, 6, 18).member.graph;
    Graph simplified;
    try {
      simplified = recognition::gamma_k_simplified(g, 3);
    } catch (const std::invalid_argument& e) {
      ok = false;
      rep.note("counterexample: member rejected by extraction, graph " + graph_blob(g));
      continue;
    }
    const bool lhs = solvers::gamma_k(g, 3).value == solvers::gamma(g).value + 1;
    const bool rhs =
        solvers::gamma_k(simplified, 3).value == solvers::gamma(simplified).value + 1;
    if (lhs) ++equality_instances;
    if (lhs != rhs) {
      ok = false;
      rep.note("counterexample: graph " + graph_blob(g));
    }
  }
  rep.note("trials=" + std::to_string(trials) +
           " equality_instances=" + std::to_string(equality_instances));
  rep.property("equivalence", ok);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_tc_extremal(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "tc-extremal";
  const int trials = opts.trials > 0 ? opts.trials : 500;
  const int n_max = opts.n_max > 0 ? opts.n_max : 8;
  Rng rng(opts.seed);

  const auto members = recognition::enumerate_Hk(3);
  rep.note("obstruction_family_size=" + std::to_string(members.size()));

  bool tc_ok = true, free_ok = true, star_ok = true;
  int extremal_count = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform_int(3, n_max);
    const int max_m = static_cast<int>(std::min<std::int64_t>(12, families::binomial(n, 3)));
    const int m = rng.uniform_int(1, max_m);
    const Hypergraph f = families::random_uniform_hypergraph(n, 3, m, rng);

    const bool condition = recognition::tc_is_extremal(f, 3).extremal;
    const bool exact = solvers::tc_number(f).value == n - 1;
    const bool hk_free = !recognition::find_induced_member(f, members).has_value();
    const bool star = recognition::satisfies_star_property(f).holds;

    if (condition) ++extremal_count;
    if (condition != exact) {
      tc_ok = false;
      rep.note("counterexample: window condition vs exact tc, " + hypergraph_blob(f));
    }
    if (condition != hk_free) {
      free_ok = false;
      rep.note("counterexample: window condition vs freeness, " + hypergraph_blob(f));
    }
    if (condition != star) {
      star_ok = false;
      rep.note("counterexample: window condition vs adjacent pairs, " + hypergraph_blob(f));
    }
  }
  rep.note("trials=" + std::to_string(trials) +
           " extremal_instances=" + std::to_string(extremal_count));
  rep.property("tc-equivalence", tc_ok && extremal_count > 0,
               "extremal=" + std::to_string(extremal_count));
  rep.property("freeness-equivalence", free_ok);
  rep.property("adjacent-pairs-equivalence", star_ok);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_perfect3(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "perfect3";

  // round trips over the family grid
  bool round_ok = true;
  for (int k = 2; k <= 4; ++k)
    for (int r = 1; r <= 3; ++r)
      for (const auto& sizes : grid_branch_sizes(k, r)) {
        const families::SkShape shape(k, sizes);
        const Graph g = families::build_Sk(shape);
        const auto res = recognition::is_gamma_gamma3_perfect(g);
        if (k == 3) {
          if (!res || res->branch_sizes != sizes) {
            round_ok = false;
            rep.note("counterexample: round trip failed for r=" + std::to_string(r));
          }
        } else if (res) {
          round_ok = false;
          rep.note("counterexample: k=" + std::to_string(k) +
                   " multi-star accepted by the k=3 matcher");
        }
      }
  rep.property("round-trip", round_ok);

  // hereditary property: every connected induced subgraph with min degree 3
  bool hered_ok = true;
  long long qualifying = 0;
  const std::vector<std::vector<int>> hered_shapes = {{3}, {5}, {3, 3}, {3, 4}, {4, 4}};
  for (const auto& sizes : hered_shapes) {
    const Graph g = families::build_Sk(families::SkShape(3, sizes));
    const int n = g.order();
    for (SetWord w = 1; w < (SetWord{1} << n); ++w) {
      const VertexSet sub{w};
      if (sub.count() < 4) continue;
      const Graph h = induced_subgraph(g, sub).graph;
      if (h.min_degree() < 3 || !is_connected(h)) continue;
      ++qualifying;
      if (solvers::gamma_k(h, 3).value != solvers::gamma(h).value + 1) {
        hered_ok = false;
        rep.note("counterexample: induced subgraph " + sub.to_string() + " of " +
                 graph_blob(g));
      }
    }
  }
  rep.note("hereditary_subgraphs_checked=" + std::to_string(qualifying));
  rep.property("hereditary", hered_ok && qualifying > 0);

  // fixtures for k = 4
  bool fixtures_ok = true;
  {
    const Graph c6k2 = lexicographic_blowup(families::cycle_graph(6), 2);
    const int g4 = solvers::gamma_k(c6k2, 4).value;
    const int g1 = solvers::gamma(c6k2).value;
    if (g4 != 6 || g4 != g1 + 2) {
      fixtures_ok = false;
      rep.note("counterexample: blown-up 6-cycle has gamma_4=" + std::to_string(g4) +
               " gamma=" + std::to_string(g1));
    }
    if (recognition::is_gamma_gamma3_perfect(c6k2)) {
      fixtures_ok = false;
      rep.note("counterexample: blown-up 6-cycle matched the k=3 multi-star pattern");
    }
    // 4-regular: removing any vertex kills every min-degree-4 subgraph
    for (int v = 0; v < c6k2.order(); ++v)
      if (k_core(c6k2, 4, c6k2.vertices() - VertexSet::single(v)).any()) {
        fixtures_ok = false;
        rep.note("counterexample: proper 4-core survives after removing " +
                 std::to_string(v));
      }
    // no k=4 multi-star of order 12 shares its degree multiset
    std::vector<int> degrees;
    for (int v = 0; v < c6k2.order(); ++v) degrees.push_back(c6k2.degree(v));
    std::sort(degrees.begin(), degrees.end());
    for (int r = 1; r <= 6; ++r)
      for (const auto& sizes : grid_branch_sizes(4, r)) {
        families::SkShape shape(4, sizes);
        if (shape.order() != c6k2.order()) continue;
        const Graph s = families::build_Sk(shape);
        std::vector<int> sd;
        for (int v = 0; v < s.order(); ++v) sd.push_back(s.degree(v));
        std::sort(sd.begin(), sd.end());
        if (sd == degrees) {
          fixtures_ok = false;
          rep.note("counterexample: k=4 multi-star with matching degree multiset");
        }
      }
  }
  {
    const Graph g4 = families::double_incidence_graph(families::build_Fk_example(4), 4);
    if (g4.max_degree() < 4 ||
        solvers::gamma_k(g4, 4).value != solvers::gamma(g4).value + 2) {
      fixtures_ok = false;
      rep.note("counterexample: the even-k example graph misses the equality");
    }
  }
  rep.property("fixtures", fixtures_ok);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_sat(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "sat";
  const int trials = opts.trials > 0 ? opts.trials : 200;
  Rng rng(opts.seed);

  // Exhaustive sweep, s <= 5.  Reducibility only depends on which variable
  // triples appear (polarities never matter), so enumerating families of at
  // most 6 distinct variable triples covers every formula with at most 6
  // clauses.  A clause avoiding a triple needs 3 variables outside it, which
  // forces s >= 6; the sweep confirms that no reducible instance exists.
  bool exhaustive_ok = true;
  long long families_checked = 0;
  for (int s = 3; s <= 5; ++s) {
    std::vector<VertexSet> triples;
    for_each_subset_of_count(s, 3, [&](VertexSet t) {
      triples.push_back(t);
      return true;
    });
    const int tcount = static_cast<int>(triples.size());
    for (SetWord pick = 0; pick < (SetWord{1} << tcount); ++pick) {
      if (VertexSet{pick}.count() > 6) continue;
      ++families_checked;
      satreduce::CnfFormula f;
      f.num_vars = s;
      for (int i : VertexSet{pick}) {
        const auto vars = triples[static_cast<std::size_t>(i)].elements();
        f.clauses.push_back({satreduce::Literal{vars[0] + 1, true},
                             satreduce::Literal{vars[1] + 1, true},
                             satreduce::Literal{vars[2] + 1, true}});
      }
      if (satreduce::check_reducibility(f)) {
        exhaustive_ok = false;
        rep.note("counterexample: reducible instance with s=" + std::to_string(s));
      }
    }
  }
  rep.note("small_families_checked=" + std::to_string(families_checked));

  // trivial instances (s <= 2 admits no 3-variable clause, so only the empty
  // formula exists and it is vacuously reducible)
  for (int s = 0; s <= 2; ++s) {
    satreduce::CnfFormula f;
    f.num_vars = s;
    if (!satreduce::check_reducibility(f)) {
      exhaustive_ok = false;
      rep.note("counterexample: empty formula with s=" + std::to_string(s) +
               " not reducible");
      continue;
    }
    for (int k = 2; k <= 3; ++k) {
      const auto cert = satreduce::certify_biconditional(f, k);
      if (!cert.biconditional_holds || !cert.gamma_k_matches ||
          cert.order != 3 * s + k + 1) {
        exhaustive_ok = false;
        rep.note("counterexample: trivial instance s=" + std::to_string(s) +
                 " k=" + std::to_string(k));
      }
    }
  }
  rep.property("exhaustive-small", exhaustive_ok);

  // Random reducible instances with s = 6.  Avoiding a triple with s = 6
  // forces the clause's variables to be exactly the complementary triple, so
  // a reducible instance must use all 20 variable triples; we add a few
  // extra random clauses on top.
  bool random_ok = true;
  int sat_count = 0, unsat_count = 0;
  std::vector<VertexSet> base_triples;
  for_each_subset_of_count(6, 3, [&](VertexSet t) {
    base_triples.push_back(t);
    return true;
  });
  for (int t = 0; t < trials; ++t) {
    satreduce::CnfFormula f;
    f.num_vars = 6;
    const int extra = rng.uniform_int(0, 4);
    std::vector<VertexSet> chosen = base_triples;
    for (int e = 0; e < extra; ++e)
      chosen.push_back(base_triples[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(base_triples.size()) - 1))]);
    for (const VertexSet& vars : chosen) {
      satreduce::Clause c;
      int slot = 0;
      for (int v : vars) c[static_cast<std::size_t>(slot++)] =
          satreduce::Literal{v + 1, rng.bernoulli(0.5)};
      f.clauses.push_back(c);
    }
    if (!satreduce::check_reducibility(f)) {
      random_ok = false;
      rep.note("counterexample: constructed instance not reducible");
      continue;
    }
    const int l = f.num_clauses();
    for (int k = 2; k <= 3; ++k) {
      const auto cert = satreduce::certify_biconditional(f, k);
      if (cert.order != 3 * 6 + l + k + 1 || !cert.gamma_k_matches ||
          !cert.biconditional_holds ||
          (cert.satisfiable && !cert.assignment_set_checked)) {
        random_ok = false;
        rep.note("counterexample: s=6 instance, k=" + std::to_string(k) + ", cnf " +
                 satreduce::to_dimacs(f));
      }
      if (k == 2) (cert.satisfiable ? sat_count : unsat_count)++;
    }
  }
  rep.note("random_trials=" + std::to_string(trials) + " sat=" + std::to_string(sat_count) +
           " unsat=" + std::to_string(unsat_count));
  rep.property("random-s6", random_ok && sat_count > 0 && unsat_count > 0,
               "sat=" + std::to_string(sat_count) + " unsat=" + std::to_string(unsat_count));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport verify_hk(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "hk";
  const int trials = opts.trials > 0 ? opts.trials : 200;
  Rng rng(opts.seed);

  const auto members = recognition::enumerate_Hk(3);
  rep.note("members=" + std::to_string(members.size()));

  bool members_ok = !members.empty();
  std::vector<std::pair<int, std::vector<SetWord>>> canons;
  for (const Hypergraph& h : members) {
    const auto rho = solvers::edge_cover_number(h);
    const auto alpha = solvers::weak_independence_number(h);
    if (h.order() > 6 || h.covered_vertices() != h.vertices() || rho.value > 2 ||
        alpha.value < rho.value + 2) {
      members_ok = false;
      rep.note("counterexample: member violates its defining property, " +
               hypergraph_blob(h));
    }
    canons.emplace_back(h.order(), recognition::hypergraph_canonical_form(h));
  }
  std::sort(canons.begin(), canons.end());
  if (std::adjacent_find(canons.begin(), canons.end()) != canons.end()) {
    members_ok = false;
    rep.note("counterexample: two members are isomorphic");
  }
  // the pair of disjoint edges is the classic member
  {
    const Hypergraph disjoint(6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})});
    const auto canon = recognition::hypergraph_canonical_form(disjoint);
    if (!std::binary_search(canons.begin(), canons.end(),
                            std::make_pair(6, canon))) {
      members_ok = false;
      rep.note("counterexample: two disjoint edges missing from the family");
    }
  }
  rep.property("member-properties", members_ok);

  bool equiv_ok = true;
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform_int(4, 8);
    const int max_m = static_cast<int>(std::min<std::int64_t>(10, families::binomial(n, 3)));
    const int m = rng.uniform_int(1, max_m);
    const Hypergraph f = families::random_uniform_hypergraph(n, 3, m, rng);
    const bool free = !recognition::find_induced_member(f, members).has_value();
    const bool extremal = recognition::tc_is_extremal(f, 3).extremal;
    if (free != extremal) {
      equiv_ok = false;
      rep.note("counterexample: freeness vs window condition, " + hypergraph_blob(f));
    }
  }
  rep.property("freeness-equivalence", equiv_ok);
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "bounds") return verify_bounds(opts);
  if (name == "recognition-oracle") return verify_recognition_oracle(opts);
  if (name == "simplify-equiv") return verify_simplify_equiv(opts);
  if (name == "tc-extremal") return verify_tc_extremal(opts);
  if (name == "perfect3") return verify_perfect3(opts);
  if (name == "sat") return verify_sat(opts);
  if (name == "hk") return verify_hk(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"bounds", "recognition-oracle", "simplify-equiv", "tc-extremal",
          "perfect3",  "sat", "hk"};
}

}  // namespace kdom::verify
