#include "kdom/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kdom/solvers.hpp"

namespace kdom::recognition {

std::string RecognitionReport::to_text() const {
  std::ostringstream out;
  out << "verdict: " << (yes ? "yes" : "no") << '\n';
  out << "reason: " << reason_code;
  if (!reason_message.empty()) out << " (" << reason_message << ")";
  out << '\n';
  if (d_class) out << "d_class: " << d_class->to_string() << '\n';
  if (underlying) {
    out << "underlying: order " << underlying->order() << ", edges";
    for (const VertexSet& e : underlying->edges()) out << ' ' << e.to_string();
    out << '\n';
  }
  for (const CheckEntry& c : checks) {
    out << "check " << c.name << ": " << (c.passed ? "pass" : "fail");
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << '\n';
  }
  return out.str();
}

std::string RecognitionReport::to_kv_dump() const {
  std::ostringstream out;
  out << "verdict=" << (yes ? "yes" : "no") << '\n';
  out << "reason=" << reason_code << '\n';
  if (d_class) out << "d_class=" << d_class->to_string() << '\n';
  if (underlying) {
    out << "underlying_order=" << underlying->order() << '\n';
    out << "underlying_edges=";
    for (int i = 0; i < underlying->edge_count(); ++i) {
      if (i) out << ';';
      out << underlying->edge(i).to_string();
    }
    out << '\n';
  }
  for (const CheckEntry& c : checks)
    out << "check." << c.name << '=' << (c.passed ? "pass" : "fail") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Underlying hypergraph extraction.
// ---------------------------------------------------------------------------

namespace {

ExtractResult extract_fail(std::string code, std::string detail) {
  ExtractResult r;
  r.ok = false;
  r.code = std::move(code);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

ExtractResult extract_underlying(const Graph& g, VertexSet d, int k) {
  if (k < 2) throw std::invalid_argument("extract_underlying: k must be at least 2");
  if (!d.subset_of(g.vertices()))
    throw std::invalid_argument("extract_underlying: d out of range");
  if (d.empty()) return extract_fail("empty-d", "the candidate class has no vertices");
  const VertexSet outside = g.vertices() - d;
  for (int v : d)
    if (g.neighbors(v).intersects(d))
      return extract_fail("d-not-independent", "edge inside d at vertex " + std::to_string(v));
  for (int v : outside)
    if (g.neighbors(v).intersects(outside))
      return extract_fail("complement-not-independent",
                          "edge outside d at vertex " + std::to_string(v));

  // group outside vertices by their neighborhood (a subset of d)
  std::map<VertexSet, std::vector<int>> groups;
  for (int v : outside) groups[g.neighbors(v)].push_back(v);

  std::set<VertexSet> edge_set;
  ExtractResult r;
  for (const auto& [nb, members] : groups)
    if (nb.count() == k && members.size() >= 2) {
      edge_set.insert(nb);
      for (int v : members) r.x_vertices.add(v);
    }

  // remaining vertices must see a complete collection of extracted edges
  for (const auto& [nb, members] : groups) {
    if (nb.count() == k && members.size() >= 2) continue;
    if (nb.count() < k)
      return extract_fail("outside-degree-below-k",
                          "vertex " + std::to_string(members.front()) + " has only " +
                              std::to_string(nb.count()) + " neighbors");
    const std::vector<int> verts = nb.elements();
    bool complete = true;
    VertexSet missing;
    for_each_subset_of_count(static_cast<int>(verts.size()), k, [&](VertexSet idx) {
      VertexSet subset;
      for (int i : idx) subset.add(verts[static_cast<std::size_t>(i)]);
      if (edge_set.find(subset) == edge_set.end()) {
        complete = false;
        missing = subset;
        return false;
      }
      return true;
    });
    if (!complete)
      return extract_fail("missing-edge-for-attachment",
                          "vertex " + std::to_string(members.front()) +
                              " needs the edge " + missing.to_string());
    for (int v : members) r.y_vertices.add(v);
  }

  // compress d to 0..|d|-1, order preserving
  r.d_vertices = d.elements();
  std::vector<int> compact(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < r.d_vertices.size(); ++i)
    compact[static_cast<std::size_t>(r.d_vertices[i])] = static_cast<int>(i);
  std::vector<VertexSet> edges;
  for (const VertexSet& e : edge_set) {
    VertexSet packed;
    for (int v : e) packed.add(compact[static_cast<std::size_t>(v)]);
    edges.push_back(packed);
  }
  Hypergraph f(static_cast<int>(r.d_vertices.size()), std::move(edges));

  if (!hypergraph_is_connected(f))
    return extract_fail("underlying-disconnected",
                        "extracted hypergraph is not connected");
  for (int v = 0; v < f.order(); ++v)
    if (f.degree(v) == 0)
      return extract_fail("uncovered-d-vertex",
                          "vertex " + std::to_string(r.d_vertices[static_cast<std::size_t>(v)]) +
                              " lies in no extracted edge");

  r.ok = true;
  r.code = "ok";
  r.underlying = std::move(f);
  return r;
}

// ---------------------------------------------------------------------------
// Class membership.
// ---------------------------------------------------------------------------

RecognitionReport membership_Bk(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("membership_Bk: k must be at least 2");
  RecognitionReport rep;
  if (!is_connected(g)) {
    rep.reason_code = "not-connected";
    rep.reason_message = "members of the class are connected";
    rep.checks.push_back({"connected", false, ""});
    return rep;
  }
  rep.checks.push_back({"connected", true, ""});
  const auto split = is_bipartite(g);
  if (!split) {
    rep.reason_code = "not-bipartite";
    rep.reason_message = "graph has an odd cycle";
    rep.checks.push_back({"bipartite", false, ""});
    return rep;
  }
  rep.checks.push_back({"bipartite", true, ""});
  const VertexSet classes[2] = {split->class_a, split->class_b};
  const char* names[2] = {"extract-class-a", "extract-class-b"};
  for (int side = 0; side < 2; ++side) {
    ExtractResult ex = extract_underlying(g, classes[side], k);
    rep.checks.push_back({names[side], ex.ok, ex.ok ? "" : ex.code + ": " + ex.detail});
    if (ex.ok) {
      rep.yes = true;
      rep.reason_code = "bk-member";
      rep.d_class = classes[side];
      rep.underlying = std::move(ex.underlying);
      rep.d_vertices = std::move(ex.d_vertices);
      return rep;
    }
  }
  rep.reason_code = "no-underlying-hypergraph";
  rep.reason_message = "neither partite class admits an extraction";
  return rep;
}

Graph gamma_k_simplified(const Graph& g, int k) {
  RecognitionReport rep = membership_Bk(g, k);
  if (!rep.yes)
    throw std::invalid_argument("gamma_k_simplified: not a member (" + rep.reason_code + ")");
  return families::double_incidence_graph(*rep.underlying, k);
}

// ---------------------------------------------------------------------------
// TC-extremality.
// ---------------------------------------------------------------------------

TcExtremalResult tc_is_extremal(const Hypergraph& f, int k) {
  if (k < 2) throw std::invalid_argument("tc_is_extremal: k must be at least 2");
  if (!f.is_uniform(k))
    throw std::invalid_argument("tc_is_extremal: hypergraph is not k-uniform");
  TcExtremalResult res;
  if (f.edge_count() == 0) {
    // tc of an edgeless hypergraph is n, which meets n-k+2 only for k = 2
    res.extremal = (k == 2);
    if (!res.extremal) res.note = "no edges: tc equals the order";
    return res;
  }
  const int m = f.edge_count();
  for (int l = 1; l <= k - 1 && l <= m; ++l) {
    std::vector<int> combo(static_cast<std::size_t>(l));
    std::iota(combo.begin(), combo.end(), 0);
    bool more = true;
    while (more) {
      VertexSet window;
      for (int i : combo) window |= f.edge(i);
      const auto inner = solvers::max_weakly_independent_within(f, window);
      if (inner.value > l + k - 2) {
        res.extremal = false;
        res.edge_indices = combo;
        res.independent_set = inner.witness;
        return res;
      }
      more = next_combination_colex(combo, m);
    }
  }
  return res;
}

StarPropertyResult satisfies_star_property(const Hypergraph& f) {
  if (!f.is_uniform(3))
    throw std::invalid_argument("star property applies to 3-uniform hypergraphs");
  const Graph sec = two_section(f);
  StarPropertyResult res;
  for_each_subset_of_count(f.order(), 4, [&](VertexSet s) {
    const std::vector<int> v = s.elements();
    const auto adj = [&](int a, int b) { return sec.adjacent(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]); };
    const bool splittable = (adj(0, 1) && adj(2, 3)) || (adj(0, 2) && adj(1, 3)) ||
                            (adj(0, 3) && adj(1, 2));
    if (!splittable) return true;
    for (const VertexSet& e : f.edges())
      if (e.subset_of(s)) return true;
    res.holds = false;
    res.violating_quadruple = s;
    return false;
  });
  return res;
}

// ---------------------------------------------------------------------------
// The finite obstruction family for k = 3.
// ---------------------------------------------------------------------------

std::vector<SetWord> hypergraph_canonical_form(const Hypergraph& h) {
  const int n = h.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SetWord> best;
  bool first = true;
  do {
    std::vector<SetWord> relabeled;
    relabeled.reserve(h.edges().size());
    for (const VertexSet& e : h.edges()) {
      VertexSet mapped;
      for (int v : e) mapped.add(perm[static_cast<std::size_t>(v)]);
      relabeled.push_back(mapped.bits());
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Hypergraph> enumerate_Hk(int k) {
  if (k != 3)
    throw std::invalid_argument("the obstruction family is enumerated for k = 3 only");
  std::set<std::pair<int, std::vector<SetWord>>> canon_seen;
  std::vector<Hypergraph> out;
  for (int n = 3; n <= 6; ++n) {
    std::vector<VertexSet> triples;
    for_each_subset_of_count(n, 3, [&](VertexSet s) {
      triples.push_back(s);
      return true;
    });
    const int t = static_cast<int>(triples.size());
    for (SetWord pick = 1; pick < (SetWord{1} << t); ++pick) {
      std::vector<VertexSet> edges;
      for (int i : VertexSet{pick}) edges.push_back(triples[static_cast<std::size_t>(i)]);
      Hypergraph h(n, std::move(edges));
      if (h.covered_vertices() != h.vertices()) continue;
      const auto rho = solvers::edge_cover_number(h);
      if (rho.value > 2) continue;
      const auto alpha = solvers::weak_independence_number(h);
      if (alpha.value < rho.value + 2) continue;
      auto canon = hypergraph_canonical_form(h);
      if (canon_seen.insert({n, canon}).second) out.push_back(std::move(h));
    }
  }
  return out;
}

std::optional<VertexSet> find_induced_member(const Hypergraph& f,
                                             const std::vector<Hypergraph>& members) {
  std::set<std::pair<int, std::vector<SetWord>>> member_canons;
  int min_order = kMaxVertices, max_order = 0;
  for (const Hypergraph& m : members) {
    member_canons.insert({m.order(), hypergraph_canonical_form(m)});
    min_order = std::min(min_order, m.order());
    max_order = std::max(max_order, m.order());
  }
  const int n = f.order();
  for (int size = min_order; size <= std::min(n, max_order); ++size) {
    std::optional<VertexSet> hit;
    for_each_subset_of_count(n, size, [&](VertexSet sub) {
      const std::vector<int> verts = sub.elements();
      std::vector<int> compact(static_cast<std::size_t>(n), -1);
      for (std::size_t i = 0; i < verts.size(); ++i)
        compact[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
      std::vector<VertexSet> edges;
      for (const VertexSet& e : f.edges()) {
        if (!e.subset_of(sub)) continue;
        VertexSet packed;
        for (int v : e) packed.add(compact[static_cast<std::size_t>(v)]);
        edges.push_back(packed);
      }
      if (edges.empty()) return true;
      Hypergraph induced(size, std::move(edges));
      if (member_canons.count({size, hypergraph_canonical_form(induced)})) {
        hit = sub;
        return false;
      }
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The polynomial recognizer.
// ---------------------------------------------------------------------------

RecognitionReport is_gamma_gamma_k_graph_bipartite(const Graph& g, int k) {
  RecognitionReport rep;
  if (k < 3) {
    rep.reason_code = "unsupported-k";
    rep.reason_message = "the recognizer handles k >= 3; k = 2 follows a different theory";
    rep.checks.push_back({"k-range", false, "k=" + std::to_string(k)});
    return rep;
  }
  rep.checks.push_back({"k-range", true, ""});

  // all components but one must be isolated vertices
  const auto comps = connected_components(g);
  std::vector<VertexSet> nontrivial;
  for (const VertexSet& c : comps)
    if (c.count() >= 2) nontrivial.push_back(c);
  if (nontrivial.empty()) {
    rep.reason_code = "edgeless";
    rep.reason_message = "no component has an edge";
    rep.checks.push_back({"unique-core", false, "0 nontrivial components"});
    return rep;
  }
  if (nontrivial.size() > 1) {
    rep.reason_code = "multiple-nontrivial-components";
    rep.reason_message = "more than one component has edges";
    rep.checks.push_back({"unique-core", false,
                          std::to_string(nontrivial.size()) + " nontrivial components"});
    return rep;
  }
  rep.checks.push_back({"unique-core", true, nontrivial.front().to_string()});
  const InducedSubgraph core = induced_subgraph(g, nontrivial.front());

  if (core.graph.max_degree() < k) {
    rep.reason_code = "max-degree-below-k";
    rep.reason_message = "maximum degree " + std::to_string(core.graph.max_degree()) +
                         " is below k";
    rep.checks.push_back({"max-degree", false, ""});
    return rep;
  }
  rep.checks.push_back({"max-degree", true, ""});

  const auto split = is_bipartite(core.graph);
  if (!split) {
    rep.reason_code = "not-bipartite";
    rep.reason_message = "core component has an odd cycle";
    rep.checks.push_back({"bipartite", false, ""});
    return rep;
  }
  rep.checks.push_back({"bipartite", true, ""});

  const VertexSet classes[2] = {split->class_a, split->class_b};
  const char* names[2] = {"class-a", "class-b"};
  bool extracted_any = false;
  for (int side = 0; side < 2; ++side) {
    ExtractResult ex = extract_underlying(core.graph, classes[side], k);
    if (!ex.ok) {
      rep.checks.push_back({std::string("extract-") + names[side], false,
                            ex.code + ": " + ex.detail});
      continue;
    }
    rep.checks.push_back({std::string("extract-") + names[side], true, ""});
    extracted_any = true;
    const TcExtremalResult tce = tc_is_extremal(*ex.underlying, k);
    if (!tce.extremal) {
      std::string detail = "independent set " + tce.independent_set.to_string() +
                           " inside the union of edges";
      for (int i : tce.edge_indices) detail += ' ' + ex.underlying->edge(i).to_string();
      rep.checks.push_back({std::string("tc-extremal-") + names[side], false, detail});
      continue;
    }
    rep.checks.push_back({std::string("tc-extremal-") + names[side], true, ""});

    rep.yes = true;
    rep.reason_code = "gamma-gamma-k";
    // map the class and the hypergraph's vertex list back to g's vertex ids
    VertexSet dc;
    for (int v : classes[side]) dc.add(core.vertex_map[static_cast<std::size_t>(v)]);
    rep.d_class = dc;
    rep.d_vertices.clear();
    for (int v : ex.d_vertices)
      rep.d_vertices.push_back(core.vertex_map[static_cast<std::size_t>(v)]);
    rep.underlying = std::move(ex.underlying);
    return rep;
  }
  rep.reason_code = extracted_any ? "tc-not-extremal" : "not-bk-member";
  rep.reason_message = extracted_any
                           ? "underlying hypergraph misses the covering bound"
                           : "no partite class carries an underlying hypergraph";
  return rep;
}

// ---------------------------------------------------------------------------
// Perfectness for k = 3.
// ---------------------------------------------------------------------------

std::optional<families::SkShape> is_gamma_gamma3_perfect(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  if (g.min_degree() < 3) return std::nullopt;
  const auto split = is_bipartite(g);
  if (!split) return std::nullopt;
  const VertexSet classes[2] = {split->class_a, split->class_b};
  for (const VertexSet& d : classes) {
    ExtractResult ex = extract_underlying(g, d, 3);
    if (!ex.ok) continue;
    if (ex.y_vertices.any()) continue;  // every outside vertex must witness an edge
    const Hypergraph& f = *ex.underlying;
    const int r = f.edge_count();
    if (r == 0) continue;
    if (r >= 2) {
      // all edges must share a common pair; each contributes a private leaf
      VertexSet common = f.edge(0);
      for (int i = 1; i < r; ++i) common &= f.edge(i);
      if (common.count() != 2) continue;
    }
    // branch sizes = witness multiplicities per edge
    std::vector<int> sizes;
    bool good = true;
    for (int i = 0; i < r; ++i) {
      VertexSet edge_orig;
      for (int v : f.edge(i)) edge_orig.add(ex.d_vertices[static_cast<std::size_t>(v)]);
      int count = 0;
      for (int x : ex.x_vertices)
        if (g.neighbors(x) == edge_orig) ++count;
      if (count < 3) {
        good = false;
        break;
      }
      sizes.push_back(count);
    }
    if (!good) continue;
    std::sort(sizes.begin(), sizes.end());
    return families::SkShape(3, std::move(sizes));
  }
  return std::nullopt;
}

}  // namespace kdom::recognition
