#include "kdom/solvers.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace kdom::solvers {

namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet d) { return is_k_dominating(g, d, 1); }

bool is_k_dominating(const Graph& g, VertexSet d, int k) {
  require_k(k);
  if (!d.subset_of(g.vertices()))
    throw std::invalid_argument("dominating-set candidate out of range");
  for (int v : g.vertices() - d)
    if ((g.neighbors(v) & d).count() < k) return false;
  return true;
}

bool is_transversal(const Hypergraph& h, VertexSet t) {
  for (const VertexSet& e : h.edges())
    if (!e.intersects(t)) return false;
  return true;
}

bool is_weakly_independent(const Hypergraph& h, VertexSet x) {
  for (const VertexSet& e : h.edges())
    if (e.subset_of(x)) return false;
  return true;
}

bool is_edge_cover(const Hypergraph& h, const std::vector<int>& edge_indices) {
  VertexSet covered;
  for (int i : edge_indices) {
    if (i < 0 || i >= h.edge_count()) return false;
    covered |= h.edge(i);
  }
  return covered == h.vertices();
}

bool is_tc_set(const Hypergraph& h, VertexSet t, const std::vector<int>& edge_indices) {
  if (!is_transversal(h, t)) return false;
  VertexSet covered;
  for (int i : edge_indices) {
    if (i < 0 || i >= h.edge_count()) return false;
    covered |= h.edge(i);
  }
  return (h.vertices() - t).subset_of(covered);
}

// ---------------------------------------------------------------------------
// Reference route: cardinality-ascending enumeration.
// ---------------------------------------------------------------------------

namespace {

// First feasible vertex set by (cardinality, numeric mask) order.
template <class Feasible>
VertexSet min_set_by_cardinality(int n, long long& explored, Feasible feasible) {
  for (int c = 0; c <= n; ++c) {
    VertexSet hit;
    bool found = false;
    for_each_subset_of_count(n, c, [&](VertexSet s) {
      ++explored;
      if (feasible(s)) {
        hit = s;
        found = true;
        return false;
      }
      return true;
    });
    if (found) return hit;
  }
  throw std::logic_error("no feasible set up to the full vertex set");
}

}  // namespace

// ---------------------------------------------------------------------------
// Pruned route: k-domination branch and bound.
// ---------------------------------------------------------------------------

namespace {

struct KDomSearch {
  const Graph& g;
  int k;
  int n;
  VertexSet all;
  long long explored = 0;

  // value mode
  int best = INT_MAX;
  VertexSet best_set;

  // decision mode: is there a k-dominating set of size <= bound avoiding
  // `forbidden`?
  bool decision = false;
  int bound = 0;
  VertexSet forbidden;
  bool found = false;

  KDomSearch(const Graph& graph, int kk)
      : g(graph), k(kk), n(graph.order()), all(graph.vertices()) {}

  VertexSet greedy_incumbent() const {
    VertexSet d;
    while (true) {
      VertexSet unsat;
      for (int v : all - d)
        if ((g.neighbors(v) & d).count() < k) unsat.add(v);
      if (unsat.empty()) break;
      int pick = -1, pick_score = -1;
      for (int u : all - d) {
        const int score = (g.neighbors(u) & unsat).count() + (unsat.contains(u) ? 1 : 0);
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      d.add(pick);
    }
    return d;
  }

  bool propagate(VertexSet& in, VertexSet& out) const {
    bool changed = true;
    while (changed) {
      changed = false;
      VertexSet und = all - in - out;
      for (int v : und) {
        if ((g.neighbors(v) & (in | und)).count() < k) {
          if (out.contains(v)) return false;
          in.add(v);
          und.remove(v);
          changed = true;
        }
      }
      for (int v : out) {
        const int need = k - (g.neighbors(v) & in).count();
        if (need <= 0) continue;
        const VertexSet avail = g.neighbors(v) & und;
        const int have = avail.count();
        if (have < need) return false;
        if (have == need) {
          in |= avail;
          und -= avail;
          changed = true;
        }
      }
    }
    if (in.intersects(forbidden)) return false;
    return true;
  }

  // Packing bound on the number of vertices still to be added.
  int extra_lower_bound(VertexSet in, VertexSet out) const {
    const VertexSet und = all - in - out;
    struct Demand {
      int cand_count;
      int vertex;
      int need;
      VertexSet cands;
    };
    std::vector<Demand> demands;
    int max_need = 0;
    for (int v : out) {
      const int need = k - (g.neighbors(v) & in).count();
      if (need <= 0) continue;
      const VertexSet cands = g.neighbors(v) & und;
      demands.push_back({cands.count(), v, need, cands});
      max_need = std::max(max_need, need);
    }
    for (int v : und) {
      if ((g.neighbors(v) & in).count() >= k) continue;
      VertexSet cands = (g.neighbors(v) & und);
      cands.add(v);
      demands.push_back({cands.count(), v, 1, cands});
      max_need = std::max(max_need, 1);
    }
    std::sort(demands.begin(), demands.end(), [](const Demand& a, const Demand& b) {
      return a.cand_count != b.cand_count ? a.cand_count < b.cand_count
                                          : a.vertex < b.vertex;
    });
    int packed = 0;
    VertexSet used;
    for (const Demand& d : demands) {
      if (d.cands.intersects(used)) continue;
      packed += d.need;
      used |= d.cands;
    }
    return std::max(packed, max_need);
  }

  bool prune(int lb) const { return decision ? lb > bound : lb >= best; }

  void recurse(VertexSet in, VertexSet out) {
    ++explored;
    if (decision && found) return;
    if (!propagate(in, out)) return;
    const int lb = in.count() + extra_lower_bound(in, out);
    if (prune(lb)) return;
    const VertexSet und = all - in - out;

    // most constrained out-vertex with an unmet demand
    int bv = -1, bc = INT_MAX;
    for (int v : out) {
      if ((g.neighbors(v) & in).count() >= k) continue;
      const int c = (g.neighbors(v) & und).count();
      if (c < bc) {
        bc = c;
        bv = v;
      }
    }
    if (bv >= 0) {
      VertexSet skipped;
      for (int u : g.neighbors(bv) & und) {
        recurse(in | VertexSet::single(u), out | skipped);
        if (decision && found) return;
        skipped.add(u);
      }
      return;
    }

    // all out-vertices satisfied; settle undecided vertices short of k
    for (int v : und) {
      if ((g.neighbors(v) & in).count() >= k) continue;
      recurse(in | VertexSet::single(v), out);
      if (decision && found) return;
      recurse(in, out | VertexSet::single(v));
      return;
    }

    // complete: everything undecided is already k-dominated by `in`
    const int value = in.count();
    if (decision) {
      if (value <= bound) found = true;
      return;
    }
    if (value < best) {
      best = value;
      best_set = in;
    }
  }
};

bool kdom_decision(const Graph& g, int k, int bound, VertexSet forbidden,
                   long long& explored) {
  KDomSearch s(g, k);
  s.decision = true;
  s.bound = bound;
  s.forbidden = forbidden;
  s.recurse(VertexSet{}, forbidden);
  explored += s.explored;
  return s.found;
}

// Smallest-mask optimal witness: drop the highest vertices whose removal
// keeps a solution of the optimal size feasible.
VertexSet kdom_canonical_witness(const Graph& g, int k, int opt, long long& explored) {
  VertexSet allowed = g.vertices();
  for (int b = g.order() - 1; b >= 0; --b) {
    const VertexSet forb = (g.vertices() - allowed) | VertexSet::single(b);
    if (kdom_decision(g, k, opt, forb, explored)) allowed.remove(b);
  }
  return allowed;
}

SolveResult gamma_k_reference(const Graph& g, int k) {
  SolveResult r;
  r.witness = min_set_by_cardinality(g.order(), r.explored, [&](VertexSet d) {
    return is_k_dominating(g, d, k);
  });
  r.value = r.witness.count();
  return r;
}

SolveResult gamma_k_pruned(const Graph& g, int k) {
  KDomSearch s(g, k);
  const VertexSet inc = s.greedy_incumbent();
  s.best = inc.count();
  s.best_set = inc;
  s.recurse(VertexSet{}, VertexSet{});
  SolveResult r;
  r.value = s.best;
  r.explored = s.explored;
  r.witness = kdom_canonical_witness(g, k, s.best, r.explored);
  return r;
}

}  // namespace

SolveResult gamma_k(const Graph& g, int k, SolverPath path) {
  require_k(k);
  return path == SolverPath::reference ? gamma_k_reference(g, k) : gamma_k_pruned(g, k);
}

SolveResult gamma(const Graph& g, SolverPath path) { return gamma_k(g, 1, path); }

// ---------------------------------------------------------------------------
// Transversals.
// ---------------------------------------------------------------------------

namespace {

struct TransversalSearch {
  const Hypergraph& h;
  int n;
  VertexSet all;
  long long explored = 0;

  int best = INT_MAX;
  VertexSet best_set;

  bool decision = false;
  int bound = 0;
  VertexSet forbidden;
  bool found = false;

  explicit TransversalSearch(const Hypergraph& hh)
      : h(hh), n(hh.order()), all(hh.vertices()) {}

  VertexSet greedy_incumbent() const {
    VertexSet t;
    while (true) {
      std::vector<int> hits(static_cast<std::size_t>(n), 0);
      bool open = false;
      for (const VertexSet& e : h.edges()) {
        if (e.intersects(t)) continue;
        open = true;
        for (int v : e) ++hits[static_cast<std::size_t>(v)];
      }
      if (!open) break;
      int pick = 0;
      for (int v = 1; v < n; ++v)
        if (hits[static_cast<std::size_t>(v)] > hits[static_cast<std::size_t>(pick)]) pick = v;
      t.add(pick);
    }
    return t;
  }

  bool prune(int lb) const { return decision ? lb > bound : lb >= best; }

  void recurse(VertexSet in, VertexSet out) {
    ++explored;
    if (decision && found) return;

    // forced picks: edges with a single remaining vertex
    bool changed = true;
    while (changed) {
      changed = false;
      for (const VertexSet& e : h.edges()) {
        if (e.intersects(in)) continue;
        const VertexSet avail = e - out;
        if (avail.empty()) return;
        if (avail.count() == 1) {
          in |= avail;
          changed = true;
        }
      }
    }
    if (in.intersects(forbidden)) return;

    // packing bound over pairwise disjoint open edges
    int lb = in.count();
    {
      VertexSet used;
      for (const VertexSet& e : h.edges()) {
        if (e.intersects(in)) continue;
        const VertexSet avail = e - out;
        if (!avail.intersects(used)) {
          ++lb;
          used |= avail;
        }
      }
    }
    if (prune(lb)) return;

    int be = -1, bc = INT_MAX;
    for (int i = 0; i < h.edge_count(); ++i) {
      const VertexSet& e = h.edge(i);
      if (e.intersects(in)) continue;
      const int c = (e - out).count();
      if (c < bc) {
        bc = c;
        be = i;
      }
    }
    if (be < 0) {
      const int value = in.count();
      if (decision) {
        if (value <= bound) found = true;
        return;
      }
      if (value < best) {
        best = value;
        best_set = in;
      }
      return;
    }
    VertexSet skipped;
    for (int u : h.edge(be) - out) {
      recurse(in | VertexSet::single(u), out | skipped);
      if (decision && found) return;
      skipped.add(u);
    }
  }
};

bool transversal_decision(const Hypergraph& h, int bound, VertexSet forbidden,
                          long long& explored) {
  TransversalSearch s(h);
  s.decision = true;
  s.bound = bound;
  s.forbidden = forbidden;
  s.recurse(VertexSet{}, forbidden);
  explored += s.explored;
  return s.found;
}

VertexSet transversal_canonical_witness(const Hypergraph& h, int opt,
                                        long long& explored) {
  VertexSet allowed = h.vertices();
  for (int b = h.order() - 1; b >= 0; --b) {
    const VertexSet forb = (h.vertices() - allowed) | VertexSet::single(b);
    if (transversal_decision(h, opt, forb, explored)) allowed.remove(b);
  }
  return allowed;
}

SolveResult transversal_reference(const Hypergraph& h) {
  SolveResult r;
  r.witness = min_set_by_cardinality(h.order(), r.explored, [&](VertexSet t) {
    return is_transversal(h, t);
  });
  r.value = r.witness.count();
  return r;
}

SolveResult transversal_pruned(const Hypergraph& h) {
  TransversalSearch s(h);
  const VertexSet inc = s.greedy_incumbent();
  s.best = inc.count();
  s.best_set = inc;
  s.recurse(VertexSet{}, VertexSet{});
  SolveResult r;
  r.value = s.best;
  r.explored = s.explored;
  r.witness = transversal_canonical_witness(h, s.best, r.explored);
  return r;
}

}  // namespace

SolveResult transversal_number(const Hypergraph& h, SolverPath path) {
  return path == SolverPath::reference ? transversal_reference(h) : transversal_pruned(h);
}

SolveResult weak_independence_number(const Hypergraph& h, SolverPath path) {
  SolveResult tau = transversal_number(h, path);
  SolveResult r;
  r.value = h.order() - tau.value;
  r.witness = h.vertices() - tau.witness;
  r.explored = tau.explored;
  return r;
}

// ---------------------------------------------------------------------------
// Set cover over edges (rho, and the edge half of tc).
// ---------------------------------------------------------------------------

namespace {

struct SetCoverSearch {
  VertexSet universe;
  const std::vector<VertexSet>& sets;
  int m;
  long long explored = 0;

  int best = INT_MAX;
  std::vector<int> best_choice;

  bool decision = false;
  int bound = 0;
  bool found = false;

  std::vector<char> excluded;
  std::vector<int> chosen;

  SetCoverSearch(VertexSet u, const std::vector<VertexSet>& s)
      : universe(u), sets(s), m(static_cast<int>(s.size())),
        excluded(static_cast<std::size_t>(m), 0) {}

  int greedy_value() const {
    VertexSet covered;
    int used = 0;
    while (!universe.subset_of(covered)) {
      int pick = -1, gain = 0;
      for (int i = 0; i < m; ++i) {
        if (excluded[static_cast<std::size_t>(i)]) continue;
        const int g = ((sets[static_cast<std::size_t>(i)] & universe) - covered).count();
        if (g > gain) {
          gain = g;
          pick = i;
        }
      }
      if (pick < 0) return INT_MAX;  // uncoverable
      covered |= sets[static_cast<std::size_t>(pick)];
      ++used;
    }
    return used;
  }

  int packing_bound(VertexSet covered) const {
    int lb = 0;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (int v : universe - covered) {
      bool free = true;
      for (int i = 0; i < m; ++i) {
        if (excluded[static_cast<std::size_t>(i)] || !sets[static_cast<std::size_t>(i)].contains(v))
          continue;
        if (used[static_cast<std::size_t>(i)]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      bool has_candidate = false;
      for (int i = 0; i < m; ++i) {
        if (excluded[static_cast<std::size_t>(i)] || !sets[static_cast<std::size_t>(i)].contains(v))
          continue;
        used[static_cast<std::size_t>(i)] = 1;
        has_candidate = true;
      }
      if (has_candidate) ++lb;
    }
    return lb;
  }

  bool prune(int lb) const { return decision ? lb > bound : lb >= best; }

  void recurse(VertexSet covered) {
    ++explored;
    if (decision && found) return;
    if (universe.subset_of(covered)) {
      const int value = static_cast<int>(chosen.size());
      if (decision) {
        if (value <= bound) found = true;
        return;
      }
      if (value < best) {
        best = value;
        best_choice = chosen;
        std::sort(best_choice.begin(), best_choice.end());
      }
      return;
    }
    const int lb = static_cast<int>(chosen.size()) + packing_bound(covered);
    if (prune(lb)) return;

    // most constrained uncovered vertex
    int bv = -1, bc = INT_MAX;
    for (int v : universe - covered) {
      int c = 0;
      for (int i = 0; i < m; ++i)
        if (!excluded[static_cast<std::size_t>(i)] && sets[static_cast<std::size_t>(i)].contains(v))
          ++c;
      if (c == 0) return;
      if (c < bc) {
        bc = c;
        bv = v;
      }
    }
    std::vector<int> cands;
    for (int i = 0; i < m; ++i)
      if (!excluded[static_cast<std::size_t>(i)] && sets[static_cast<std::size_t>(i)].contains(bv))
        cands.push_back(i);
    std::vector<int> newly_excluded;
    for (int i : cands) {
      chosen.push_back(i);
      recurse(covered | sets[static_cast<std::size_t>(i)]);
      chosen.pop_back();
      if (decision && found) break;
      excluded[static_cast<std::size_t>(i)] = 1;
      newly_excluded.push_back(i);
    }
    for (int i : newly_excluded) excluded[static_cast<std::size_t>(i)] = 0;
  }
};

int set_cover_value(VertexSet universe, const std::vector<VertexSet>& sets,
                    long long& explored) {
  if (universe.empty()) return 0;
  SetCoverSearch s(universe, sets);
  s.best = s.greedy_value();
  s.recurse(VertexSet{});
  explored += s.explored;
  return s.best;
}

bool set_cover_decision(VertexSet universe, const std::vector<VertexSet>& sets,
                        int bound, const std::vector<char>& pre_excluded,
                        long long& explored) {
  if (universe.empty()) return bound >= 0;
  SetCoverSearch s(universe, sets);
  s.decision = true;
  s.bound = bound;
  s.excluded = pre_excluded;
  s.recurse(VertexSet{});
  explored += s.explored;
  return s.found;
}

// Colex-smallest cover of the given optimal size: drop the highest edge
// indices whose exclusion keeps the bound feasible.
std::vector<int> set_cover_canonical(VertexSet universe, const std::vector<VertexSet>& sets,
                                     int opt, long long& explored) {
  const int m = static_cast<int>(sets.size());
  std::vector<char> excluded(static_cast<std::size_t>(m), 0);
  std::vector<int> keep;
  for (int i = m - 1; i >= 0; --i) {
    excluded[static_cast<std::size_t>(i)] = 1;
    if (!set_cover_decision(universe, sets, opt, excluded, explored)) {
      excluded[static_cast<std::size_t>(i)] = 0;
      keep.push_back(i);
    }
  }
  std::reverse(keep.begin(), keep.end());
  return keep;
}

int min_edge_size(const Hypergraph& h) {
  int r = INT_MAX;
  for (const VertexSet& e : h.edges()) r = std::min(r, e.count());
  return r;
}

}  // namespace

SolveResult edge_cover_number(const Hypergraph& h, SolverPath path) {
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) == 0) throw UncoverableError(v);
  SolveResult r;
  if (path == SolverPath::reference) {
    const int m = h.edge_count();
    for (int size = 0; size <= m; ++size) {
      std::vector<int> combo(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
      bool more = size <= m;
      while (more) {
        ++r.explored;
        if (is_edge_cover(h, combo)) {
          r.value = size;
          r.edge_witness = combo;
          return r;
        }
        more = next_combination_colex(combo, m);
      }
    }
    throw std::logic_error("edge cover enumeration exhausted");
  }
  r.value = set_cover_value(h.vertices(), h.edges(), r.explored);
  r.edge_witness = set_cover_canonical(h.vertices(), h.edges(), r.value, r.explored);
  return r;
}

// ---------------------------------------------------------------------------
// TC-number.
// ---------------------------------------------------------------------------

namespace {

struct TcSearch {
  const Hypergraph& h;
  int n;
  VertexSet all;
  VertexSet forced;  // degree-0 vertices can only sit in the transversal part
  int max_edge_size;
  long long explored = 0;

  int best = INT_MAX;
  VertexSet best_t;

  explicit TcSearch(const Hypergraph& hh)
      : h(hh), n(hh.order()), all(hh.vertices()) {
    forced = all - hh.covered_vertices();
    max_edge_size = 1;
    for (const VertexSet& e : h.edges()) max_edge_size = std::max(max_edge_size, e.count());
  }

  // next = highest undecided vertex; deciding high bits first, exclusion
  // branch first, visits transversals in increasing mask order.
  void recurse(int next, VertexSet t, VertexSet out) {
    ++explored;
    const VertexSet und = VertexSet::range(next + 1);
    int lb = t.count();
    {
      VertexSet used;
      for (const VertexSet& e : h.edges()) {
        if (e.intersects(t)) continue;
        const VertexSet avail = e & und;
        if (avail.empty()) return;  // edge can no longer be hit
        if (!avail.intersects(used)) {
          ++lb;
          used |= avail;
        }
      }
    }
    lb += (out.count() + max_edge_size - 1) / max_edge_size;
    if (lb >= best) return;
    if (next < 0) {
      const int cover = set_cover_value(out, h.edges(), explored);
      const int total = t.count() + cover;
      if (total < best) {
        best = total;
        best_t = t;
      }
      return;
    }
    if (!forced.contains(next)) recurse(next - 1, t, out | VertexSet::single(next));
    recurse(next - 1, t | VertexSet::single(next), out);
  }
};

SolveResult tc_reference(const Hypergraph& h) {
  SolveResult r;
  const int n = h.order();
  const int m = h.edge_count();
  if (m == 0) {
    r.value = n;
    r.witness = h.vertices();
    return r;
  }
  for (int total = 0; total <= n; ++total) {
    for (SetWord w = 0;; ++w) {
      const VertexSet t{w};
      const int tcount = t.count();
      if (tcount <= total && is_transversal(h, t)) {
        const int rsize = total - tcount;
        const VertexSet rest = h.vertices() - t;
        if (rsize <= m) {
          std::vector<int> combo(static_cast<std::size_t>(rsize));
          for (int i = 0; i < rsize; ++i) combo[static_cast<std::size_t>(i)] = i;
          bool more = true;
          while (more) {
            ++r.explored;
            VertexSet covered;
            for (int i : combo) covered |= h.edge(i);
            if (rest.subset_of(covered)) {
              r.value = total;
              r.witness = t;
              r.edge_witness = combo;
              return r;
            }
            more = next_combination_colex(combo, m);
          }
        }
      }
      if (w == h.vertices().bits()) break;
    }
  }
  throw std::logic_error("tc enumeration exhausted");
}

SolveResult tc_pruned(const Hypergraph& h) {
  SolveResult r;
  const int n = h.order();
  if (h.edge_count() == 0) {
    r.value = n;
    r.witness = h.vertices();
    return r;
  }
  TcSearch s(h);
  // incumbents: the whole vertex set, and (V - e) + v + {e} for a smallest edge
  s.best = n + 1;
  s.best_t = h.vertices();
  {
    int ei = 0;
    for (int i = 1; i < h.edge_count(); ++i)
      if (h.edge(i).count() < h.edge(ei).count()) ei = i;
    const VertexSet e = h.edge(ei);
    const VertexSet t = (h.vertices() - e) | VertexSet::single(e.lowest());
    long long scratch = 0;
    const int total = t.count() + set_cover_value(h.vertices() - t, h.edges(), scratch);
    if (total < s.best) {
      s.best = total;
      s.best_t = t;
    }
    const int whole = n;  // T = V, no edges needed
    if (whole < s.best) {
      s.best = whole;
      s.best_t = h.vertices();
    }
  }
  s.recurse(n - 1, VertexSet{}, VertexSet{});
  r.value = s.best;
  r.witness = s.best_t;
  r.explored = s.explored;
  const VertexSet rest = h.vertices() - s.best_t;
  if (rest.any()) {
    const int cover = r.value - s.best_t.count();
    r.edge_witness = set_cover_canonical(rest, h.edges(), cover, r.explored);
  }
  return r;
}

}  // namespace

SolveResult tc_number(const Hypergraph& h, SolverPath path) {
  return path == SolverPath::reference ? tc_reference(h) : tc_pruned(h);
}

// ---------------------------------------------------------------------------
// Weak independence inside a window.
// ---------------------------------------------------------------------------

SolveResult max_weakly_independent_within(const Hypergraph& h, VertexSet window,
                                          SolverPath path) {
  if (!window.subset_of(h.vertices()))
    throw std::invalid_argument("window out of range");
  const std::vector<int> order = window.elements();
  const int wn = static_cast<int>(order.size());
  std::vector<int> compact(static_cast<std::size_t>(h.order()), -1);
  for (int i = 0; i < wn; ++i) compact[static_cast<std::size_t>(order[i])] = i;
  std::vector<VertexSet> inner_edges;
  for (const VertexSet& e : h.edges()) {
    if (!e.subset_of(window)) continue;
    VertexSet packed;
    for (int v : e) packed.add(compact[static_cast<std::size_t>(v)]);
    inner_edges.push_back(packed);
  }
  const Hypergraph restricted(wn, std::move(inner_edges));
  const SolveResult tau = transversal_number(restricted, path);
  VertexSet t_orig;
  for (int i : tau.witness) t_orig.add(order[static_cast<std::size_t>(i)]);
  SolveResult r;
  r.value = wn - tau.value;
  r.witness = window - t_orig;
  r.explored = tau.explored;
  return r;
}

// ---------------------------------------------------------------------------
// Threshold test and helpers.
// ---------------------------------------------------------------------------

bool is_threshold(const Graph& g) {
  const int n = g.order();
  bool ok = true;
  for_each_subset_of_count(n, 4, [&](VertexSet s) {
    int edges = 0, mindeg = 4, maxdeg = 0;
    for (int u : s) {
      const int d = (g.neighbors(u) & s).count();
      edges += d;
      mindeg = std::min(mindeg, d);
      maxdeg = std::max(maxdeg, d);
    }
    edges /= 2;
    const bool two_k2 = edges == 2 && maxdeg == 1;
    const bool p4 = edges == 3 && maxdeg == 2 && mindeg == 1;
    const bool c4 = edges == 4 && maxdeg == 2 && mindeg == 2;
    if (two_k2 || p4 || c4) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

std::vector<VertexSet> enumerate_minimum_k_dominating(const Graph& g, int k) {
  require_k(k);
  const int opt = gamma_k(g, k).value;
  std::vector<VertexSet> out;
  for_each_subset_of_count(g.order(), opt, [&](VertexSet d) {
    if (is_k_dominating(g, d, k)) out.push_back(d);
    return true;
  });
  return out;
}

}  // namespace kdom::solvers
