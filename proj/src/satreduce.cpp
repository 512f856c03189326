#include "kdom/satreduce.hpp"

#include <sstream>
#include <stdexcept>

#include "kdom/io.hpp"
#include "kdom/solvers.hpp"

namespace kdom::satreduce {

bool CnfFormula::evaluate(std::uint64_t assignment) const {
  for (const Clause& c : clauses) {
    bool sat = false;
    for (const Literal& lit : c) {
      const bool value = (assignment >> (lit.variable - 1)) & 1;
      if (value == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<std::uint64_t> CnfFormula::find_satisfying_assignment() const {
  if (num_vars >= 63) throw std::invalid_argument("too many variables for brute force");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << num_vars); ++a)
    if (evaluate(a)) return a;
  return std::nullopt;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int s = -1, l = -1;
  CnfFormula f;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    if (line[i] == 'p') {
      if (s >= 0) throw ParseError("duplicate DIMACS header");
      std::istringstream ss(line);
      std::string p, cnf;
      if (!(ss >> p >> cnf >> s >> l) || cnf != "cnf" || s < 0 || l < 0)
        throw ParseError("expected 'p cnf <vars> <clauses>', got: " + line);
      continue;
    }
    if (s < 0) throw ParseError("clause before DIMACS header");
    std::istringstream ss(line);
    int lit = 0;
    while (ss >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("the reduction needs exact 3-SAT clauses, got one of size " +
                           std::to_string(pending.size()));
        Clause c;
        for (int j = 0; j < 3; ++j) {
          const int raw = pending[static_cast<std::size_t>(j)];
          c[static_cast<std::size_t>(j)] = Literal{raw > 0 ? raw : -raw, raw > 0};
        }
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b)
            if (c[static_cast<std::size_t>(a)].variable == c[static_cast<std::size_t>(b)].variable)
              throw ParseError("clause repeats a variable: " + line);
        f.clauses.push_back(c);
        pending.clear();
      } else {
        const int var = lit > 0 ? lit : -lit;
        if (var > s) throw ParseError("literal out of range: " + std::to_string(lit));
        pending.push_back(lit);
      }
    }
    if (!ss.eof()) throw ParseError("bad token in clause line: " + line);
  }
  if (s < 0) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause at end of input");
  if (f.num_clauses() != l)
    throw ParseError("header announces " + std::to_string(l) + " clauses, found " +
                     std::to_string(f.num_clauses()));
  f.num_vars = s;
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) out << (lit.positive ? lit.variable : -lit.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool check_reducibility(const CnfFormula& f) {
  const int s = f.num_vars;
  bool ok = true;
  for_each_subset_of_count(s, 3, [&](VertexSet triple) {
    // variables in the triple are 1-based bit positions + 1
    for (const Clause& c : f.clauses) {
      bool avoids = true;
      for (const Literal& lit : c)
        if (triple.contains(lit.variable - 1)) {
          avoids = false;
          break;
        }
      if (avoids) return true;  // this triple is fine, next one
    }
    ok = false;
    return false;
  });
  return ok;
}

VertexSet GadgetGraph::hubs() const {
  VertexSet h;
  for (int r = 1; r <= k - 1; ++r) h.add(hub(r));
  return h;
}

std::string GadgetGraph::role_name(int vertex) const {
  if (vertex < 3 * s) {
    const int i = vertex / 3 + 1;
    switch (vertex % 3) {
      case 0: return "x" + std::to_string(i) + "t";
      case 1: return "x" + std::to_string(i) + "f";
      default: return "v" + std::to_string(i);
    }
  }
  if (vertex < 3 * s + l) return "c" + std::to_string(vertex - 3 * s + 1);
  if (vertex == c_star()) return "c*";
  if (vertex == v_anchor(s + 1)) return "v" + std::to_string(s + 1);
  return "v0." + std::to_string(vertex - (3 * s + l + 2) + 1);
}

GadgetGraph build_gadget(const CnfFormula& f, int k) {
  if (k < 2) throw std::invalid_argument("build_gadget: k must be at least 2");
  if (!check_reducibility(f))
    throw std::invalid_argument(
        "build_gadget: some variable triple is hit by every clause; "
        "the instance decomposes into 2-SAT pieces");
  GadgetGraph gg;
  gg.s = f.num_vars;
  gg.l = f.num_clauses();
  gg.k = k;
  const int s = gg.s, l = gg.l;
  const int order = 3 * s + l + k + 1;

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= s; ++i) {
    edges.emplace_back(gg.x_true(i), gg.v_anchor(i));
    edges.emplace_back(gg.x_false(i), gg.v_anchor(i));
    edges.emplace_back(gg.c_star(), gg.x_true(i));
    edges.emplace_back(gg.c_star(), gg.x_false(i));
  }
  for (int j = 1; j <= l; ++j) {
    for (const Literal& lit : f.clauses[static_cast<std::size_t>(j - 1)])
      edges.emplace_back(lit.positive ? gg.x_true(lit.variable) : gg.x_false(lit.variable),
                         gg.clause_vertex(j));
    edges.emplace_back(gg.clause_vertex(j), gg.v_anchor(s + 1));
  }
  edges.emplace_back(gg.c_star(), gg.v_anchor(s + 1));
  // hubs: adjacent to everything except the anchors v_1..v_{s+1} and the
  // other hubs (they are false twins and stay independent)
  VertexSet non_neighbors = gg.hubs();
  for (int i = 1; i <= s + 1; ++i) non_neighbors.add(gg.v_anchor(i));
  for (int r = 1; r <= k - 1; ++r)
    for (int v : VertexSet::range(order) - non_neighbors) edges.emplace_back(v, gg.hub(r));

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(order));
  for (int v = 0; v < order; ++v) labels.push_back(gg.role_name(v));
  gg.graph = Graph(order, edges, std::move(labels));
  return gg;
}

std::string role_map_text(const GadgetGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.graph.order(); ++v)
    out << "role " << v << ' ' << g.role_name(v) << '\n';
  return out.str();
}

CertificationReport certify_biconditional(const CnfFormula& f, int k) {
  const GadgetGraph gg = build_gadget(f, k);
  CertificationReport rep;
  rep.order = gg.graph.order();

  const auto assignment = f.find_satisfying_assignment();
  rep.satisfiable = assignment.has_value();
  rep.gamma = solvers::gamma(gg.graph).value;
  rep.gamma_k = solvers::gamma_k(gg.graph, k).value;
  rep.gamma_k_matches = (rep.gamma_k == k + f.num_vars);
  rep.biconditional_holds = (rep.satisfiable == (rep.gamma < rep.gamma_k - k + 2));

  if (assignment) {
    // the dominating set read off the assignment: one literal vertex per
    // variable plus c*
    VertexSet dprime;
    for (int i = 1; i <= f.num_vars; ++i) {
      const bool value = (*assignment >> (i - 1)) & 1;
      dprime.add(value ? gg.x_true(i) : gg.x_false(i));
    }
    dprime.add(gg.c_star());
    rep.assignment_set_checked = (dprime.count() == f.num_vars + 1) &&
                                 solvers::is_dominating(gg.graph, dprime);
  }
  return rep;
}

}  // namespace kdom::satreduce
