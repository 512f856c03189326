#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kdom/graph.hpp"

namespace kdom::satreduce {

struct Literal {
  int variable = 0;     // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// Exact 3-SAT instance: every clause holds three literals over distinct
// variables.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool evaluate(std::uint64_t assignment) const;  // bit i-1 = value of variable i
  // Smallest satisfying assignment by value, if any (brute force over 2^s).
  std::optional<std::uint64_t> find_satisfying_assignment() const;
};

// DIMACS CNF.  Rejects clauses that do not have exactly three distinct
// variables, since the reduction is defined on exact 3-SAT.
// Throws kdom::ParseError (from io.hpp) on malformed input.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

// The reduction's standing assumption: for every three variables some clause
// avoids all of them.  Instances failing it decompose into 2-SAT pieces and
// are rejected by the builder.
bool check_reducibility(const CnfFormula& f);

struct GadgetGraph {
  Graph graph;
  int s = 0;  // variables
  int l = 0;  // clauses
  int k = 0;
  // vertex layout, in order:
  //   3i, 3i+1, 3i+2            = x_{i+1}^t, x_{i+1}^f, v_{i+1}   (i < s)
  //   3s + j                    = c_{j+1}                          (j < l)
  //   3s + l                    = c*
  //   3s + l + 1                = v_{s+1}
  //   3s + l + 2 + r            = hub r+1 of k-1                   (r < k-1)
  int x_true(int i) const { return 3 * (i - 1); }
  int x_false(int i) const { return 3 * (i - 1) + 1; }
  int v_anchor(int i) const { return i <= s ? 3 * (i - 1) + 2 : 3 * s + l + 1; }
  int clause_vertex(int j) const { return 3 * s + (j - 1); }
  int c_star() const { return 3 * s + l; }
  int hub(int r) const { return 3 * s + l + 2 + (r - 1); }
  VertexSet hubs() const;
  std::string role_name(int vertex) const;
};

// The reduction graph.  Hubs are pairwise nonadjacent false twins joined to
// every vertex outside {v_1, ..., v_{s+1}}.  Requires check_reducibility and
// k >= 2; throws std::invalid_argument otherwise.
GadgetGraph build_gadget(const CnfFormula& f, int k);

// One line per vertex: "role <vertex> <name>".
std::string role_map_text(const GadgetGraph& g);

struct CertificationReport {
  bool satisfiable = false;
  int gamma = 0;
  int gamma_k = 0;
  int order = 0;
  bool biconditional_holds = false;   // satisfiable <=> gamma < gamma_k - k + 2
  bool gamma_k_matches = false;       // gamma_k == k + s
  bool assignment_set_checked = false;  // the derived (s+1)-vertex dominating set
};

// Builds the gadget, solves both invariants exactly, brute-forces
// satisfiability and checks the biconditional.  On satisfiable instances the
// dominating set derived from the assignment is validated as well.
CertificationReport certify_biconditional(const CnfFormula& f, int k);

}  // namespace kdom::satreduce
