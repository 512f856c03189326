#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kdom::verify {

// One property suite run.  Deterministic for a fixed configuration; pass
// means every recorded property held.
struct SuiteReport {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, bool>> properties;

  void note(std::string line) { lines.push_back(std::move(line)); }
  void property(const std::string& pname, bool ok, const std::string& detail = "") {
    properties.emplace_back(pname, ok);
    std::string line = "property=" + pname + " status=" + (ok ? "pass" : "FAIL");
    if (!detail.empty()) line += " " + detail;
    lines.push_back(std::move(line));
    if (!ok) pass = false;
  }
  bool property_ok(const std::string& pname) const {
    for (const auto& [n, ok] : properties)
      if (n == pname) return ok;
    return false;
  }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int trials = 0;  // 0 = suite default
  int n_max = 0;   // 0 = suite default
};

// gamma_k >= gamma + k - 2 on random graphs with max degree >= k, and the
// structure of every minimum witness on equality instances.
SuiteReport verify_bounds(const SuiteOptions& opts);

// The polynomial recognizer against brute force on connected bipartite
// graphs (k = 3), plus the square-of-d threshold property on yes instances.
SuiteReport verify_recognition_oracle(const SuiteOptions& opts);

// gamma_3 = gamma + 1 transfers between class members and their simplified
// graphs.
SuiteReport verify_simplify_equiv(const SuiteOptions& opts);

// The bounded window condition against exact tc, obstruction freeness and
// the adjacent-pairs property on random 3-uniform hypergraphs.
SuiteReport verify_tc_extremal(const SuiteOptions& opts);

// Multi-star recognition round trips, the hereditary property on sampled
// members, and the two stored k = 4 fixtures.
SuiteReport verify_perfect3(const SuiteOptions& opts);

// The 3-SAT reduction: exhaustive reducibility sweep for s <= 5, then random
// reducible instances with s = 6 certified for k in {2, 3}.
SuiteReport verify_sat(const SuiteOptions& opts);

// The finite obstruction family for k = 3: member properties and the
// freeness equivalence on random hypergraphs.
SuiteReport verify_hk(const SuiteOptions& opts);

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<std::string> suite_names();

}  // namespace kdom::verify
