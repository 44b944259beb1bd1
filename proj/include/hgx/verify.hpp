#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgx/formulas.hpp"
#include "hgx/hypergraph.hpp"
#include "hgx/numeric.hpp"
#include "hgx/solver.hpp"

namespace hgx {

/// Theorem ids: emc, chi3, two_chromatic_bounds, expansion_bipartite,
/// expansion_bipartite_large_p, expansion_k_lt_r.
struct VerifyRequest {
  std::string theorem_id;
  int r = 2;
  std::vector<int> s_values;
  std::vector<int> n_values;
  /// F for chi3 and two_chromatic_bounds; the graph G for expansion_*.
  std::optional<Hypergraph> pattern;
  SearchOptions solver;
};

/// Outcome at one parameter point. Verdicts: equal, solver_exceeds_formula,
/// solver_below_formula, within_bounds, outside_bounds, below_threshold,
/// solver_below_construction, unresolved.
struct VerifyPoint {
  long long n = 0, r = 0, s = 0;
  std::map<std::string, long long> derived;  // p, q, M, m, omega, k, ex_s_family...
  std::optional<FormulaValue> formula;
  std::optional<Integer> lower, upper;
  std::string construction;
  Integer construction_count = 0;
  long long solver = 0;
  ProofStatus proof_status = ProofStatus::Optimal;
  std::uint64_t nodes = 0;
  bool threshold_met = false;
  bool equal = false;      // solver value equals the exact formula, if any
  bool lower_ok = false;   // solver >= construction count
  std::string verdict;
  bool asserted = false;
};

struct VerifyReport {
  std::string theorem_id;
  std::vector<VerifyPoint> points;
  std::map<std::string, int> totals;  // verdict -> count, plus "findings"
};

bool is_finding(const std::string& verdict);

/// Throws BadParams for unknown ids or parameters outside a theorem's
/// hypotheses (wrong chromatic number, missing pattern, ...).
VerifyReport verify_theorem(const VerifyRequest& request);

}  // namespace hgx
