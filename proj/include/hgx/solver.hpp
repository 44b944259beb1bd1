#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

enum class Symmetry {
  Off,
  Root,         // the first edge may be fixed to {0..r-1}
  DegreeOrder,  // final degrees non-increasing in the vertex label
};

enum class ProofStatus { Optimal, BoundOnly };
std::string to_string(ProofStatus status);
std::string to_string(Symmetry mode);
Symmetry parse_symmetry(const std::string& name);

struct SearchOptions {
  std::optional<int> forbid_matching;  // forbid M_{s+1}^r
  std::uint64_t node_budget = 0;       // 0: unlimited
  std::chrono::milliseconds time_budget{0};
  Symmetry symmetry = Symmetry::Root;
  int threads = 1;
  /// Prune with the closed-form bound for forbidden matchings wherever its
  /// hypothesis n >= (2s+1)r - s holds. Turn off when verifying that bound.
  bool theorem_bounds = true;
  /// Solve n-1 first and use e(H) <= ex(n-1) + min degree.
  bool hereditary_bound = true;
  /// A proven bound ex(n-1) <= prev_upper; replaces the n-1 sub-solve.
  std::optional<long long> prev_upper;
  /// Only look for graphs with more than `exceed` edges. A completed search
  /// then proves ex <= max(optimum, exceed) without pinning the optimum.
  std::optional<long long> exceed;
  std::optional<Hypergraph> warm_start;
};

struct TuranResult {
  int n = 0;
  int r = 0;
  std::string family;
  long long optimum = 0;
  Hypergraph witness;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  ProofStatus proof_status = ProofStatus::Optimal;
  /// Proven upper bound on the true value; equals optimum when optimal,
  /// empty when a budget cut the search.
  std::optional<long long> upper_bound;
};

/// Exact ex_r(n, family [+ M_{s+1}^r]) by include/exclude branch and bound
/// over r-sets in lexicographic order. Family members must be r-uniform.
/// Throws BadParams (r > n, n > 64, edgeless member that fits, too many
/// candidate edges) or UniformityMismatch.
TuranResult max_edges_serial(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts = {});
/// Same search split into subtrees run on OpenMP threads sharing the incumbent.
TuranResult max_edges_parallel(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts = {});
/// Serial when opts.threads <= 1.
TuranResult max_edges(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts = {});

struct CertificateCheck {
  bool ok = true;
  /// Any of: uniformity, order, forbidden_pattern, matching_too_large,
  /// count_mismatch.
  std::vector<std::string> reasons;
};

/// Re-checks a result without the search: uniformity, order, freeness,
/// matching number and edge count.
CertificateCheck check_certificate(const TuranResult& result, const std::vector<Hypergraph>& family,
                                   std::optional<int> forbid_matching = std::nullopt);

}  // namespace hgx
