#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"
#include "hgx/numeric.hpp"

namespace hgx {

enum class BoundKind { LowerBound, UpperBound, ExactClaimed, AsymptoticMainTerm };
std::string to_string(BoundKind kind);

/// An evaluated closed form together with everything needed to recompute it.
struct FormulaValue {
  std::string theorem_id;
  std::map<std::string, long long> params;
  Rational value;
  BoundKind kind = BoundKind::ExactClaimed;
};

/// sum_{i=1}^{s} C(s,i) C(n-s,r-i): the extremal size for forbidden M_{s+1}^r.
Integer emc_formula(long long n, long long r, long long s);

/// ex_s_family + sum_{i=1}^{t} C(s,i) C(n-s,r-i) with t = min(s, r-1).
Integer chi3_formula(long long n, long long r, long long s, const Integer& ex_s_family);

/// Graph case of the same bound: ex_s_family + s(n-s).
Integer gerbner_graph_formula(long long n, long long s, const Integer& ex_s_family);

/// |E(G(n,l,s))| in closed form.
Integer alon_frankl_formula(long long n, long long l, long long s);

/// Bounds for 2-chromatic F: lower uses omega = min(s, M(F)-1).
Integer two_chromatic_lower(long long n, long long r, long long s, long long matching_number);
Integer two_chromatic_upper(long long n, long long r, long long s);

/// |X| C(n,r-1) + |Y| C(k-1,r-1) (n/(k-1))^{r-1} + (|W|+|Z|-1) C(k-2,r-1) (n/(k-2))^{r-1}.
Rational f_wxyz(long long n, long long r, long long k, long long x, long long y, long long w, long long z);

/// |X| C(n,r-1) + (|Y|-1) C(k-1,r-1) (n/(k-1))^{r-1} + (s-|X|-|Y|+1) C(k-2,r-1) (n/(k-2))^{r-1}.
Rational f_uxy(long long n, long long r, long long k, long long s, long long x, long long y);

/// (m'-1) C(n,r-1) + (s-m'+1) C(k-2,r-1) (n/(k-2))^{r-1}; main term only.
Rational conjecture_bla_value(long long n, long long r, long long k, long long s, long long mprime);

/// Leading terms of the asymptotic results.
Integer expansion_bipartite_main_term(long long n, long long r, long long p);       // (p-1) C(n,r-1)
Integer expansion_k_lt_r_main_term(long long n, long long r, long long s, long long m);  // min(m-1,s) C(n,r-1)
Integer large_q_main_term(long long n, long long r, long long s);                    // s C(n,r-1)

struct HWitness {
  Rational value;
  VertexSet w;
  std::vector<VertexMask> x, y, z;
};

/// Minimum of f_wxyz over admissible (W, X, Y): W independent, X and Y
/// disjoint sets of edges missing W, chi(G-W-X) = k-1, chi(G-W-X-Y) = k-2,
/// Z the remaining edges missing W. Exhaustive; throws ChromaticTooSmall.
HWitness h_value(const Hypergraph& g, long long r, long long n);

struct HPrimeWitness {
  Rational value;
  VertexSet u;
  std::vector<VertexMask> x, y;
};

/// Minimum of f_uxy over the same admissible triples restricted to
/// s >= |X| + |Y| - 1. Throws ChromaticTooSmall or NoAdmissibleWitness.
HPrimeWitness h_prime_value(const Hypergraph& g, long long r, long long n, long long s);

/// Named evaluation used by the CLI. Known ids: emc, chi3, gerbner,
/// alon_frankl, two_chromatic_lower, two_chromatic_upper, f_wxyz, f_uxy, bla,
/// expansion_bipartite, expansion_k_lt_r, large_q. Throws BadParams.
FormulaValue evaluate_formula(const std::string& id, const std::map<std::string, long long>& params);
std::vector<std::string> formula_ids();

}  // namespace hgx
