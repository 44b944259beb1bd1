#include "hgx/formulas.hpp"

#include <algorithm>
#include <optional>

#include "hgx/invariants.hpp"

namespace hgx {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::LowerBound: return "lower_bound";
    case BoundKind::UpperBound: return "upper_bound";
    case BoundKind::ExactClaimed: return "exact_claimed";
    case BoundKind::AsymptoticMainTerm: return "asymptotic_main_term";
  }
  return "?";
}

Integer emc_formula(long long n, long long r, long long s) {
  Integer total = 0;
  for (long long i = 1; i <= s; ++i) total += binomial(s, i) * binomial(n - s, r - i);
  return total;
}

Integer chi3_formula(long long n, long long r, long long s, const Integer& ex_s_family) {
  Integer total = ex_s_family;
  const long long t = std::min(s, r - 1);
  for (long long i = 1; i <= t; ++i) total += binomial(s, i) * binomial(n - s, r - i);
  return total;
}

Integer gerbner_graph_formula(long long n, long long s, const Integer& ex_s_family) {
  return ex_s_family + Integer(s) * (n - s);
}

Integer alon_frankl_formula(long long n, long long l, long long s) {
  if (l < 2 || s < 0 || s >= n) throw Error(ErrorCode::BadPartition, "G(n,l,s) needs l >= 2 and 0 <= s < n");
  // All pairs minus pairs inside a part.
  Integer total = binomial(n, 2) - binomial(n - s, 2);
  const long long base = s / (l - 1), extra = s % (l - 1);
  total -= extra * binomial(base + 1, 2) + (l - 1 - extra) * binomial(base, 2);
  return total;
}

Integer two_chromatic_lower(long long n, long long r, long long s, long long matching_number) {
  return emc_formula(n, r, std::min(s, matching_number - 1));
}

Integer two_chromatic_upper(long long n, long long r, long long s) { return emc_formula(n, r, s); }

namespace {

Rational power(const Rational& base, long long e) {
  Rational out = 1;
  for (long long i = 0; i < e; ++i) out *= base;
  return out;
}

// C(parts, r-1) (n/parts)^{r-1}: the complete balanced parts-partite
// (r-1)-graph density term.
Rational balanced_term(long long n, long long r, long long parts) {
  if (parts <= 0) throw Error(ErrorCode::DivisionByZero, "needs k > 2");
  return Rational(binomial(parts, r - 1)) * power(Rational(Integer(n), Integer(parts)), r - 1);
}

void require_k(long long k) {
  if (k <= 2) throw Error(ErrorCode::DivisionByZero, "k - 2 must be positive (k >= 3)");
}

}  // namespace

Rational f_wxyz(long long n, long long r, long long k, long long x, long long y, long long w, long long z) {
  require_k(k);
  return Rational(x * binomial(n, r - 1)) + y * balanced_term(n, r, k - 1) + (w + z - 1) * balanced_term(n, r, k - 2);
}

Rational f_uxy(long long n, long long r, long long k, long long s, long long x, long long y) {
  require_k(k);
  return Rational(x * binomial(n, r - 1)) + (y - 1) * balanced_term(n, r, k - 1) +
         (s - x - y + 1) * balanced_term(n, r, k - 2);
}

Rational conjecture_bla_value(long long n, long long r, long long k, long long s, long long mprime) {
  require_k(k);
  return Rational((mprime - 1) * binomial(n, r - 1)) + (s - mprime + 1) * balanced_term(n, r, k - 2);
}

Integer expansion_bipartite_main_term(long long n, long long r, long long p) { return (p - 1) * binomial(n, r - 1); }

Integer expansion_k_lt_r_main_term(long long n, long long r, long long s, long long m) {
  return std::min(m - 1, s) * binomial(n, r - 1);
}

Integer large_q_main_term(long long n, long long r, long long s) { return s * binomial(n, r - 1); }

namespace {

std::vector<VertexMask> pick(const std::vector<VertexMask>& edges, std::uint32_t sel) {
  std::vector<VertexMask> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((sel >> i) & 1U) out.push_back(edges[i]);
  }
  return out;
}

int chromatic_of(int n, const std::vector<VertexMask>& edges) {
  return chromatic_number(Hypergraph::from_masks(2, n, edges));
}

// Enumerates every admissible (W, X, Y): W independent, X and Y disjoint
// subsets of the edges missing W with chi(G-W-X) = k-1, chi(G-W-X-Y) = k-2.
template <class Visit>
void for_each_admissible(const Hypergraph& g, Visit visit) {
  if (g.uniformity() != 2) throw Error(ErrorCode::UniformityMismatch, "expects a graph (r = 2)");
  const int k = chromatic_number(g);
  if (k < 3) throw Error(ErrorCode::ChromaticTooSmall, "needs chromatic number >= 3, got " + std::to_string(k));
  const int n = g.order();
  for (VertexMask w = 0; w < bit(n); ++w) {
    if (!is_independent(g, w)) continue;
    std::vector<VertexMask> free_edges;
    for (VertexMask e : g.edge_masks()) {
      if ((e & w) == 0) free_edges.push_back(e);
    }
    if (free_edges.size() > 14)
      throw Error(ErrorCode::CapacityExceeded, "exhaustive minimization limited to 14 edges outside W");
    const std::uint32_t all = (1U << free_edges.size()) - 1;
    for (std::uint32_t xs = 0; xs <= all; ++xs) {
      std::vector<VertexMask> rest_x = pick(free_edges, all & ~xs);
      if (chromatic_of(n, rest_x) != k - 1) continue;
      const std::uint32_t avail = all & ~xs;
      // Subsets ys of avail, ascending.
      for (std::uint32_t ys = 0;; ys = (ys - avail) & avail) {
        if (chromatic_of(n, pick(free_edges, avail & ~ys)) == k - 2)
          visit(k, w, pick(free_edges, xs), pick(free_edges, ys), pick(free_edges, avail & ~ys));
        if (ys == avail) break;
      }
    }
  }
}

}  // namespace

HWitness h_value(const Hypergraph& g, long long r, long long n) {
  std::optional<HWitness> best;
  for_each_admissible(g, [&](int k, VertexMask w, std::vector<VertexMask> x, std::vector<VertexMask> y,
                             std::vector<VertexMask> z) {
    const Rational f = f_wxyz(n, r, k, static_cast<long long>(x.size()), static_cast<long long>(y.size()),
                              popcount(w), static_cast<long long>(z.size()));
    if (!best || f < best->value) best = HWitness{f, VertexSet(w), std::move(x), std::move(y), std::move(z)};
  });
  if (!best) throw Error(ErrorCode::NoAdmissibleWitness, "no admissible (W, X, Y)");
  return *best;
}

HPrimeWitness h_prime_value(const Hypergraph& g, long long r, long long n, long long s) {
  std::optional<HPrimeWitness> best;
  for_each_admissible(g, [&](int k, VertexMask u, std::vector<VertexMask> x, std::vector<VertexMask> y,
                             std::vector<VertexMask>) {
    const long long xs = static_cast<long long>(x.size()), ys = static_cast<long long>(y.size());
    if (s < xs + ys - 1) return;
    const Rational f = f_uxy(n, r, k, s, xs, ys);
    if (!best || f < best->value) best = HPrimeWitness{f, VertexSet(u), std::move(x), std::move(y)};
  });
  if (!best) throw Error(ErrorCode::NoAdmissibleWitness, "no admissible (U, X, Y) with s >= |X| + |Y| - 1");
  return *best;
}

namespace {

long long need(const std::map<std::string, long long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::BadParams, "missing parameter `" + key + "`");
  return it->second;
}

}  // namespace

std::vector<std::string> formula_ids() {
  return {"emc", "chi3", "gerbner", "alon_frankl", "two_chromatic_lower", "two_chromatic_upper", "f_wxyz",
          "f_uxy", "bla", "expansion_bipartite", "expansion_k_lt_r", "large_q"};
}

FormulaValue evaluate_formula(const std::string& id, const std::map<std::string, long long>& params) {
  auto p = [&](const char* key) { return need(params, key); };
  FormulaValue out{id, params, 0, BoundKind::ExactClaimed};
  if (id == "emc") {
    out.value = Rational(emc_formula(p("n"), p("r"), p("s")));
  } else if (id == "chi3") {
    out.value = Rational(chi3_formula(p("n"), p("r"), p("s"), p("ex")));
  } else if (id == "gerbner") {
    out.value = Rational(gerbner_graph_formula(p("n"), p("s"), p("ex")));
  } else if (id == "alon_frankl") {
    out.value = Rational(alon_frankl_formula(p("n"), p("l"), p("s")));
  } else if (id == "two_chromatic_lower") {
    out.value = Rational(two_chromatic_lower(p("n"), p("r"), p("s"), p("M")));
    out.kind = BoundKind::LowerBound;
  } else if (id == "two_chromatic_upper") {
    out.value = Rational(two_chromatic_upper(p("n"), p("r"), p("s")));
    out.kind = BoundKind::UpperBound;
  } else if (id == "f_wxyz") {
    out.value = f_wxyz(p("n"), p("r"), p("k"), p("x"), p("y"), p("w"), p("z"));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else if (id == "f_uxy") {
    out.value = f_uxy(p("n"), p("r"), p("k"), p("s"), p("x"), p("y"));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else if (id == "bla") {
    out.value = conjecture_bla_value(p("n"), p("r"), p("k"), p("s"), p("mprime"));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else if (id == "expansion_bipartite") {
    out.value = Rational(expansion_bipartite_main_term(p("n"), p("r"), p("p")));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else if (id == "expansion_k_lt_r") {
    out.value = Rational(expansion_k_lt_r_main_term(p("n"), p("r"), p("s"), p("m")));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else if (id == "large_q") {
    out.value = Rational(large_q_main_term(p("n"), p("r"), p("s")));
    out.kind = BoundKind::AsymptoticMainTerm;
  } else {
    throw Error(ErrorCode::BadParams, "unknown formula `" + id + "`");
  }
  return out;
}

}  // namespace hgx
