#include "hgx/verify.hpp"

#include <algorithm>

#include "hgx/constructions.hpp"
#include "hgx/invariants.hpp"

namespace hgx {

bool is_finding(const std::string& verdict) {
  return verdict == "solver_exceeds_formula" || verdict == "solver_below_formula" || verdict == "outside_bounds" ||
         verdict == "solver_below_construction";
}

namespace {

bool emc_threshold(long long n, long long r, long long s) { return n >= (2 * s + 1) * r - s; }

Integer count_of(ConstructionKind kind, std::map<std::string, long long> params) {
  ConstructionSpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return count_edges(spec);
}

FormulaValue formula(const std::string& id, std::map<std::string, long long> params, Rational value, BoundKind kind) {
  return FormulaValue{id, std::move(params), std::move(value), kind};
}

void judge(VerifyPoint& pt) {
  pt.lower_ok = Integer(pt.solver) >= pt.construction_count;
  const bool exact = pt.formula && pt.formula->kind == BoundKind::ExactClaimed;
  if (exact) pt.equal = Rational(pt.solver) == pt.formula->value;
  if (pt.proof_status != ProofStatus::Optimal) {
    pt.verdict = "unresolved";
    return;
  }
  if (!pt.lower_ok) {
    pt.verdict = "solver_below_construction";
    pt.asserted = true;
    return;
  }
  if (!pt.threshold_met) {
    pt.verdict = "below_threshold";
    return;
  }
  pt.asserted = true;
  if (exact) {
    const Rational v(pt.solver);
    pt.verdict = pt.equal ? "equal" : (v > pt.formula->value ? "solver_exceeds_formula" : "solver_below_formula");
  } else if (pt.lower && pt.upper) {
    pt.verdict = (*pt.lower <= pt.solver && pt.solver <= *pt.upper) ? "within_bounds" : "outside_bounds";
  } else {
    pt.verdict = "below_threshold";
    pt.asserted = false;
  }
}

const Hypergraph& need_pattern(const VerifyRequest& req) {
  if (!req.pattern) throw Error(ErrorCode::BadParams, req.theorem_id + " needs a pattern hypergraph");
  return *req.pattern;
}

const Hypergraph& need_graph(const VerifyRequest& req) {
  const Hypergraph& g = need_pattern(req);
  if (g.uniformity() != 2) throw Error(ErrorCode::BadParams, req.theorem_id + " expects a graph G (r = 2) to expand");
  if (g.empty()) throw Error(ErrorCode::BadParams, req.theorem_id + " expects G with at least one edge");
  return g;
}

}  // namespace

VerifyReport verify_theorem(const VerifyRequest& req) {
  static const std::vector<std::string> ids = {"emc", "chi3", "two_chromatic_bounds", "expansion_bipartite",
                                               "expansion_bipartite_large_p", "expansion_k_lt_r"};
  const std::string& id = req.theorem_id;
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw Error(ErrorCode::BadParams, "unknown theorem `" + id + "`");
  if (req.s_values.empty() || req.n_values.empty()) throw Error(ErrorCode::BadParams, "empty parameter sweep");
  const int r = req.r;
  if (r < 1) throw Error(ErrorCode::BadParams, "r must be positive");

  // The solver must not assume the bound being checked.
  SearchOptions base = req.solver;
  base.theorem_bounds = false;
  base.warm_start.reset();

  std::vector<Hypergraph> family;
  std::map<std::string, long long> derived;
  std::vector<Hypergraph> derived_members;
  if (id == "chi3" || id == "two_chromatic_bounds") {
    const Hypergraph& f = need_pattern(req);
    if (f.uniformity() != r) throw Error(ErrorCode::BadParams, "pattern is not " + std::to_string(r) + "-uniform");
    if (f.empty()) throw Error(ErrorCode::BadParams, "pattern has no edges");
    family = {f};
    const int k = chromatic_number(f);
    derived["chi"] = k;
    if (id == "chi3") {
      if (k <= 2) throw Error(ErrorCode::BadParams, "chi3 needs chromatic number > 2, got " + std::to_string(k));
      DerivedFamily d = derived_family(f);
      derived_members = std::move(d.members);
      derived["family_size"] = static_cast<long long>(derived_members.size());
    } else {
      if (k != 2) throw Error(ErrorCode::BadParams, "two_chromatic_bounds needs chromatic number 2, got " + std::to_string(k));
      derived["M"] = matching_number(f);
      derived["p"] = p_value(f);
      if (auto q = q_value(f)) derived["q"] = q->q;
    }
  } else if (id != "emc") {
    const Hypergraph& g = need_graph(req);
    if (r < 3) throw Error(ErrorCode::BadParams, id + " needs r >= 3");
    family = {expansion(g, r)};
    const int k = chromatic_number(g);
    derived["chi"] = k;
    if (id == "expansion_k_lt_r") {
      if (k < 3 || k >= r) throw Error(ErrorCode::BadParams, "expansion_k_lt_r needs 3 <= chi(G) < r, got chi(G) = " + std::to_string(k));
      derived["m"] = m_value(g).value;
    } else {
      if (k != 2) throw Error(ErrorCode::BadParams, id + " needs a bipartite G with an edge");
      derived["p"] = p_value(g);
    }
  }

  VerifyReport report;
  report.theorem_id = id;
  for (int s : req.s_values) {
    if (s < 0) throw Error(ErrorCode::BadParams, "s must be >= 0");
    // ex_r(s, derived family) and its extremal core, once per s.
    std::optional<TuranResult> core;
    if (id == "chi3") {
      if (s >= r) {
        SearchOptions sub = base;
        sub.forbid_matching.reset();
        core = max_edges(s, r, derived_members, sub);
      }
    }
    if (id == "expansion_bipartite" && derived["p"] > s)
      throw Error(ErrorCode::BadParams, "expansion_bipartite needs p(G) <= s; p(G) = " + std::to_string(derived["p"]));
    if (id == "expansion_bipartite_large_p" && derived["p"] <= s)
      throw Error(ErrorCode::BadParams, "expansion_bipartite_large_p needs p(G) > s; p(G) = " + std::to_string(derived["p"]));

    std::optional<TuranResult> last;  // previous point, reused when n grows by one
    for (int n : req.n_values) {
      VerifyPoint pt;
      pt.n = n;
      pt.r = r;
      pt.s = s;
      pt.derived = derived;
      const std::map<std::string, long long> nrs = {{"n", n}, {"r", r}, {"s", s}};

      if (id == "emc") {
        pt.formula = formula(id, nrs, Rational(emc_formula(n, r, s)), BoundKind::ExactClaimed);
        pt.construction = "A_nrs";
        pt.construction_count = count_of(ConstructionKind::ANrs, nrs);
        pt.threshold_met = emc_threshold(n, r, s);
      } else if (id == "chi3") {
        const long long ex_s = core ? core->optimum : 0;
        pt.derived["ex_s_family"] = ex_s;
        auto params = nrs;
        params["ex"] = ex_s;
        pt.formula = formula(id, params, Rational(chi3_formula(n, r, s, ex_s)), BoundKind::ExactClaimed);
        pt.construction = "core_cover";
        pt.construction_count = core ? Integer(core_cover(core->witness, n, r).size())
                                     : Integer(core_cover(Hypergraph(r, s), n, r).size());
        pt.threshold_met = false;  // claimed for n large enough only
        if (core && core->proof_status != ProofStatus::Optimal) pt.derived["ex_s_family_bound_only"] = 1;
      } else if (id == "two_chromatic_bounds") {
        const long long omega = std::min<long long>(s, derived["M"] - 1);
        pt.derived["omega"] = omega;
        pt.lower = emc_formula(n, r, omega);
        pt.upper = emc_formula(n, r, s);
        pt.threshold_met = emc_threshold(n, r, s);
        if (s < std::min<long long>(derived["p"], r)) {
          pt.formula = formula(id, nrs, Rational(*pt.upper), BoundKind::ExactClaimed);
          pt.construction = "A_nrs";
          pt.construction_count = count_of(ConstructionKind::ANrs, nrs);
        } else {
          pt.formula = formula(id, nrs, Rational(*pt.upper), BoundKind::UpperBound);
          pt.construction = "A_nrs(omega)";
          pt.construction_count = count_of(ConstructionKind::ANrs, {{"n", n}, {"r", r}, {"s", omega}});
        }
      } else if (id == "expansion_bipartite") {
        const long long p = derived["p"];
        auto params = nrs;
        params["p"] = p;
        pt.formula = formula(id, params, Rational(expansion_bipartite_main_term(n, r, p)), BoundKind::AsymptoticMainTerm);
        pt.construction = "crosscut_star";
        pt.construction_count = count_of(ConstructionKind::CrosscutStar, {{"n", n}, {"r", r}, {"a", p - 1}});
        pt.threshold_met = false;
      } else if (id == "expansion_bipartite_large_p") {
        pt.formula = formula(id, nrs, Rational(emc_formula(n, r, s)), BoundKind::ExactClaimed);
        pt.construction = "A_nrs";
        pt.construction_count = count_of(ConstructionKind::ANrs, nrs);
        pt.threshold_met = false;
      } else {  // expansion_k_lt_r
        const long long m = derived["m"];
        auto params = nrs;
        params["m"] = m;
        pt.formula = formula(id, params, Rational(expansion_k_lt_r_main_term(n, r, s, m)), BoundKind::AsymptoticMainTerm);
        if (m - 1 <= s) {
          pt.construction = "G1";
          pt.construction_count = count_of(ConstructionKind::G1, {{"n", n}, {"r", r}, {"m", m}});
        } else {
          pt.construction = "A_nrs";
          pt.construction_count = count_of(ConstructionKind::ANrs, nrs);
        }
        pt.threshold_met = false;
      }

      SearchOptions opts = base;
      opts.forbid_matching = s;
      if (last && last->n == n - 1 && last->proof_status == ProofStatus::Optimal) {
        opts.prev_upper = last->optimum;
        const auto masks = last->witness.edge_masks();
        opts.warm_start = Hypergraph::from_masks(r, n, {masks.begin(), masks.end()});
      }
      const TuranResult res = max_edges(n, r, family, opts);
      last = res;
      pt.solver = res.optimum;
      pt.proof_status = res.proof_status;
      pt.nodes = res.nodes;
      judge(pt);
      ++report.totals[pt.verdict];
      if (is_finding(pt.verdict)) ++report.totals["findings"];
      report.points.push_back(std::move(pt));
    }
  }
  report.totals.try_emplace("findings", 0);
  return report;
}

}  // namespace hgx
