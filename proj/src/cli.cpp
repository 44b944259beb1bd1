#include "hgx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgx/constructions.hpp"
#include "hgx/embedding.hpp"
#include "hgx/formulas.hpp"
#include "hgx/invariants.hpp"
#include "hgx/io.hpp"
#include "hgx/solver.hpp"
#include "hgx/verify.hpp"

namespace hgx::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long parse_int(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": expected an integer, got `" + text + "`");
}

// "k=3,x=1" -> {k: 3, x: 1}
std::map<std::string, long long> parse_params(const std::string& text, const std::string& flag) {
  std::map<std::string, long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(flag + ": expected key=value, got `" + item + "`");
    out[item.substr(0, eq)] = parse_int(item.substr(eq + 1), flag);
  }
  return out;
}

// "8:10" -> 8 9 10; "1,3" -> 1 3; "5" -> 5
std::vector<int> parse_range(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const long long lo = parse_int(text.substr(0, colon), flag), hi = parse_int(text.substr(colon + 1), flag);
    if (lo > hi) throw UsageError(flag + ": empty range `" + text + "`");
    for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_int(item, flag)));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

json edges_json(const Hypergraph& h) {
  json arr = json::array();
  for (const Edge& e : h.edges()) arr.push_back(e);
  return arr;
}

json masks_json(const std::vector<VertexMask>& masks) {
  json arr = json::array();
  for (VertexMask m : masks) arr.push_back(vertices_of(m));
  return arr;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string vertex_list(const VertexSet& s) {
  return "{" + join(s.vertices()) + "}";
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << j.dump(2) << '\n';
}

int default_threads() {
  if (const char* env = std::getenv("HGX_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct InvariantArgs {
  std::string name, in, json_path;
  std::optional<int> r, n, s;
};

int invariant_cmd(const InvariantArgs& a, std::ostream& out) {
  const Hypergraph h = read_hg_file(a.in);
  json j;
  j["name"] = a.name;
  json witness = json::object();
  std::string text;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("invariant " + a.name + " needs " + flag);
    return *v;
  };

  if (a.name == "matching") {
    const auto m = maximum_matching(h);
    std::vector<VertexMask> edges;
    for (int i : m) edges.push_back(h.edge_masks()[i]);
    j["value"] = m.size();
    witness["edges"] = masks_json(edges);
    text = std::to_string(m.size());
  } else if (a.name == "chromatic") {
    const Coloring c = optimal_coloring(h);
    j["value"] = c.k;
    witness["colors"] = c.colors;
    text = std::to_string(c.k);
  } else if (a.name == "p") {
    const VertexSet red = p_witness(h);
    j["value"] = red.size();
    witness["red"] = red.vertices();
    text = std::to_string(red.size());
  } else if (a.name == "q" || a.name == "crosscut") {
    const auto q = q_value(h);
    if (!q) {
      if (a.name == "crosscut") throw Error(ErrorCode::NoCrosscut, "no strong red-blue colouring exists");
      j["value"] = "inf";
      text = "inf";
    } else {
      j["value"] = q->q;
      witness["crosscut"] = q->crosscut.vertices();
      witness["link_chromatics"] = q->link_chromatics;
      text = std::to_string(q->q);
      if (a.name == "crosscut") text += " crosscut " + vertex_list(q->crosscut) + " links (" + join(q->link_chromatics) + ")";
    }
  } else if (a.name == "universal") {
    const auto u = universal_vertex(h);
    if (u) j["value"] = *u;
    else j["value"] = nullptr;
    text = u ? std::to_string(*u) : "none";
  } else if (a.name == "derived") {
    const DerivedFamily d = derived_family(h);
    j["value"] = d.members.size();
    json members = json::array();
    for (const auto& m : d.members) members.push_back({{"r", m.uniformity()}, {"n", m.order()}, {"edges", edges_json(m)}});
    witness["members"] = members;
    witness["dropped_edgeless"] = d.dropped_edgeless;
    text = std::to_string(d.members.size());
    for (const auto& m : d.members) text += "\n  " + describe(m);
  } else if (a.name == "m") {
    const MValue m = m_value(h);
    j["value"] = m.value;
    witness["W"] = m.w.vertices();
    text = std::to_string(m.value) + " W = " + vertex_list(m.w);
  } else if (a.name == "mprime") {
    const MPrimeValue m = m_prime_value(h);
    j["value"] = m.value;
    witness["U"] = m.u.vertices();
    witness["Z"] = masks_json(m.z);
    text = std::to_string(m.value) + " U = " + vertex_list(m.u);
  } else if (a.name == "h") {
    const int r = need(a.r, "--r"), n = need(a.n, "--n");
    const HWitness w = h_value(h, r, n);
    j["value"] = to_string(w.value);
    witness = {{"W", w.w.vertices()}, {"X", masks_json(w.x)}, {"Y", masks_json(w.y)}, {"Z", masks_json(w.z)}};
    text = to_string(w.value);
    try {
      ConstructionSpec spec{ConstructionKind::G1Prime,
                            {{"n", n}, {"r", r}, {"k", chromatic_number(h)}, {"w", w.w.size()},
                             {"x", static_cast<long long>(w.x.size())}, {"y", static_cast<long long>(w.y.size())},
                             {"z", static_cast<long long>(w.z.size())}},
                            {}, std::nullopt};
      const Integer count = count_edges(spec);
      j["construction_count"] = to_string(count);
      text += " (G1prime edges " + to_string(count) + ")";
    } catch (const Error&) {
    }
  } else if (a.name == "hprime") {
    const int r = need(a.r, "--r"), n = need(a.n, "--n"), s = need(a.s, "--s");
    const HPrimeWitness w = h_prime_value(h, r, n, s);
    j["value"] = to_string(w.value);
    witness = {{"U", w.u.vertices()}, {"X", masks_json(w.x)}, {"Y", masks_json(w.y)}};
    text = to_string(w.value);
    try {
      ConstructionSpec spec{ConstructionKind::G2Prime,
                            {{"n", n}, {"r", r}, {"s", s}, {"k", chromatic_number(h)},
                             {"x", static_cast<long long>(w.x.size())}, {"y", static_cast<long long>(w.y.size())}},
                            {}, std::nullopt};
      const Integer count = count_edges(spec);
      j["construction_count"] = to_string(count);
      text += " (G2prime edges " + to_string(count) + ")";
    } catch (const Error&) {
    }
  } else {
    throw UsageError("unknown invariant `" + a.name +
                     "` (matching, chromatic, p, q, universal, derived, m, mprime, crosscut, h, hprime)");
  }
  j["witness"] = witness;
  out << a.name << " = " << text << '\n';
  if (!a.json_path.empty()) write_json(a.json_path, j);
  return 0;
}

struct ConstructArgs {
  std::string name, params, parts, core, output;
  std::optional<int> n, r, s;
  bool count_only = false;
};

int construct_cmd(const ConstructArgs& a, std::ostream& out) {
  ConstructionSpec spec;
  spec.kind = parse_construction(a.name);
  spec.params = parse_params(a.params, "--params");
  if (a.n) spec.params["n"] = *a.n;
  if (a.r) spec.params["r"] = *a.r;
  if (a.s) spec.params["s"] = *a.s;
  if (!a.parts.empty()) {
    for (int p : parse_range(a.parts, "--parts")) spec.parts.push_back(p);
  }
  if (!a.core.empty()) spec.core = read_hg_file(a.core);
  for (const auto& key : construction_params(spec.kind)) {
    if (!spec.params.count(key)) throw UsageError(construction_name(spec.kind) + " needs --" + key + " (or --params " + key + "=..)");
  }
  if (a.count_only) {
    out << to_string(count_edges(spec)) << '\n';
    return 0;
  }
  const Hypergraph h = build(spec);
  if (a.output.empty()) {
    write_hg(out, h);
  } else {
    write_hg_file(a.output, h);
    out << construction_name(spec.kind) << ": " << h.size() << " edges on " << h.order() << " vertices -> " << a.output << '\n';
  }
  return 0;
}

struct SolveArgs {
  int n = 0, r = 0;
  std::vector<std::string> forbid;
  std::optional<int> matching;
  std::uint64_t nodes = 0;
  double time = 0;
  int threads = 0;
  std::string symmetry = "root";
  bool no_theorem_bounds = false;
  bool no_hereditary = false;
  std::optional<long long> exceed, prev_upper;
  std::string json_path, output;
};

int solve_cmd(const SolveArgs& a, std::ostream& out) {
  std::vector<Hypergraph> family;
  for (const auto& path : a.forbid) family.push_back(read_hg_file(path));
  if (family.empty() && !a.matching) throw UsageError("solve needs --forbid or --forbid-matching");
  SearchOptions opts;
  opts.forbid_matching = a.matching;
  opts.node_budget = a.nodes;
  opts.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time * 1000));
  opts.threads = a.threads > 0 ? a.threads : default_threads();
  opts.symmetry = parse_symmetry(a.symmetry);
  opts.theorem_bounds = !a.no_theorem_bounds;
  opts.hereditary_bound = !a.no_hereditary;
  opts.exceed = a.exceed;
  opts.prev_upper = a.prev_upper;
  const TuranResult res = max_edges(a.n, a.r, family, opts);

  out << "optimum = " << res.optimum << " (" << to_string(res.proof_status) << ")\n";
  if (res.upper_bound && (res.proof_status != ProofStatus::Optimal)) out << "upper_bound = " << *res.upper_bound << '\n';
  out << "nodes = " << res.nodes << '\n';
  out << "witness = " << describe(res.witness) << '\n';
  if (!a.json_path.empty()) {
    json j = {{"n", res.n},
              {"r", res.r},
              {"family", a.forbid},
              {"optimum", res.optimum},
              {"proof_status", to_string(res.proof_status)},
              {"upper_bound", res.upper_bound ? json(*res.upper_bound) : json(nullptr)},
              {"witness", {{"edges", edges_json(res.witness)}}},
              {"nodes", res.nodes},
              {"elapsed_ms", res.elapsed.count()}};
    write_json(a.json_path, j);
  }
  if (!a.output.empty()) write_hg_file(a.output, res.witness);
  return 0;
}

struct VerifyArgs {
  std::string theorem, s, n, in, json_path;
  int r = 2;
  std::uint64_t nodes = 0;
  double time = 0;
  int threads = 0;
};

json point_json(const VerifyPoint& p) {
  json j = {{"n", p.n}, {"r", p.r}, {"s", p.s}};
  j["derived"] = p.derived;
  if (p.formula) {
    j["formula"] = to_string(p.formula->value);
    j["formula_kind"] = to_string(p.formula->kind);
  } else {
    j["formula"] = nullptr;
  }
  j["lower"] = p.lower ? json(to_string(*p.lower)) : json(nullptr);
  j["upper"] = p.upper ? json(to_string(*p.upper)) : json(nullptr);
  j["construction"] = p.construction;
  j["construction_count"] = to_string(p.construction_count);
  j["solver"] = p.solver;
  j["proof_status"] = to_string(p.proof_status);
  j["nodes"] = p.nodes;
  j["threshold_met"] = p.threshold_met;
  j["equal"] = p.equal;
  j["lower_ok"] = p.lower_ok;
  j["verdict"] = p.verdict;
  j["asserted"] = p.asserted;
  return j;
}

int verify_cmd(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  VerifyRequest req;
  req.theorem_id = a.theorem;
  req.r = a.r;
  req.s_values = parse_range(a.s, "--s");
  req.n_values = parse_range(a.n, "--n");
  if (!a.in.empty()) req.pattern = read_hg_file(a.in);
  req.solver.node_budget = a.nodes;
  req.solver.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time * 1000));
  req.solver.threads = a.threads > 0 ? a.threads : default_threads();
  const VerifyReport rep = verify_theorem(req);

  for (const auto& p : rep.points) {
    out << "n=" << p.n << " r=" << p.r << " s=" << p.s;
    if (p.formula) out << " formula=" << to_string(p.formula->value);
    if (p.lower) out << " lower=" << to_string(*p.lower);
    if (p.upper) out << " upper=" << to_string(*p.upper);
    out << ' ' << p.construction << '=' << to_string(p.construction_count) << " solver=" << p.solver << " ["
        << to_string(p.proof_status) << "] " << p.verdict << (p.asserted ? "" : " (not asserted)") << '\n';
  }
  out << "points=" << rep.points.size() << " findings=" << rep.totals.at("findings") << '\n';

  if (!a.json_path.empty()) {
    std::string command = "hgx";
    for (const auto& s : args) command += " " + s;
    json points = json::array();
    for (const auto& p : rep.points) points.push_back(point_json(p));
    json j = {{"tool", "hgx"},
              {"version", kVersion},
              {"command", command},
              {"theorem", rep.theorem_id},
              {"sweep", {{"r", a.r}, {"s", req.s_values}, {"n", req.n_values}, {"pattern", a.in.empty() ? json(nullptr) : json(a.in)}}},
              {"points", points},
              {"totals", rep.totals}};
    write_json(a.json_path, j);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph Turán toolkit", "hgx"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  InvariantArgs inv;
  auto* inv_cmd = app.add_subcommand("invariant", "compute an invariant of a hypergraph");
  inv_cmd->add_option("name", inv.name, "matching, chromatic, p, q, universal, derived, m, mprime, crosscut, h, hprime")->required();
  inv_cmd->add_option("--in", inv.in, ".hg input")->required();
  inv_cmd->add_option("--r", inv.r, "uniformity for h/hprime");
  inv_cmd->add_option("--n", inv.n, "host order for h/hprime");
  inv_cmd->add_option("--s", inv.s, "matching bound for hprime");
  inv_cmd->add_option("--json", inv.json_path, "write {name, value, witness}");

  std::string exp_in, exp_out;
  int exp_r = 3;
  auto* exp_cmd = app.add_subcommand("expand", "r-expansion of a graph");
  exp_cmd->add_option("--in", exp_in, ".hg graph")->required();
  exp_cmd->add_option("--r", exp_r, "target uniformity")->required();
  exp_cmd->add_option("-o,--out", exp_out, "output .hg (stdout if omitted)");

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "build a named construction");
  con_cmd->add_option("name", con.name, "turan_graph, G_nls, A_nrs, crosscut_star, core_cover, H_i, G1, G1prime, G2, G2prime, complete_multipartite_uniform")->required();
  con_cmd->add_option("--n", con.n);
  con_cmd->add_option("--r", con.r);
  con_cmd->add_option("--s", con.s);
  con_cmd->add_option("--params", con.params, "extra parameters, e.g. k=4,x=1");
  con_cmd->add_option("--parts", con.parts, "part sizes for complete_multipartite_uniform, e.g. 3,3,2");
  con_cmd->add_option("--core", con.core, "core .hg for core_cover");
  con_cmd->add_option("-o,--out", con.output, "output .hg (stdout if omitted)");
  con_cmd->add_flag("--count-only", con.count_only, "print the closed-form edge count only");

  std::string host_path;
  std::vector<std::string> free_family;
  auto* free_cmd = app.add_subcommand("check-free", "exit 0 iff the host contains no family member");
  free_cmd->add_option("--host", host_path, ".hg host")->required();
  free_cmd->add_option("--forbid", free_family, ".hg pattern (repeatable)")->required();

  SolveArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "exact Turán number by branch and bound");
  sol_cmd->add_option("-n", sol.n, "vertices")->required();
  sol_cmd->add_option("-r", sol.r, "uniformity")->required();
  sol_cmd->add_option("--forbid", sol.forbid, ".hg pattern (repeatable)");
  sol_cmd->add_option("--forbid-matching", sol.matching, "forbid s+1 disjoint edges");
  sol_cmd->add_option("--nodes", sol.nodes, "node budget (0 = none)");
  sol_cmd->add_option("--time", sol.time, "time budget in seconds (0 = none)");
  sol_cmd->add_option("--threads", sol.threads, "workers (default HGX_THREADS or 1)");
  sol_cmd->add_option("--symmetry", sol.symmetry, "root, degree or off");
  sol_cmd->add_flag("--no-theorem-bounds", sol.no_theorem_bounds, "do not prune with the matching formula");
  sol_cmd->add_flag("--no-hereditary", sol.no_hereditary, "do not bound through n-1");
  sol_cmd->add_option("--exceed", sol.exceed, "only look for more than this many edges");
  sol_cmd->add_option("--prev-upper", sol.prev_upper, "known bound on ex(n-1) instead of solving it");
  sol_cmd->add_option("--json", sol.json_path, "write the result");
  sol_cmd->add_option("-o,--out", sol.output, "write the witness .hg");

  std::string formula_id, formula_params;
  auto* fml_cmd = app.add_subcommand("formula", "evaluate a closed form exactly");
  fml_cmd->add_option("id", formula_id, "emc, chi3, gerbner, alon_frankl, two_chromatic_lower, two_chromatic_upper, f_wxyz, f_uxy, bla, expansion_bipartite, expansion_k_lt_r, large_q")->required();
  fml_cmd->add_option("--params", formula_params, "n=..,r=..,...")->required();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "check a theorem against the solver over a sweep");
  ver_cmd->add_option("theorem", ver.theorem, "emc, chi3, two_chromatic_bounds, expansion_bipartite, expansion_bipartite_large_p, expansion_k_lt_r")->required();
  ver_cmd->add_option("--r", ver.r, "uniformity")->required();
  ver_cmd->add_option("--s", ver.s, "s values, e.g. 1:2")->required();
  ver_cmd->add_option("--n", ver.n, "n values, e.g. 8:10")->required();
  ver_cmd->add_option("--in", ver.in, "pattern F (or graph G for expansion_*)");
  ver_cmd->add_option("--nodes", ver.nodes, "node budget per solve");
  ver_cmd->add_option("--time", ver.time, "time budget per solve in seconds");
  ver_cmd->add_option("--threads", ver.threads, "workers (default HGX_THREADS or 1)");
  ver_cmd->add_option("--json", ver.json_path, "write the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*inv_cmd) return invariant_cmd(inv, out);
    if (*exp_cmd) {
      const Hypergraph g = read_hg_file(exp_in);
      const Hypergraph h = expansion(g, exp_r);
      if (exp_out.empty()) write_hg(out, h);
      else write_hg_file(exp_out, h);
      return 0;
    }
    if (*con_cmd) return construct_cmd(con, out);
    if (*free_cmd) {
      const Hypergraph host = read_hg_file(host_path);
      std::vector<Hypergraph> family;
      for (const auto& p : free_family) family.push_back(read_hg_file(p));
      if (auto hit = first_contained(host, family)) {
        out << "contains " << free_family[*hit] << '\n';
        return 1;
      }
      out << "free\n";
      return 0;
    }
    if (*sol_cmd) return solve_cmd(sol, out);
    if (*fml_cmd) {
      const FormulaValue v = evaluate_formula(formula_id, parse_params(formula_params, "--params"));
      out << formula_id << " = " << to_string(v.value) << " (" << to_string(v.kind) << ")\n";
      return 0;
    }
    if (*ver_cmd) return verify_cmd(ver, args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hgx::cli
