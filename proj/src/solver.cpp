#include "hgx/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <mutex>
#include <numeric>

#include "hgx/canonical.hpp"
#include "hgx/detail/embedding_search.hpp"
#include "hgx/embedding.hpp"
#include "hgx/formulas.hpp"
#include "hgx/invariants.hpp"

namespace hgx {

std::string to_string(ProofStatus status) { return status == ProofStatus::Optimal ? "optimal" : "bound_only"; }

std::string to_string(Symmetry mode) {
  switch (mode) {
    case Symmetry::Off: return "off";
    case Symmetry::Root: return "root";
    case Symmetry::DegreeOrder: return "degree";
  }
  return "?";
}

Symmetry parse_symmetry(const std::string& name) {
  if (name == "off") return Symmetry::Off;
  if (name == "root" || name == "on") return Symmetry::Root;
  if (name == "degree") return Symmetry::DegreeOrder;
  throw Error(ErrorCode::BadParams, "unknown symmetry mode `" + name + "` (off, root, degree)");
}

namespace {

constexpr std::size_t kMaxCandidates = 1 << 14;

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  /// First set index >= from, or -1.
  int next(std::size_t from) const {
    std::size_t w = from >> 6;
    if (w >= words_.size()) return -1;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
      if (++w == words_.size()) return -1;
      cur = words_[w];
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Pattern {
  detail::PatternPlan plan;
  std::vector<int> edge_reps;  // one pattern edge per automorphism orbit
  bool tabled = false;
};

// Copies of forbidden configurations inside K_n^r, as candidate indices.
struct CopyTable {
  std::vector<int> edges;
  std::vector<int> offset{0};
  std::vector<std::vector<int>> by_cand;

  std::size_t size() const { return offset.size() - 1; }
  std::span<const int> operator[](std::size_t c) const {
    return {edges.data() + offset[c], static_cast<std::size_t>(offset[c + 1] - offset[c])};
  }
};

constexpr std::size_t kMaxCopyEntries = std::size_t{1} << 23;

std::vector<int> edge_orbit_representatives(const Hypergraph& f) {
  const auto edges = f.edge_masks();
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : canonical_labeling(f).automorphisms) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      VertexMask img = 0;
      for (VertexMask x = edges[i]; x != 0; x &= x - 1) img |= bit(g[lowest(x)]);
      auto it = std::lower_bound(edges.begin(), edges.end(), img, lex_less);
      const int a = find(static_cast<int>(i)), b = find(static_cast<int>(it - edges.begin()));
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> reps;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(static_cast<int>(i));
  }
  return reps;
}

// Everything about an instance that stays fixed during the search.
struct Problem {
  int n = 0;
  int r = 0;
  std::vector<VertexMask> cand;  // lexicographic order
  std::vector<int> colex_to_index;
  std::vector<std::vector<long long>> binom;
  std::vector<Bits> by_vertex;
  std::vector<int> min_vertex;
  std::vector<Pattern> patterns;
  CopyTable copies;
  bool matching_tabled = false;
  bool hitting = false;  // every copy tabled and no vertex order imposed
  std::optional<int> s;
  std::optional<long long> theorem_cap;
  std::optional<long long> ex_prev;
  Symmetry symmetry = Symmetry::Root;
  bool all_forbidden = false;  // no single edge is allowed

  int index_of(VertexMask e) const {
    long long rank = 0;
    int i = 1;
    for (VertexMask x = e; x != 0; x &= x - 1, ++i) rank += binom[lowest(x)][i];
    return colex_to_index[rank];
  }
};

// All injective placements of f's non-isolated vertices, deduplicated by
// edge set. False when the table would be too large.
bool pattern_copies(const Problem& p, const Hypergraph& f, std::vector<std::vector<int>>& out) {
  std::vector<Vertex> verts;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (f.degree(v) > 0) verts.push_back(v);
  }
  double maps = 1;
  for (std::size_t i = 0; i < verts.size(); ++i) maps *= p.n - static_cast<double>(i);
  if (maps * static_cast<double>(f.size()) > 4.0 * kMaxCopyEntries) return false;

  const auto fe = f.edge_masks();
  std::vector<int> image(f.order(), -1);
  VertexMask used = 0;
  std::vector<std::vector<int>> all;
  auto place = [&](auto& self, std::size_t i) -> void {
    if (i == verts.size()) {
      std::vector<int> c;
      for (VertexMask e : fe) {
        VertexMask m = 0;
        for (VertexMask x = e; x != 0; x &= x - 1) m |= bit(image[lowest(x)]);
        c.push_back(p.index_of(m));
      }
      std::sort(c.begin(), c.end());
      all.push_back(std::move(c));
      return;
    }
    for (int v = 0; v < p.n; ++v) {
      if (used & bit(v)) continue;
      used |= bit(v);
      image[verts[i]] = v;
      self(self, i + 1);
      used &= ~bit(v);
    }
  };
  place(place, 0);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (auto& c : all) out.push_back(std::move(c));
  return true;
}

// All (s+1)-sets of pairwise disjoint candidates, or false past `limit`.
bool matching_copies(const Problem& p, int need, std::size_t limit, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::size_t found = 0;
  bool ok = true;
  auto grow = [&](auto& self, int from, VertexMask used) -> void {
    if (!ok) return;
    if (static_cast<int>(cur.size()) == need) {
      if (++found * need > limit) {
        ok = false;
        return;
      }
      out.push_back(cur);
      return;
    }
    for (int k = from; k < static_cast<int>(p.cand.size()); ++k) {
      if (p.cand[k] & used) continue;
      cur.push_back(k);
      self(self, k + 1, used | p.cand[k]);
      cur.pop_back();
    }
  };
  const std::size_t mark = out.size();
  grow(grow, 0, 0);
  if (!ok) out.resize(mark);
  return ok;
}

void build_copies(Problem& p, const std::vector<Hypergraph>& family) {
  std::vector<std::vector<int>> all;
  std::size_t k = 0;
  for (const Hypergraph& f : family) {
    if (f.order() > p.n || f.size() <= 1) continue;
    Pattern& pat = p.patterns[k++];
    const std::size_t mark = all.size();
    pat.tabled = pattern_copies(p, f, all);
    std::size_t entries = 0;
    for (const auto& c : all) entries += c.size();
    if (entries > kMaxCopyEntries) {
      all.resize(mark);
      pat.tabled = false;
    }
  }
  if (p.s && *p.s + 1 <= p.n / p.r) {
    std::size_t entries = 0;
    for (const auto& c : all) entries += c.size();
    p.matching_tabled = entries < kMaxCopyEntries && matching_copies(p, *p.s + 1, kMaxCopyEntries - entries, all);
  } else if (p.s) {
    p.matching_tabled = true;  // no (s+1)-matching fits
  }
  CopyTable& t = p.copies;
  t.by_cand.assign(p.cand.size(), {});
  for (const auto& c : all) {
    for (int e : c) t.by_cand[e].push_back(static_cast<int>(t.size()));
    t.edges.insert(t.edges.end(), c.begin(), c.end());
    t.offset.push_back(static_cast<int>(t.edges.size()));
  }
}

Problem prepare(int n, int r, const std::vector<Hypergraph>& family, const SearchOptions& opts) {
  if (r < 1) throw Error(ErrorCode::BadParams, "r must be at least 1");
  if (r > n) throw Error(ErrorCode::BadParams, "r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
  if (n > kMaxVertices) throw Error(ErrorCode::BadParams, "n is limited to 64");
  if (opts.forbid_matching && *opts.forbid_matching < 0) throw Error(ErrorCode::BadParams, "s must be >= 0");
  if (opts.threads < 1) throw Error(ErrorCode::BadParams, "threads must be positive");
  if (opts.time_budget.count() < 0) throw Error(ErrorCode::BadParams, "time budget must be positive");

  Problem p;
  p.n = n;
  p.r = r;
  p.symmetry = opts.symmetry;
  p.s = opts.forbid_matching;
  p.binom.assign(n + 1, std::vector<long long>(r + 2, 0));
  for (int a = 0; a <= n; ++a) {
    p.binom[a][0] = 1;
    for (int b = 1; b <= std::min(a, r + 1); ++b) p.binom[a][b] = p.binom[a - 1][b - 1] + (b <= a - 1 ? p.binom[a - 1][b] : 0);
  }
  if (p.binom[n][r] > static_cast<long long>(kMaxCandidates))
    throw Error(ErrorCode::BadParams, "C(n, r) = " + std::to_string(p.binom[n][r]) + " candidate edges exceeds the solver cap");

  // Candidates in lexicographic order.
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    p.cand.push_back(mask_of(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  p.colex_to_index.assign(p.cand.size(), -1);
  p.by_vertex.assign(n, Bits(p.cand.size()));
  for (std::size_t k = 0; k < p.cand.size(); ++k) {
    long long rank = 0;
    int i = 1;
    for (VertexMask x = p.cand[k]; x != 0; x &= x - 1, ++i) {
      rank += p.binom[lowest(x)][i];
      p.by_vertex[lowest(x)].set(k);
    }
    p.colex_to_index[rank] = static_cast<int>(k);
    p.min_vertex.push_back(lowest(p.cand[k]));
  }

  for (const Hypergraph& f : family) {
    if (f.uniformity() != r)
      throw Error(ErrorCode::UniformityMismatch, "family member is " + std::to_string(f.uniformity()) + "-uniform, expected " + std::to_string(r));
    if (f.order() > n) continue;  // cannot embed
    if (f.empty()) throw Error(ErrorCode::BadParams, "edgeless family member on " + std::to_string(f.order()) + " <= n vertices is contained in every r-graph");
    if (f.size() == 1) {
      p.all_forbidden = true;
      continue;
    }
    p.patterns.push_back(Pattern{detail::PatternPlan(f), edge_orbit_representatives(f)});
  }
  if (p.s && *p.s == 0) p.all_forbidden = true;
  if (p.s && opts.theorem_bounds && n >= (2LL * *p.s + 1) * r - *p.s)
    p.theorem_cap = to_ll(emc_formula(n, r, *p.s));
  if (!p.all_forbidden) build_copies(p, family);
  p.hitting = p.symmetry != Symmetry::DegreeOrder && (!p.s || p.matching_tabled) &&
              std::all_of(p.patterns.begin(), p.patterns.end(), [](const Pattern& pat) { return pat.tabled; });
  return p;
}

struct Shared {
  std::atomic<long long> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  std::mutex mu;
  long long witness_value = -1;
  std::size_t witness_task = 0;
  std::vector<VertexMask> witness;

  void offer(long long value, std::size_t task, const std::vector<VertexMask>& edges) {
    if (value < best.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(mu);
    if (value > witness_value || (value == witness_value && task < witness_task)) {
      witness_value = value;
      witness_task = task;
      witness = edges;
    }
    long long cur = best.load();
    while (cur < value && !best.compare_exchange_weak(cur, value)) {
    }
  }
};

// Host view of the partial solution for the embedding kernel.
class PartialHost {
 public:
  PartialHost(const Problem& p) : p_(p), in_(p.cand.size()), incident_(p.n) {}

  int order() const { return p_.n; }
  bool has_edge(VertexMask e) const { return in_.test(p_.index_of(e)); }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  std::span<const VertexMask> incident(Vertex v) const { return incident_[v]; }

  void push(int k) {
    in_.set(k);
    for (VertexMask x = p_.cand[k]; x != 0; x &= x - 1) incident_[lowest(x)].push_back(p_.cand[k]);
  }
  void pop(int k) {
    in_.reset(k);
    for (VertexMask x = p_.cand[k]; x != 0; x &= x - 1) incident_[lowest(x)].pop_back();
  }

 private:
  const Problem& p_;
  Bits in_;
  std::vector<std::vector<VertexMask>> incident_;
};

struct NodeState {
  std::vector<int> chosen;
  Bits alive;
  int pos = 0;
  int closed = 0;
};

class Search {
 public:
  Search(const Problem& p, Shared& shared, std::size_t task)
      : p_(p), shared_(shared), task_(task), host_(p), deg_(p.n, 0), in_(p.cand.size()), hits_(p.copies.size(), 0) {
    for (const Pattern& pat : p_.patterns) {
      if (!pat.tabled) kernels_.emplace_back(pat.plan, host_);
    }
  }

  NodeState root() const {
    NodeState st;
    st.alive = Bits(p_.cand.size());
    if (!p_.all_forbidden) {
      for (std::size_t k = 0; k < p_.cand.size(); ++k) st.alive.set(k);
    }
    return st;
  }

  void run(const NodeState& st) {
    for (int k : st.chosen) add(k);
    if (p_.hitting)
      hit(st.alive, 0);
    else
      dfs(st.alive, st.pos, st.closed, 0);
    for (auto it = st.chosen.rbegin(); it != st.chosen.rend(); ++it) remove(*it);
  }

  /// Subtrees left after `depth` branching decisions, in search order.
  std::vector<NodeState> split(const NodeState& st, int depth) {
    frontier_.clear();
    split_depth_ = depth;
    collecting_ = true;
    run(st);
    collecting_ = false;
    return std::move(frontier_);
  }

 private:
  void add(int k) {
    chosen_.push_back(k);
    edges_.push_back(p_.cand[k]);
    host_.push(k);
    in_.set(k);
    for (int c : p_.copies.by_cand[k]) ++hits_[c];
    for (VertexMask x = p_.cand[k]; x != 0; x &= x - 1) ++deg_[lowest(x)];
  }
  void remove(int k) {
    chosen_.pop_back();
    edges_.pop_back();
    host_.pop(k);
    in_.reset(k);
    for (int c : p_.copies.by_cand[k]) --hits_[c];
    for (VertexMask x = p_.cand[k]; x != 0; x &= x - 1) --deg_[lowest(x)];
  }

  bool out_of_budget() {
    if (shared_.stopped.load(std::memory_order_relaxed)) return true;
    const std::uint64_t count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.node_budget && count > shared_.node_budget) shared_.stopped = true;
    if (shared_.deadline && (count & 1023) == 0 && std::chrono::steady_clock::now() > *shared_.deadline)
      shared_.stopped = true;
    return shared_.stopped.load(std::memory_order_relaxed);
  }

  // Fixes degrees of vertices whose blocks are exhausted, enforces the degree
  // order and kills candidates at capped vertices. False when infeasible.
  bool settle(Bits& alive, int pos, int& closed) {
    if (p_.symmetry != Symmetry::DegreeOrder) {
      const int next = alive.next(pos);
      closed = next < 0 ? p_.n : std::max(closed, p_.min_vertex[next]);
      return true;
    }
    while (true) {
      const int next = alive.next(pos);
      const int vnext = next < 0 ? p_.n : p_.min_vertex[next];
      for (int v = std::max(closed, 1); v < vnext; ++v) {
        if (deg_[v] > deg_[v - 1]) return false;
      }
      closed = std::max(closed, vnext);
      if (closed == 0 || closed == p_.n) return true;
      const int cap = deg_[closed - 1];
      bool killed = false;
      for (int u = closed; u < p_.n; ++u) {
        if (deg_[u] > cap) return false;
        if (deg_[u] == cap && alive.intersects(p_.by_vertex[u])) {
          alive.subtract(p_.by_vertex[u]);
          killed = true;
        }
      }
      if (!killed) return true;
    }
  }

  long long bound(const Bits& alive, int closed, bool& feasible) const {
    long long b = static_cast<long long>(chosen_.size()) + alive.count();
    if (p_.theorem_cap) b = std::min(b, *p_.theorem_cap);
    int ub[kMaxVertices];
    for (int v = 0; v < p_.n; ++v) ub[v] = deg_[v] + (v < closed ? 0 : alive.count_and(p_.by_vertex[v]));
    long long sum = 0;
    int min_deg = INT_MAX;
    if (p_.symmetry == Symmetry::DegreeOrder) {
      int suffix = 0;
      for (int w = p_.n - 1; w >= closed; --w) {
        if (ub[w] < suffix) {
          feasible = false;
          return b;
        }
        suffix = std::max(suffix, deg_[w]);
      }
      int prefix = closed > 0 ? deg_[closed - 1] : INT_MAX;
      for (int v = 0; v < p_.n; ++v) {
        const int d = v < closed ? deg_[v] : (prefix = std::min(prefix, ub[v]));
        sum += d;
        min_deg = std::min(min_deg, d);
      }
    } else {
      for (int v = 0; v < p_.n; ++v) {
        sum += ub[v];
        min_deg = std::min(min_deg, ub[v]);
      }
    }
    b = std::min(b, sum / p_.r);
    if (p_.ex_prev) b = std::min(b, *p_.ex_prev + min_deg);
    return b;
  }

  // Copies lying inside chosen + alive each lose an alive edge; a greedy
  // family of such copies with disjoint alive parts bounds the loss.
  long long packing_bound(const Bits& alive, int* pick = nullptr) {
    const CopyTable& t = p_.copies;
    for (auto& b : buckets_) b.clear();
    for (std::size_t c = 0; c < t.size(); ++c) {
      int open = 0;
      bool live = true;
      for (int e : t[c]) {
        if (alive.test(e)) {
          ++open;
        } else if (!in_.test(e)) {
          live = false;
          break;
        }
      }
      if (!live || open == 0) continue;
      if (buckets_.size() <= static_cast<std::size_t>(open)) buckets_.resize(open + 1);
      buckets_[open].push_back(static_cast<int>(c));
    }
    if (pick) {
      *pick = -1;
      for (const auto& bucket : buckets_) {
        if (!bucket.empty()) {
          *pick = bucket.front();
          break;
        }
      }
    }
    Bits used(p_.cand.size());
    long long loss = 0;
    for (const auto& bucket : buckets_) {
      for (int c : bucket) {
        bool free = true;
        for (int e : t[c]) {
          if (alive.test(e) && used.test(e)) {
            free = false;
            break;
          }
        }
        if (!free) continue;
        for (int e : t[c]) {
          if (alive.test(e)) used.set(e);
        }
        ++loss;
      }
    }
    return static_cast<long long>(chosen_.size()) + alive.count() - loss;
  }

  // Whether some s-matching avoids `avoid`, using edges_[from..limit).
  bool has_matching(std::size_t from, std::size_t limit, VertexMask avoid, int need) const {
    for (std::size_t i = from; i < limit; ++i) {
      if (edges_[i] & avoid) continue;
      if (need == 1 || has_matching(i + 1, limit, avoid | edges_[i], need - 1)) return true;
    }
    return false;
  }

  // Candidate k after candidate j (the newest edge) joined: any new copy of a
  // forbidden configuration must use both.
  bool addable(int k, int j) {
    const VertexMask ek = p_.cand[k], ej = p_.cand[j];
    if (p_.s && !p_.matching_tabled && (ek & ej) == 0) {
      if (*p_.s == 1 || has_matching(0, edges_.size() - 1, ek | ej, *p_.s - 1)) return false;
    }
    if (kernels_.empty()) return true;
    host_.push(k);
    bool ok = true;
    std::vector<Vertex> map;
    for (std::size_t i = 0, q = 0; i < p_.patterns.size() && ok; ++i) {
      if (p_.patterns[i].tabled) continue;
      auto& kernel = kernels_[q++];
      for (int fe : p_.patterns[i].edge_reps) {
        if (kernel.complete_through(fe, ek, map)) {
          ok = false;
          break;
        }
      }
    }
    host_.pop(k);
    return ok;
  }

  // Kills the last open edge of every copy that `k` brought to one short.
  void propagate(Bits& alive, int k) const {
    for (int c : p_.copies.by_cand[k]) {
      const auto edges = p_.copies[c];
      if (hits_[c] + 1 != static_cast<int>(edges.size())) continue;
      for (int e : edges) {
        if (!in_.test(e)) alive.reset(e);
      }
    }
  }

  // Search used when every forbidden copy is tabled and vertex order is not
  // fixed: branch on the open edges of a smallest copy still in play, one of
  // which has to go.
  void hit(Bits alive, int depth) {
    if (out_of_budget()) return;
    const long long best = shared_.best.load(std::memory_order_relaxed);
    bool feasible = true;
    if (bound(alive, 0, feasible) <= best) return;
    int c = -1;
    if (packing_bound(alive, &c) <= best) return;
    if (c < 0) {
      std::vector<VertexMask> edges = edges_;
      for (int k = alive.next(0); k >= 0; k = alive.next(k + 1)) edges.push_back(p_.cand[k]);
      shared_.offer(static_cast<long long>(edges.size()), task_, edges);
      return;
    }
    if (collecting_ && depth == split_depth_) {
      frontier_.push_back(NodeState{chosen_, alive, 0, 0});
      return;
    }
    // Any non-empty graph has a relabeling containing {0..r-1}.
    if (p_.symmetry == Symmetry::Root && chosen_.empty() && alive.test(0)) {
      alive.reset(0);
      add(0);
      propagate(alive, 0);
      hit(alive, depth + 1);
      remove(0);
      return;
    }
    std::vector<int> open;
    for (int e : p_.copies[c]) {
      if (alive.test(e)) open.push_back(e);
    }
    std::size_t added = 0;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (!alive.test(open[i])) {
        hit(alive, depth + 1);
        break;
      }
      alive.reset(open[i]);
      hit(alive, depth + 1);
      if (i + 1 == open.size()) break;
      add(open[i]);
      ++added;
      propagate(alive, open[i]);
    }
    for (std::size_t i = added; i-- > 0;) remove(open[i]);
  }

  void dfs(Bits alive, int pos, int closed, int depth) {
    if (out_of_budget()) return;
    if (!settle(alive, pos, closed)) return;
    bool feasible = true;
    const long long b = bound(alive, closed, feasible);
    if (!feasible || b <= shared_.best.load(std::memory_order_relaxed)) return;
    if (p_.copies.size() > 0 && packing_bound(alive) <= shared_.best.load(std::memory_order_relaxed)) return;

    const int j = alive.next(pos);
    if (j < 0) {
      shared_.offer(static_cast<long long>(chosen_.size()), task_, edges_);
      return;
    }
    if (collecting_ && depth == split_depth_) {
      frontier_.push_back(NodeState{chosen_, alive, pos, closed});
      return;
    }

    alive.reset(j);
    {
      add(j);
      Bits with = alive;
      propagate(with, j);
      if (!kernels_.empty() || (p_.s && !p_.matching_tabled)) {
        for (int k = with.next(j + 1); k >= 0; k = with.next(k + 1)) {
          if (!addable(k, j)) with.reset(k);
        }
      }
      dfs(with, j + 1, closed, depth + 1);
      remove(j);
    }
    // Any non-empty graph has a relabeling containing {0..r-1}.
    if (p_.symmetry == Symmetry::Root && chosen_.empty() && j == 0) return;
    dfs(alive, j + 1, closed, depth + 1);
  }

  const Problem& p_;
  Shared& shared_;
  std::size_t task_;
  PartialHost host_;
  std::vector<detail::EmbeddingSearch<PartialHost>> kernels_;
  std::vector<int> chosen_;
  std::vector<VertexMask> edges_;
  std::vector<int> deg_;
  Bits in_;
  std::vector<int> hits_;
  std::vector<std::vector<int>> buckets_;

  bool collecting_ = false;
  int split_depth_ = 0;
  std::vector<NodeState> frontier_;
};

std::string family_text(const std::vector<Hypergraph>& family, const std::optional<int>& s, int r) {
  std::string out;
  for (const auto& f : family) out += (out.empty() ? "" : "; ") + describe(f);
  if (s) out += std::string(out.empty() ? "" : "; ") + "M_" + std::to_string(*s + 1) + "^" + std::to_string(r);
  return out;
}

using Kernel = void (*)(const Problem&, Shared&, int threads);

void serial_kernel(const Problem& p, Shared& shared, int) {
  Search search(p, shared, 0);
  search.run(search.root());
}

void parallel_kernel(const Problem& p, Shared& shared, int threads) {
  Search splitter(p, shared, 0);
  const int depth = static_cast<int>(std::ceil(std::log2(16.0 * threads)));
  std::vector<NodeState> tasks = splitter.split(splitter.root(), depth);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    Search search(p, shared, i + 1);
    search.run(tasks[i]);
  }
}

TuranResult solve(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts, Kernel kernel) {
  const auto start = std::chrono::steady_clock::now();
  Problem p = prepare(n, r, family, opts);

  Shared shared;
  shared.node_budget = opts.node_budget;
  if (opts.time_budget.count() > 0) shared.deadline = start + opts.time_budget;

  TuranResult result;
  result.n = n;
  result.r = r;
  result.family = family_text(family, opts.forbid_matching, r);

  std::optional<Hypergraph> warm = opts.warm_start;
  if (opts.prev_upper) {
    p.ex_prev = *opts.prev_upper;
  } else if (opts.hereditary_bound && n - 1 >= r && !p.all_forbidden) {
    SearchOptions sub = opts;
    sub.warm_start.reset();
    sub.exceed.reset();
    if (shared.deadline) {
      sub.time_budget = std::chrono::duration_cast<std::chrono::milliseconds>(*shared.deadline - std::chrono::steady_clock::now());
      if (sub.time_budget.count() <= 0) sub.time_budget = std::chrono::milliseconds(1);
    }
    TuranResult prev = solve(n - 1, r, family, sub, kernel);
    result.nodes += prev.nodes;
    if (prev.proof_status == ProofStatus::Optimal) p.ex_prev = prev.optimum;
    if (!warm || static_cast<long long>(warm->size()) < prev.optimum)
      warm = Hypergraph::from_masks(r, n, {prev.witness.edge_masks().begin(), prev.witness.edge_masks().end()});
  }

  if (warm) {
    if (warm->order() != n || warm->uniformity() != r) throw Error(ErrorCode::BadParams, "warm start has the wrong shape");
    std::vector<VertexMask> edges(warm->edge_masks().begin(), warm->edge_masks().end());
    shared.offer(static_cast<long long>(edges.size()), 0, edges);
  } else {
    shared.offer(0, 0, {});
  }

  if (opts.exceed && *opts.exceed > shared.best.load()) shared.best = *opts.exceed;

  kernel(p, shared, opts.threads);

  result.nodes += shared.nodes.load();
  result.optimum = shared.witness_value;
  result.witness = Hypergraph::from_masks(r, n, shared.witness);
  const bool complete = !shared.stopped.load();
  const long long floor = opts.exceed ? std::max(result.optimum, *opts.exceed) : result.optimum;
  if (complete) result.upper_bound = floor;
  result.proof_status = complete && floor == result.optimum ? ProofStatus::Optimal : ProofStatus::BoundOnly;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace

TuranResult max_edges_serial(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts) {
  return solve(n, r, family, std::move(opts), serial_kernel);
}

TuranResult max_edges_parallel(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts) {
  return solve(n, r, family, std::move(opts), parallel_kernel);
}

TuranResult max_edges(int n, int r, const std::vector<Hypergraph>& family, SearchOptions opts) {
  return opts.threads <= 1 ? max_edges_serial(n, r, family, std::move(opts)) : max_edges_parallel(n, r, family, std::move(opts));
}

CertificateCheck check_certificate(const TuranResult& result, const std::vector<Hypergraph>& family,
                                   std::optional<int> forbid_matching) {
  CertificateCheck out;
  auto fail = [&](const char* reason) {
    out.ok = false;
    out.reasons.emplace_back(reason);
  };
  const Hypergraph& w = result.witness;
  bool shape_ok = true;
  if (w.uniformity() != result.r) {
    fail("uniformity");
    shape_ok = false;
  }
  if (w.order() != result.n) fail("order");
  if (shape_ok) {
    for (const Hypergraph& f : family) {
      if (f.uniformity() != w.uniformity()) {
        fail("uniformity");
        shape_ok = false;
        break;
      }
    }
  }
  if (shape_ok && !is_free(w, family)) fail("forbidden_pattern");
  if (forbid_matching && matching_number(w) > *forbid_matching) fail("matching_too_large");
  if (static_cast<long long>(w.size()) != result.optimum) fail("count_mismatch");
  return out;
}

}  // namespace hgx
