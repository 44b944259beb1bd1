#include "hgx/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hgx {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadParams, what); }

// Calls fn for every k-subset of pool (as a mask), in lexicographic order.
void for_each_subset(VertexMask pool, int k, const std::function<void(VertexMask)>& fn) {
  const Edge items = vertices_of(pool);
  if (k < 0 || k > static_cast<int>(items.size())) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(items.size());
  for (;;) {
    VertexMask m = 0;
    for (int i : idx) m |= bit(items[i]);
    fn(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Every t-set with at most one vertex per part; parts are consecutive label
// ranges starting at offset.
std::vector<VertexMask> multipartite_edges(const std::vector<int>& parts, int t, Vertex offset) {
  std::vector<VertexMask> out;
  std::vector<std::pair<Vertex, Vertex>> ranges;
  Vertex start = offset;
  for (int size : parts) {
    ranges.emplace_back(start, start + size);
    start += size;
  }
  auto recurse = [&](auto&& self, std::size_t part, int left, VertexMask acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    if (ranges.size() - part < static_cast<std::size_t>(left)) return;
    for (Vertex v = ranges[part].first; v < ranges[part].second; ++v) self(self, part + 1, left - 1, acc | bit(v));
    self(self, part + 1, left, acc);
  };
  if (t >= 1) recurse(recurse, 0, t, 0);
  return out;
}

VertexMask range_mask(Vertex from, Vertex to) {
  VertexMask m = 0;
  for (Vertex v = from; v < to; ++v) m |= bit(v);
  return m;
}

// Vertex sets joined to a fixed list of (r-1)-sets.
void join(std::vector<VertexMask>& edges, VertexMask apex, const std::vector<VertexMask>& bases) {
  for (VertexMask a = apex; a != 0; a &= a - 1) {
    for (VertexMask b : bases) edges.push_back(bit(lowest(a)) | b);
  }
}

std::vector<VertexMask> all_subsets(VertexMask pool, int k) {
  std::vector<VertexMask> out;
  for_each_subset(pool, k, [&](VertexMask m) { out.push_back(m); });
  return out;
}

// Balanced (k-1)-partition of d and its coarsening into k-2 parts by merging
// the two smallest (last) parts.
std::pair<std::vector<int>, std::vector<int>> nested_partitions(int d, int k) {
  std::vector<int> fine = balanced_parts(d, k - 1);
  std::vector<int> coarse(fine.begin(), fine.end() - 1);
  coarse.back() += fine.back();
  return {fine, coarse};
}

void check_capacity(long long n) {
  if (n > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, "at most 64 vertices, got " + std::to_string(n));
}

}  // namespace

std::vector<int> balanced_parts(int total, int count) {
  std::vector<int> parts(count, count > 0 ? total / count : 0);
  for (int i = 0; i < (count > 0 ? total % count : 0); ++i) ++parts[i];
  return parts;
}

Hypergraph turan_graph(int n, int l) {
  if (n < 0 || l < 1) bad("turan_graph needs n >= 0 and l >= 1");
  check_capacity(n);
  return Hypergraph::from_masks(2, n, multipartite_edges(balanced_parts(n, l), 2, 0));
}

Hypergraph g_nls(int n, int l, int s) {
  if (l < 2 || s < 0 || s >= n) throw Error(ErrorCode::BadPartition, "G(n,l,s) needs l >= 2 and 0 <= s < n");
  check_capacity(n);
  std::vector<int> parts = balanced_parts(s, l - 1);
  parts.push_back(n - s);
  return Hypergraph::from_masks(2, n, multipartite_edges(parts, 2, 0));
}

Hypergraph a_nrs(int n, int r, int s) {
  if (s < 0 || s > n || r < 1) bad("A(n,r,s) needs 0 <= s <= n and r >= 1");
  if (r > n) throw Error(ErrorCode::ArityExceedsVertices, "r > n");
  check_capacity(n);
  std::vector<VertexMask> edges;
  const VertexMask core = range_mask(0, s);
  for_each_subset(full_mask(n), r, [&](VertexMask e) {
    if (e & core) edges.push_back(e);
  });
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph crosscut_star(int n, int r, int a) {
  if (a < 0 || a > n || r < 1) bad("crosscut_star needs 0 <= a <= n and r >= 1");
  if (r > n - a + 1) throw Error(ErrorCode::ArityExceedsVertices, "r > n - a + 1");
  check_capacity(n);
  std::vector<VertexMask> edges;
  join(edges, range_mask(0, a), all_subsets(range_mask(a, n), r - 1));
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph core_cover(const Hypergraph& core, int n, int r) {
  if (core.uniformity() != r)
    throw Error(ErrorCode::UniformityMismatch, "core is " + std::to_string(core.uniformity()) + "-uniform");
  const int s = core.order();
  if (s > n) bad("core larger than n");
  check_capacity(n);
  std::vector<VertexMask> edges(core.edge_masks().begin(), core.edge_masks().end());
  const VertexMask inside = range_mask(0, s);
  for_each_subset(full_mask(n), r, [&](VertexMask e) {
    const int k = popcount(e & inside);
    if (k >= 1 && k <= r - 1) edges.push_back(e);
  });
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph h_i_construction(int n, int s, int i, int l) {
  if (i < 1 || i > s || l < 2 || n <= s) bad("H_i needs 1 <= i <= s < n and l >= 2");
  check_capacity(n);
  std::vector<VertexMask> edges;
  join(edges, range_mask(0, i - 1), all_subsets(range_mask(s, n), 2));
  join(edges, range_mask(i - 1, s), multipartite_edges(balanced_parts(n - s, l - 1), 2, s));
  return Hypergraph::from_masks(3, n, std::move(edges));
}

Hypergraph g1(int n, int r, int m) {
  if (m < 1 || r < 2 || n < m - 1 + r - 1) bad("G1 needs m >= 1, r >= 2 and n >= m + r - 2");
  check_capacity(n);
  std::vector<VertexMask> edges;
  join(edges, range_mask(0, m - 1), all_subsets(range_mask(m - 1, n), r - 1));
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph g1_prime(int n, int r, int k, int w, int x, int y, int z) {
  if (k < 3 || r < 3 || w < 0 || x < 0 || y < 0 || z < 0 || w + z < 1) bad("G1' needs k, r >= 3, sizes >= 0, w + z >= 1");
  const int a = w + z - 1;
  const int d = n - w - x - y - z + 1;
  if (d < 1) bad("G1' needs n > w + x + y + z - 1");
  check_capacity(n);
  const Vertex d0 = a + x + y;
  const auto [fine, coarse] = nested_partitions(d, k);
  std::vector<VertexMask> edges;
  join(edges, range_mask(a, a + x), all_subsets(range_mask(d0, n), r - 1));
  join(edges, range_mask(0, a), multipartite_edges(coarse, r - 1, d0));
  join(edges, range_mask(a + x, a + x + y), multipartite_edges(fine, r - 1, d0));
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph g2(int n, int r, int s, int mprime, int k) {
  if (mprime < 1 || s < mprime - 1 || k < 3 || r < 2 || n <= s) bad("G2 needs m' >= 1, s >= m' - 1, k >= 3, n > s");
  check_capacity(n);
  std::vector<VertexMask> edges;
  join(edges, range_mask(0, mprime - 1), all_subsets(range_mask(s, n), r - 1));
  join(edges, range_mask(mprime - 1, s), multipartite_edges(balanced_parts(n - s, k - 2), r - 1, s));
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph g2_prime(int n, int r, int s, int k, int x, int y) {
  if (k < 3 || y < 1 || x < 0 || r < 2 || n <= s) bad("G2' needs k >= 3, y >= 1, x >= 0, n > s");
  if (s < x + y - 1) bad("G2' needs s >= x + y - 1");
  check_capacity(n);
  const auto [fine, coarse] = nested_partitions(n - s, k);
  std::vector<VertexMask> edges;
  join(edges, range_mask(0, x), all_subsets(range_mask(s, n), r - 1));
  join(edges, range_mask(x, x + y - 1), multipartite_edges(fine, r - 1, s));
  join(edges, range_mask(x + y - 1, s), multipartite_edges(coarse, r - 1, s));
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph complete_multipartite_uniform(const std::vector<int>& parts, int r) {
  if (r < 1) bad("r >= 1");
  long long n = 0;
  for (int p : parts) {
    if (p < 0) bad("part sizes must be non-negative");
    n += p;
  }
  check_capacity(n);
  return Hypergraph::from_masks(r, static_cast<int>(n), multipartite_edges(parts, r, 0));
}

ConstructionKind parse_construction(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c != '_' && c != '-') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "turangraph" || key == "turan") return ConstructionKind::TuranGraph;
  if (key == "gnls") return ConstructionKind::GNls;
  if (key == "anrs") return ConstructionKind::ANrs;
  if (key == "crosscutstar") return ConstructionKind::CrosscutStar;
  if (key == "corecover") return ConstructionKind::CoreCover;
  if (key == "hi") return ConstructionKind::Hi;
  if (key == "g1") return ConstructionKind::G1;
  if (key == "g1prime") return ConstructionKind::G1Prime;
  if (key == "g2") return ConstructionKind::G2;
  if (key == "g2prime") return ConstructionKind::G2Prime;
  if (key == "completemultipartiteuniform" || key == "multipartite") return ConstructionKind::CompleteMultipartite;
  bad("unknown construction `" + name + "`");
}

std::string construction_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::TuranGraph: return "turan_graph";
    case ConstructionKind::GNls: return "G_nls";
    case ConstructionKind::ANrs: return "A_nrs";
    case ConstructionKind::CrosscutStar: return "crosscut_star";
    case ConstructionKind::CoreCover: return "core_cover";
    case ConstructionKind::Hi: return "H_i";
    case ConstructionKind::G1: return "G1";
    case ConstructionKind::G1Prime: return "G1prime";
    case ConstructionKind::G2: return "G2";
    case ConstructionKind::G2Prime: return "G2prime";
    case ConstructionKind::CompleteMultipartite: return "complete_multipartite_uniform";
  }
  return "?";
}

std::vector<std::string> construction_params(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::TuranGraph: return {"n", "l"};
    case ConstructionKind::GNls: return {"n", "l", "s"};
    case ConstructionKind::ANrs: return {"n", "r", "s"};
    case ConstructionKind::CrosscutStar: return {"n", "r", "a"};
    case ConstructionKind::CoreCover: return {"n", "r"};
    case ConstructionKind::Hi: return {"n", "s", "i", "l"};
    case ConstructionKind::G1: return {"n", "r", "m"};
    case ConstructionKind::G1Prime: return {"n", "r", "k", "w", "x", "y", "z"};
    case ConstructionKind::G2: return {"n", "r", "s", "mprime", "k"};
    case ConstructionKind::G2Prime: return {"n", "r", "s", "k", "x", "y"};
    case ConstructionKind::CompleteMultipartite: return {"r"};
  }
  return {};
}

namespace {

int param(const ConstructionSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) bad(construction_name(spec.kind) + " needs parameter `" + key + "`");
  if (it->second < std::numeric_limits<int>::min() || it->second > std::numeric_limits<int>::max())
    bad("parameter `" + key + "` out of range");
  return static_cast<int>(it->second);
}

const Hypergraph& core_of(const ConstructionSpec& spec) {
  if (!spec.core) bad("core_cover needs a core hypergraph");
  return *spec.core;
}

}  // namespace

Hypergraph build(const ConstructionSpec& spec) {
  auto p = [&](const char* key) { return param(spec, key); };
  switch (spec.kind) {
    case ConstructionKind::TuranGraph: return turan_graph(p("n"), p("l"));
    case ConstructionKind::GNls: return g_nls(p("n"), p("l"), p("s"));
    case ConstructionKind::ANrs: return a_nrs(p("n"), p("r"), p("s"));
    case ConstructionKind::CrosscutStar: return crosscut_star(p("n"), p("r"), p("a"));
    case ConstructionKind::CoreCover: return core_cover(core_of(spec), p("n"), p("r"));
    case ConstructionKind::Hi: return h_i_construction(p("n"), p("s"), p("i"), p("l"));
    case ConstructionKind::G1: return g1(p("n"), p("r"), p("m"));
    case ConstructionKind::G1Prime: return g1_prime(p("n"), p("r"), p("k"), p("w"), p("x"), p("y"), p("z"));
    case ConstructionKind::G2: return g2(p("n"), p("r"), p("s"), p("mprime"), p("k"));
    case ConstructionKind::G2Prime: return g2_prime(p("n"), p("r"), p("s"), p("k"), p("x"), p("y"));
    case ConstructionKind::CompleteMultipartite: return complete_multipartite_uniform(spec.parts, p("r"));
  }
  bad("unknown construction");
}

Integer count_edges(const ConstructionSpec& spec) {
  auto p = [&](const char* key) { return param(spec, key); };
  switch (spec.kind) {
    case ConstructionKind::TuranGraph: {
      const int n = p("n"), l = p("l");
      if (n < 0 || l < 1) bad("turan_graph needs n >= 0 and l >= 1");
      return multipartite_count(balanced_parts(n, l), 2);
    }
    case ConstructionKind::GNls: {
      const int n = p("n"), l = p("l"), s = p("s");
      if (l < 2 || s < 0 || s >= n) throw Error(ErrorCode::BadPartition, "G(n,l,s) needs l >= 2 and 0 <= s < n");
      auto parts = balanced_parts(s, l - 1);
      parts.push_back(n - s);
      return multipartite_count(parts, 2);
    }
    case ConstructionKind::ANrs: {
      const int n = p("n"), r = p("r"), s = p("s");
      if (s < 0 || s > n || r < 1) bad("A(n,r,s) needs 0 <= s <= n and r >= 1");
      if (r > n) throw Error(ErrorCode::ArityExceedsVertices, "r > n");
      return binomial(n, r) - binomial(n - s, r);
    }
    case ConstructionKind::CrosscutStar: {
      const int n = p("n"), r = p("r"), a = p("a");
      if (a < 0 || a > n || r < 1) bad("crosscut_star needs 0 <= a <= n and r >= 1");
      if (r > n - a + 1) throw Error(ErrorCode::ArityExceedsVertices, "r > n - a + 1");
      return a * binomial(n - a, r - 1);
    }
    case ConstructionKind::CoreCover: {
      const Hypergraph& core = core_of(spec);
      const int n = p("n"), r = p("r"), s = core.order();
      if (core.uniformity() != r) throw Error(ErrorCode::UniformityMismatch, "core uniformity differs from r");
      if (s > n) bad("core larger than n");
      Integer total = core.size();
      for (int i = 1; i <= std::min(s, r - 1); ++i) total += binomial(s, i) * binomial(n - s, r - i);
      return total;
    }
    case ConstructionKind::Hi: {
      const int n = p("n"), s = p("s"), i = p("i"), l = p("l");
      if (i < 1 || i > s || l < 2 || n <= s) bad("H_i needs 1 <= i <= s < n and l >= 2");
      return (i - 1) * binomial(n - s, 2) + (s - i + 1) * multipartite_count(balanced_parts(n - s, l - 1), 2);
    }
    case ConstructionKind::G1: {
      const int n = p("n"), r = p("r"), m = p("m");
      if (m < 1 || r < 2 || n < m - 1 + r - 1) bad("G1 needs m >= 1, r >= 2 and n >= m + r - 2");
      return (m - 1) * binomial(n - m + 1, r - 1);
    }
    case ConstructionKind::G1Prime: {
      const int n = p("n"), r = p("r"), k = p("k"), w = p("w"), x = p("x"), y = p("y"), z = p("z");
      if (k < 3 || r < 3 || w < 0 || x < 0 || y < 0 || z < 0 || w + z < 1) bad("G1' needs k, r >= 3, sizes >= 0, w + z >= 1");
      const int d = n - w - x - y - z + 1;
      if (d < 1) bad("G1' needs n > w + x + y + z - 1");
      const auto [fine, coarse] = nested_partitions(d, k);
      return x * binomial(d, r - 1) + (w + z - 1) * multipartite_count(coarse, r - 1) +
             y * multipartite_count(fine, r - 1);
    }
    case ConstructionKind::G2: {
      const int n = p("n"), r = p("r"), s = p("s"), mp = p("mprime"), k = p("k");
      if (mp < 1 || s < mp - 1 || k < 3 || r < 2 || n <= s) bad("G2 needs m' >= 1, s >= m' - 1, k >= 3, n > s");
      return (mp - 1) * binomial(n - s, r - 1) + (s - mp + 1) * multipartite_count(balanced_parts(n - s, k - 2), r - 1);
    }
    case ConstructionKind::G2Prime: {
      const int n = p("n"), r = p("r"), s = p("s"), k = p("k"), x = p("x"), y = p("y");
      if (k < 3 || y < 1 || x < 0 || r < 2 || n <= s) bad("G2' needs k >= 3, y >= 1, x >= 0, n > s");
      if (s < x + y - 1) bad("G2' needs s >= x + y - 1");
      const auto [fine, coarse] = nested_partitions(n - s, k);
      return x * binomial(n - s, r - 1) + (y - 1) * multipartite_count(fine, r - 1) +
             (s - x - y + 1) * multipartite_count(coarse, r - 1);
    }
    case ConstructionKind::CompleteMultipartite: {
      const int r = p("r");
      if (r < 1) bad("r >= 1");
      return multipartite_count(spec.parts, r);
    }
  }
  bad("unknown construction");
}

}  // namespace hgx
