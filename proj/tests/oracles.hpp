// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Hypergraph container, and every answer is
// read straight off the definitions.
#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hgx/canonical.hpp"
#include "hgx/hypergraph.hpp"

namespace oracle {

using hgx::Hypergraph;
using hgx::VertexMask;
using Masks = std::vector<VertexMask>;

inline Masks edges_of(const Hypergraph& h) { return {h.edge_masks().begin(), h.edge_masks().end()}; }

inline bool independent(const Masks& edges, VertexMask s) {
  for (VertexMask e : edges) {
    if ((e & s) == e) return false;
  }
  return true;
}

// Every injective map of pattern vertices into host vertices, tried one by one.
inline bool contains(const Hypergraph& host, const Hypergraph& pattern) {
  const int k = pattern.order(), n = host.order();
  if (k > n) return false;
  std::set<VertexMask> host_edges(host.edge_masks().begin(), host.edge_masks().end());
  // Choose the image set, then every ordering of it.
  for (VertexMask img = 0; img < (VertexMask{1} << n); ++img) {
    if (std::popcount(img) != k) continue;
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v) {
      if (img >> v & 1) chosen.push_back(v);
    }
    do {
      bool ok = true;
      for (VertexMask e : pattern.edge_masks()) {
        VertexMask m = 0;
        for (int v = 0; v < k; ++v) {
          if (e >> v & 1) m |= VertexMask{1} << chosen[v];
        }
        if (!host_edges.count(m)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return false;
}

// Every set of pairwise disjoint edges, grown one edge at a time.
inline int matching_number(const Hypergraph& h) {
  const Masks e = edges_of(h);
  int best = 0;
  auto grow = [&](auto& self, std::size_t from, VertexMask used, int size) -> void {
    best = std::max(best, size);
    for (std::size_t i = from; i < e.size(); ++i) {
      if (!(used & e[i])) self(self, i + 1, used | e[i], size + 1);
    }
  };
  grow(grow, 0, 0, 0);
  return best;
}

// Fewest weakly independent classes covering V, by subset DP.
inline int chromatic_number(const Hypergraph& h) {
  const int n = h.order();
  const Masks e = edges_of(h);
  const VertexMask full = (VertexMask{1} << n) - 1;
  std::vector<int> dp(std::size_t{1} << n, INT_MAX);
  dp[0] = 0;
  for (VertexMask s = 1; s <= full; ++s) {
    const VertexMask low = s & (~s + 1);
    // Sub-masks of s that contain its lowest vertex and span no edge.
    for (VertexMask t = s; t; t = (t - 1) & s) {
      if (!(t & low) || !independent(e, t) || dp[s & ~t] == INT_MAX) continue;
      dp[s] = std::min(dp[s], dp[s & ~t] + 1);
    }
  }
  return n == 0 ? 1 : std::max(1, dp[full]);
}

// Red set R with both R and its complement weakly independent, minimum |R|.
inline std::optional<int> p_value(const Hypergraph& h) {
  const Masks e = edges_of(h);
  const VertexMask full = (VertexMask{1} << h.order()) - 1;
  std::optional<int> best;
  for (VertexMask red = 0; red <= full; ++red) {
    if (independent(e, red) && independent(e, full & ~red)) {
      if (!best || std::popcount(red) < *best) best = std::popcount(red);
    }
  }
  return best;
}

inline std::optional<int> q_value(const Hypergraph& h) {
  const VertexMask full = (VertexMask{1} << h.order()) - 1;
  std::optional<int> best;
  for (VertexMask red = 0; red <= full; ++red) {
    bool ok = true;
    for (VertexMask x : h.edge_masks()) {
      if (std::popcount(x & red) != 1) {
        ok = false;
        break;
      }
    }
    if (ok && (!best || std::popcount(red) < *best)) best = std::popcount(red);
  }
  return best;
}

inline int m_value(const Hypergraph& g) {
  const Masks e = edges_of(g);
  const VertexMask full = (VertexMask{1} << g.order()) - 1;
  int best = INT_MAX;
  for (VertexMask w = 0; w <= full; ++w) {
    if (!independent(e, w)) continue;
    int untouched = 0;
    for (VertexMask x : e) untouched += (x & w) == 0;
    best = std::min(best, std::popcount(w) + untouched);
  }
  return best;
}

inline Hypergraph minus(const Hypergraph& g, VertexMask u, const Masks& drop) {
  Masks kept;
  for (VertexMask x : g.edge_masks()) {
    if ((x & u) == 0 && std::find(drop.begin(), drop.end(), x) == drop.end()) kept.push_back(x);
  }
  // Vertices of U stay as isolated ones; that does not change chi.
  return Hypergraph::from_masks(g.uniformity(), g.order(), kept);
}

// Straight from the definition: every independent U, every edge subset Z.
// Only for graphs with few edges.
inline int m_prime_literal(const Hypergraph& g) {
  const int k = oracle::chromatic_number(g);
  const Masks e = edges_of(g);
  const VertexMask full = (VertexMask{1} << g.order()) - 1;
  int best = INT_MAX;
  for (VertexMask u = 0; u <= full; ++u) {
    if (!independent(e, u)) continue;
    Masks rest;
    for (VertexMask x : e) {
      if ((x & u) == 0) rest.push_back(x);
    }
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << rest.size()); ++z) {
      if (std::popcount(z) >= best) continue;
      Masks drop;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (z >> i & 1) drop.push_back(rest[i]);
      }
      if (oracle::chromatic_number(oracle::minus(g, u, drop)) == k - 2) best = std::popcount(z);
    }
  }
  return best;
}

// Same quantity via colourings: for fixed U the cheapest Z is the set of
// monochromatic edges of the best (k-2)-colouring of V - U (removing edges one
// at a time lowers chi by at most one, so "= k-2" and "<= k-2" agree).
inline int m_prime_by_colourings(const Hypergraph& g) {
  const int k = oracle::chromatic_number(g);
  const int n = g.order(), c = k - 2;
  const Masks e = edges_of(g);
  const VertexMask full = (VertexMask{1} << n) - 1;
  int best = INT_MAX;
  for (VertexMask u = 0; u <= full; ++u) {
    if (!independent(e, u)) continue;
    std::vector<int> col(n, 0);
    while (true) {
      int mono = 0;
      for (VertexMask x : e) {
        if (x & u) continue;
        int a = -1;
        bool same = true;
        for (int v = 0; v < n; ++v) {
          if (!(x >> v & 1)) continue;
          if (a < 0) a = col[v];
          else if (col[v] != a) same = false;
        }
        mono += same;
      }
      best = std::min(best, mono);
      int i = 0;
      while (i < n && (u >> i & 1 || ++col[i] == c)) {
        col[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return best;
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Maximum edges over all 2^C(n,r) edge sets avoiding every pattern and, if
// given, s+1 disjoint edges.
inline int turan(int n, int r, const std::vector<Hypergraph>& family, std::optional<int> s) {
  Masks all;
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    if (std::popcount(m) == r) all.push_back(m);
  }
  int best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << all.size()); ++sub) {
    if (std::popcount(sub) <= best) continue;
    Masks chosen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (sub >> i & 1) chosen.push_back(all[i]);
    }
    const Hypergraph h = Hypergraph::from_masks(r, n, chosen);
    if (s && oracle::matching_number(h) > *s) continue;
    bool ok = true;
    for (const auto& f : family) {
      if (oracle::contains(h, f)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::popcount(sub);
  }
  return best;
}

// All non-isomorphic graphs on exactly n vertices, grown edge by edge and
// deduplicated by canonical form.
inline std::vector<Hypergraph> all_graphs(int n) {
  std::set<hgx::CanonicalForm> seen;
  std::vector<Hypergraph> level = {Hypergraph(2, n)}, out;
  seen.insert(hgx::canonical_form(level[0]));
  while (!level.empty()) {
    std::vector<Hypergraph> next;
    for (const auto& g : level) {
      out.push_back(g);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          const VertexMask e = (VertexMask{1} << a) | (VertexMask{1} << b);
          if (g.has_edge(e)) continue;
          Hypergraph h = g.with_edges(std::vector<VertexMask>{e});
          if (seen.insert(hgx::canonical_form(h)).second) next.push_back(std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

inline std::vector<Hypergraph> graph_corpus(int max_n = 7) {
  std::vector<Hypergraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto g = all_graphs(n);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

// Seeded random 3-graphs on 4..10 vertices, none edgeless.
inline std::vector<Hypergraph> random_3graphs(int count = 50, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<Hypergraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
    std::bernoulli_distribution keep(density);
    Masks e;
    for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
      if (std::popcount(m) == 3 && keep(rng)) e.push_back(m);
    }
    if (e.empty() || e.size() > 24) continue;
    out.push_back(Hypergraph::from_masks(3, n, e));
  }
  return out;
}

}  // namespace oracle
