#pragma once

#include <algorithm>
#include <vector>

#include "hgx/hypergraph.hpp"
#include "hgx/invariants.hpp"

namespace fx {

using hgx::Hypergraph;

inline Hypergraph triple() { return Hypergraph(3, 3, {{0, 1, 2}}); }
inline Hypergraph k2() { return Hypergraph(2, 2, {{0, 1}}); }
inline Hypergraph k3() { return Hypergraph(2, 3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Hypergraph c4() { return Hypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Hypergraph path3() { return Hypergraph(2, 3, {{0, 1}, {1, 2}}); }

inline Hypergraph cycle(int n) {
  std::vector<hgx::Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Hypergraph(2, n, e);
}

inline Hypergraph complete(int n, int r) {
  std::vector<hgx::VertexMask> e;
  for (hgx::VertexMask m = 0; m < (hgx::VertexMask{1} << n); ++m) {
    if (std::popcount(m) == r) e.push_back(m);
  }
  return Hypergraph::from_masks(r, n, e);
}

inline Hypergraph c4_cubed() { return hgx::expansion(c4(), 3); }
inline Hypergraph k4_cubed() { return hgx::expansion(complete(4, 2), 3); }
inline Hypergraph matching(int k, int r) {
  std::vector<hgx::Edge> e;
  for (int i = 0; i < k; ++i) {
    hgx::Edge x;
    for (int j = 0; j < r; ++j) x.push_back(i * r + j);
    e.push_back(x);
  }
  return Hypergraph(r, k * r, e);
}

// r-uniform star: every r-set through vertex 0.
inline Hypergraph star(int n, int r) {
  std::vector<hgx::VertexMask> e;
  for (hgx::VertexMask m = 0; m < (hgx::VertexMask{1} << n); ++m) {
    if ((m & 1) && std::popcount(m) == r) e.push_back(m);
  }
  return Hypergraph::from_masks(r, n, e);
}

}  // namespace fx
