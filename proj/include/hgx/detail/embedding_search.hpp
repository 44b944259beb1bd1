#pragma once

// Backtracking embedding kernel shared by the containment checks and the
// Turán solver. The host is any type providing
//   int order() const;
//   bool has_edge(VertexMask) const;
//   int degree(Vertex) const;
//   std::span<const VertexMask> incident(Vertex) const;

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx::detail {

struct PatternPlan {
  int r = 0;
  int n = 0;
  std::vector<VertexMask> edges;
  std::vector<int> degree;
  std::vector<std::vector<int>> incident;  // edge indices per vertex
  VertexMask isolated = 0;
  std::vector<Vertex> order;  // non-isolated vertices, most-constrained first

  explicit PatternPlan(const Hypergraph& f)
      : r(f.uniformity()), n(f.order()), edges(f.edge_masks().begin(), f.edge_masks().end()),
        degree(f.order(), 0), incident(f.order()) {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      for (Vertex v : vertices_of(edges[i])) {
        ++degree[v];
        incident[v].push_back(i);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] == 0) isolated |= bit(v);
      else order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  }
};

template <class Host>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const PatternPlan& plan, const Host& host) : p_(plan), h_(host) {}

  /// Attempts to complete the partial map (entries < 0 are free). Fixed
  /// entries must already be mutually consistent. On success the map holds
  /// images for every non-isolated vertex; isolated free vertices stay < 0.
  bool complete(std::vector<Vertex>& map) {
    if (p_.n > h_.order()) return false;
    map_ = map;
    used_ = 0;
    int free_isolated = 0;
    for (Vertex v = 0; v < p_.n; ++v) {
      if (map_[v] >= 0) used_ |= bit(map_[v]);
      else if ((p_.isolated >> v) & 1U) ++free_isolated;
    }
    steps_.clear();
    for (Vertex v : p_.order) {
      if (map_[v] < 0) steps_.push_back(v);
    }
    spare_needed_ = free_isolated;
    if (!extend(0)) return false;
    map = map_;
    return true;
  }

  /// Whether assigning pattern vertex pv to host vertex hv respects every
  /// pattern edge whose other assigned vertices are in the current map.
  bool consistent(const std::vector<Vertex>& map, Vertex pv, Vertex hv) const {
    if (h_.degree(hv) < p_.degree[pv]) return false;
    for (int ei : p_.incident[pv]) {
      VertexMask image = bit(hv);
      bool all = true;
      for (VertexMask x = p_.edges[ei] & ~bit(pv); x != 0; x &= x - 1) {
        const Vertex u = map[lowest(x)];
        if (u < 0) all = false;
        else image |= bit(u);
      }
      if (all) {
        if (!h_.has_edge(image)) return false;
      } else if (popcount(image) >= 2) {
        bool covered = false;
        for (VertexMask he : h_.incident(hv)) {
          if ((he & image) == image) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
    }
    return true;
  }

  /// Embeds with pattern edge fe mapped onto host edge he (all bijections).
  bool complete_through(int fe, VertexMask he, std::vector<Vertex>& map) {
    const Edge pv = vertices_of(p_.edges[fe]);
    Edge hv = vertices_of(he);
    do {
      std::vector<Vertex> trial(p_.n, -1);
      bool ok = true;
      for (std::size_t i = 0; i < pv.size() && ok; ++i) {
        ok = consistent(trial, pv[i], hv[i]);
        trial[pv[i]] = hv[i];
      }
      if (ok && complete(trial)) {
        map = std::move(trial);
        return true;
      }
    } while (std::next_permutation(hv.begin(), hv.end()));
    return false;
  }

 private:
  bool extend(std::size_t k) {
    if (k == steps_.size()) return h_.order() - popcount(used_) >= spare_needed_;
    const Vertex pv = steps_[k];
    VertexMask cand = candidates(pv) & ~used_;
    for (; cand != 0; cand &= cand - 1) {
      const Vertex hv = lowest(cand);
      if (!consistent(map_, pv, hv)) continue;
      map_[pv] = hv;
      used_ |= bit(hv);
      if (extend(k + 1)) return true;
      used_ &= ~bit(hv);
      map_[pv] = -1;
    }
    return false;
  }

  // Host vertices reachable through an edge shared with an assigned vertex.
  VertexMask candidates(Vertex pv) const {
    int best_edge = -1;
    int best_assigned = 0;
    for (int ei : p_.incident[pv]) {
      int assigned = 0;
      for (VertexMask x = p_.edges[ei]; x != 0; x &= x - 1) assigned += map_[lowest(x)] >= 0;
      if (assigned > best_assigned) {
        best_assigned = assigned;
        best_edge = ei;
      }
    }
    if (best_edge < 0) return full_mask(h_.order());
    VertexMask image = 0;
    Vertex anchor = -1;
    for (VertexMask x = p_.edges[best_edge]; x != 0; x &= x - 1) {
      const Vertex u = map_[lowest(x)];
      if (u >= 0) {
        image |= bit(u);
        anchor = u;
      }
    }
    VertexMask out = 0;
    for (VertexMask he : h_.incident(anchor)) {
      if ((he & image) == image) out |= he;
    }
    return out & ~image;
  }

  const PatternPlan& p_;
  const Host& h_;
  std::vector<Vertex> map_;
  std::vector<Vertex> steps_;
  VertexMask used_ = 0;
  int spare_needed_ = 0;
};

}  // namespace hgx::detail
