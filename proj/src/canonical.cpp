#include "hgx/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hgx {

namespace {

using Colors = std::vector<int>;

class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.order()), incident_(h.order()) {
    if (h.uniformity() > 11)
      throw Error(ErrorCode::CapacityExceeded, "canonical form supports uniformity <= 11");
    for (VertexMask e : h.edge_masks()) {
      for (VertexMask x = e; x != 0; x &= x - 1) incident_[lowest(x)].push_back(e);
    }
  }

  CanonicalLabeling run() {
    Colors colors(n_, 0);
    refine(colors);
    std::vector<Vertex> path;
    search(colors, path);
    CanonicalLabeling out;
    out.form = CanonicalForm{h_.uniformity(), n_, best_cert_};
    out.labeling = best_lab_;
    out.automorphisms = autos_;
    return out;
  }

 private:
  int cell_count(const Colors& c) const { return n_ == 0 ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

  // Replaces colours by the rank of key(v) among all keys; keys must extend
  // the current colour as their leading component so cell order is kept.
  template <class Key>
  void rerank(Colors& colors, const std::vector<Key>& keys) const {
    std::vector<Vertex> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
    int rank = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++rank;
      colors[idx[i]] = rank;
    }
  }

  void refine(Colors& colors) const {
    using Key = std::pair<int, std::vector<std::uint64_t>>;
    int cells = cell_count(colors);
    for (;;) {
      std::vector<Key> keys(n_);
      for (Vertex v = 0; v < n_; ++v) {
        keys[v].first = colors[v];
        auto& sig = keys[v].second;
        sig.reserve(incident_[v].size());
        for (VertexMask e : incident_[v]) {
          int others[64];
          int k = 0;
          for (VertexMask x = e & ~bit(v); x != 0; x &= x - 1) others[k++] = colors[lowest(x)];
          std::sort(others, others + k);
          std::uint64_t packed = 0;
          for (int i = 0; i < k; ++i) packed = (packed << 6) | static_cast<std::uint64_t>(others[i]);
          sig.push_back(packed);
        }
        std::sort(sig.begin(), sig.end());
      }
      rerank(colors, keys);
      const int next = cell_count(colors);
      if (next == cells) return;
      cells = next;
    }
  }

  void individualize(Colors& colors, Vertex v) const {
    std::vector<std::pair<int, int>> keys(n_);
    for (Vertex w = 0; w < n_; ++w) keys[w] = {colors[w], w == v ? 0 : 1};
    rerank(colors, keys);
    refine(colors);
  }

  std::vector<VertexMask> certificate(const Colors& lab) const {
    std::vector<VertexMask> cert;
    cert.reserve(h_.size());
    for (VertexMask e : h_.edge_masks()) {
      VertexMask m = 0;
      for (VertexMask x = e; x != 0; x &= x - 1) m |= bit(lab[lowest(x)]);
      cert.push_back(m);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  void record_automorphism(const Colors& reference, const Colors& lab) {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[reference[v]] = v;
    std::vector<Vertex> sigma(n_);
    for (Vertex v = 0; v < n_; ++v) sigma[v] = inv[lab[v]];
    bool identity = true;
    for (Vertex v = 0; v < n_ && identity; ++v) identity = sigma[v] == v;
    if (!identity) autos_.push_back(std::move(sigma));
  }

  void leaf(const Colors& lab) {
    auto cert = certificate(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (cert == first_cert_) record_automorphism(first_lab_, lab);
    else if (cert == best_cert_) record_automorphism(best_lab_, lab);
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
  }

  // Union-find roots under the automorphisms fixing every vertex of path.
  std::vector<Vertex> orbits(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& g : autos_) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex p) { return g[p] == p; })) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Colors& colors, std::vector<Vertex>& path) {
    // Target cell: lowest-coloured non-singleton cell.
    std::vector<int> size(n_ + 1, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty()) {
        const auto roots = orbits(path);
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return roots[u] == roots[v]; })) continue;
      }
      explored.push_back(v);
      Colors child = colors;
      individualize(child, v);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<VertexMask>> incident_;
  bool have_leaf_ = false;
  std::vector<VertexMask> first_cert_, best_cert_;
  Colors first_lab_, best_lab_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Hypergraph& h) { return Canonizer(h).run(); }

CanonicalForm canonical_form(const Hypergraph& h) { return canonical_labeling(h).form; }

Hypergraph canonical_hypergraph(const Hypergraph& h) {
  auto form = canonical_form(h);
  return Hypergraph::from_masks(form.r, form.n, std::move(form.edges));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hgx
