#include "hgx/embedding.hpp"

#include "hgx/detail/embedding_search.hpp"

namespace hgx {

namespace {

class HostIndex {
 public:
  explicit HostIndex(const Hypergraph& h) : h_(h), incident_(h.order()) {
    for (VertexMask e : h.edge_masks()) {
      for (VertexMask x = e; x != 0; x &= x - 1) incident_[lowest(x)].push_back(e);
    }
  }
  int order() const { return h_.order(); }
  bool has_edge(VertexMask e) const { return h_.has_edge(e); }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  std::span<const VertexMask> incident(Vertex v) const { return incident_[v]; }

 private:
  const Hypergraph& h_;
  std::vector<std::vector<VertexMask>> incident_;
};

void check_uniformity(const Hypergraph& pattern, const Hypergraph& host) {
  if (pattern.uniformity() != host.uniformity())
    throw Error(ErrorCode::UniformityMismatch, "pattern is " + std::to_string(pattern.uniformity()) +
                                                   "-uniform, host is " + std::to_string(host.uniformity()) + "-uniform");
}

Embedding make_embedding(const detail::PatternPlan& plan, std::vector<Vertex> map) {
  Embedding emb;
  emb.map = std::move(map);
  for (VertexMask f : plan.edges) {
    VertexMask img = 0;
    for (VertexMask x = f; x != 0; x &= x - 1) img |= bit(emb.map[lowest(x)]);
    emb.edge_images.push_back(img);
  }
  return emb;
}

}  // namespace

std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host) {
  check_uniformity(pattern, host);
  const detail::PatternPlan plan(pattern);
  const HostIndex index(host);
  detail::EmbeddingSearch<HostIndex> search(plan, index);

  std::vector<Vertex> probe(pattern.order(), -1);
  if (!search.complete(probe)) return std::nullopt;

  // Fix images one pattern vertex at a time, smallest feasible host label first.
  std::vector<Vertex> fixed(pattern.order(), -1);
  VertexMask used = 0;
  for (Vertex v = 0; v < pattern.order(); ++v) {
    bool placed = false;
    for (VertexMask cand = host.vertex_mask() & ~used; cand != 0 && !placed; cand &= cand - 1) {
      const Vertex c = lowest(cand);
      if (!search.consistent(fixed, v, c)) continue;
      std::vector<Vertex> trial = fixed;
      trial[v] = c;
      if (search.complete(trial)) {
        fixed[v] = c;
        used |= bit(c);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;  // unreachable: probe succeeded
  }
  return make_embedding(plan, std::move(fixed));
}

bool contains(const Hypergraph& host, const Hypergraph& pattern) {
  check_uniformity(pattern, host);
  if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
  const detail::PatternPlan plan(pattern);
  const HostIndex index(host);
  detail::EmbeddingSearch<HostIndex> search(plan, index);
  std::vector<Vertex> map(pattern.order(), -1);
  return search.complete(map);
}

std::optional<std::size_t> first_contained(const Hypergraph& host, std::span<const Hypergraph> family) {
  for (const Hypergraph& f : family) check_uniformity(f, host);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (contains(host, family[i])) return i;
  }
  return std::nullopt;
}

bool is_free(const Hypergraph& host, std::span<const Hypergraph> family) {
  return !first_contained(host, family).has_value();
}

bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& emb) {
  if (pattern.uniformity() != host.uniformity()) return false;
  if (static_cast<int>(emb.map.size()) != pattern.order()) return false;
  if (emb.edge_images.size() != pattern.size()) return false;
  VertexMask used = 0;
  for (Vertex v : emb.map) {
    if (v < 0 || v >= host.order() || (used & bit(v))) return false;
    used |= bit(v);
  }
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    VertexMask img = 0;
    for (VertexMask x = pattern.edge_masks()[i]; x != 0; x &= x - 1) img |= bit(emb.map[lowest(x)]);
    if (img != emb.edge_images[i] || !host.has_edge(img)) return false;
  }
  return true;
}

}  // namespace hgx
