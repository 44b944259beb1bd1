#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

/// Witness that a pattern is a (non-induced) subhypergraph of a host.
struct Embedding {
  std::vector<Vertex> map;               // pattern vertex -> host vertex, injective
  std::vector<VertexMask> edge_images;   // parallel to pattern.edge_masks()

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Lexicographically least embedding of pattern into host (by pattern-vertex
/// order), or nullopt. Isolated pattern vertices only need spare host vertices.
/// Throws UniformityMismatch.
std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host);

/// Existence only; skips the lexicographic minimization.
bool contains(const Hypergraph& host, const Hypergraph& pattern);

/// True iff no member of family embeds into host.
bool is_free(const Hypergraph& host, std::span<const Hypergraph> family);

/// Index of the first member of family contained in host, if any.
std::optional<std::size_t> first_contained(const Hypergraph& host, std::span<const Hypergraph> family);

/// Checks every condition of the Embedding invariant against the pair.
bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& emb);

}  // namespace hgx
