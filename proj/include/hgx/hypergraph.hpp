#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgx/error.hpp"

namespace hgx {

using Vertex = int;
using Edge = std::vector<Vertex>;

/// Vertex subsets are bitmasks; every hypergraph in the library has at most
/// kMaxVertices vertices.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }

VertexMask mask_of(std::span<const Vertex> vs);
Edge vertices_of(VertexMask m);

/// Order of r-sets as strictly increasing tuples.
inline bool lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

/// Subset of a host's vertex range.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(VertexMask members) : members_(members) {}
  VertexSet(std::initializer_list<Vertex> vs);

  VertexMask mask() const { return members_; }
  int size() const { return popcount(members_); }
  bool empty() const { return members_ == 0; }
  bool contains(Vertex v) const { return (members_ >> v) & 1U; }
  Edge vertices() const { return vertices_of(members_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  VertexMask members_ = 0;
};

/// r-uniform hypergraph on vertices 0..n-1. Immutable once built; edges are
/// kept in lexicographic order of their vertex tuples.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edgeless r-graph on n vertices.
  Hypergraph(int r, int n);
  /// Validates (see validate()) and normalizes the edge order.
  Hypergraph(int r, int n, const std::vector<Edge>& edges);

  static Hypergraph from_masks(int r, int n, std::vector<VertexMask> edges);

  int uniformity() const { return r_; }
  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::span<const VertexMask> edge_masks() const { return edges_; }
  Edge edge(std::size_t i) const { return vertices_of(edges_[i]); }
  std::vector<Edge> edges() const;

  bool has_edge(VertexMask e) const;
  bool has_edge(std::span<const Vertex> e) const { return has_edge(mask_of(e)); }
  int degree(Vertex v) const;
  VertexMask vertex_mask() const { return full_mask(n_); }
  VertexMask isolated_vertices() const;

  /// Image under a vertex map old -> perm[old]; perm must be a bijection on 0..n-1.
  Hypergraph relabeled(std::span<const Vertex> perm) const;
  /// Same vertex set, edge set extended by extra (duplicates ignored).
  Hypergraph with_edges(std::span<const VertexMask> extra) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 1;
  int n_ = 0;
  std::vector<VertexMask> edges_;   // lex order
  std::vector<VertexMask> sorted_;  // numeric order, for lookups
};

/// Checks the r-graph invariants on raw input. Throws Error naming the first
/// offending edge: NonUniformEdge, VertexOutOfRange or DuplicateEdge.
void validate(int r, int n, const std::vector<Edge>& edges);

/// Removes S and every edge meeting S; survivors keep their relative order.
Hypergraph delete_vertices(const Hypergraph& h, VertexSet s);

/// Link (r-1)-graph of v on the other n-1 vertices.
Hypergraph link(const Hypergraph& h, Vertex v);

/// True iff no edge of h lies inside s.
bool is_weakly_independent(const Hypergraph& h, VertexSet s);

/// Sub-hypergraph induced on the vertices in keep (relabeled in order).
Hypergraph induced(const Hypergraph& h, VertexMask keep);

std::string describe(const Hypergraph& h);

}  // namespace hgx
