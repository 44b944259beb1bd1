#include "hgx/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hgx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UniformityMismatch: return "UniformityMismatch";
    case ErrorCode::ArityUnderflow: return "ArityUnderflow";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::ArityExceedsVertices: return "ArityExceedsVertices";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotTwoChromatic: return "NotTwoChromatic";
    case ErrorCode::NotColorable: return "NotColorable";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::ChromaticTooSmall: return "ChromaticTooSmall";
    case ErrorCode::NoCrosscut: return "NoCrosscut";
    case ErrorCode::NoAdmissibleWitness: return "NoAdmissibleWitness";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexMask mask_of(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

Edge vertices_of(VertexMask m) {
  Edge out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) members_ |= bit(v);
}

namespace {

std::string edge_text(const Edge& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << '}';
  return os.str();
}

void check_shape(int r, int n) {
  if (r < 1) throw Error(ErrorCode::BadParams, "uniformity must be at least 1");
  if (n < 0) throw Error(ErrorCode::BadParams, "vertex count must be non-negative");
  if (n > kMaxVertices)
    throw Error(ErrorCode::CapacityExceeded,
                "at most " + std::to_string(kMaxVertices) + " vertices supported, got " + std::to_string(n));
}

}  // namespace

void validate(int r, int n, const std::vector<Edge>& edges) {
  check_shape(r, n);
  std::vector<VertexMask> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) {
    for (Vertex v : e) {
      if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "edge " + edge_text(e));
    }
    const VertexMask m = mask_of(e);
    if (static_cast<int>(e.size()) != r || popcount(m) != r)
      throw Error(ErrorCode::NonUniformEdge, "edge " + edge_text(e) + " is not an " + std::to_string(r) + "-set");
    if (std::find(seen.begin(), seen.end(), m) != seen.end())
      throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(e));
    seen.push_back(m);
  }
}

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) { check_shape(r, n); }

Hypergraph::Hypergraph(int r, int n, const std::vector<Edge>& edges) : r_(r), n_(n) {
  validate(r, n, edges);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) edges_.push_back(mask_of(e));
  std::sort(edges_.begin(), edges_.end(), lex_less);
  sorted_ = edges_;
  std::sort(sorted_.begin(), sorted_.end());
}

Hypergraph Hypergraph::from_masks(int r, int n, std::vector<VertexMask> edges) {
  check_shape(r, n);
  Hypergraph h;
  h.r_ = r;
  h.n_ = n;
  const VertexMask range = full_mask(n);
  for (VertexMask e : edges) {
    if ((e & ~range) != 0) throw Error(ErrorCode::VertexOutOfRange, "edge " + edge_text(vertices_of(e)));
    if (popcount(e) != r) throw Error(ErrorCode::NonUniformEdge, "edge " + edge_text(vertices_of(e)));
  }
  h.sorted_ = std::move(edges);
  std::sort(h.sorted_.begin(), h.sorted_.end());
  if (auto it = std::adjacent_find(h.sorted_.begin(), h.sorted_.end()); it != h.sorted_.end())
    throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(vertices_of(*it)));
  h.edges_ = h.sorted_;
  std::sort(h.edges_.begin(), h.edges_.end(), lex_less);
  return h;
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (VertexMask e : edges_) out.push_back(vertices_of(e));
  return out;
}

bool Hypergraph::has_edge(VertexMask e) const { return std::binary_search(sorted_.begin(), sorted_.end(), e); }

int Hypergraph::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](VertexMask e) { return (e >> v) & 1U; }));
}

VertexMask Hypergraph::isolated_vertices() const {
  VertexMask covered = 0;
  for (VertexMask e : edges_) covered |= e;
  return vertex_mask() & ~covered;
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
  std::vector<VertexMask> out;
  out.reserve(edges_.size());
  for (VertexMask e : edges_) {
    VertexMask m = 0;
    for (VertexMask x = e; x != 0; x &= x - 1) m |= bit(perm[lowest(x)]);
    out.push_back(m);
  }
  return from_masks(r_, n_, std::move(out));
}

Hypergraph Hypergraph::with_edges(std::span<const VertexMask> extra) const {
  std::vector<VertexMask> all = sorted_;
  for (VertexMask e : extra) {
    if (!has_edge(e)) all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return from_masks(r_, n_, std::move(all));
}

namespace {

void check_range(const Hypergraph& h, VertexMask s) {
  if ((s & ~h.vertex_mask()) != 0)
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(lowest(s & ~h.vertex_mask())) +
                                                 " outside 0.." + std::to_string(h.order() - 1));
}

// Order-preserving compression of the vertices in keep.
VertexMask compress(VertexMask e, VertexMask keep) {
  VertexMask out = 0;
  for (VertexMask x = e; x != 0; x &= x - 1) {
    const Vertex v = lowest(x);
    out |= bit(popcount(keep & (bit(v) - 1)));
  }
  return out;
}

}  // namespace

Hypergraph induced(const Hypergraph& h, VertexMask keep) {
  check_range(h, keep);
  std::vector<VertexMask> out;
  for (VertexMask e : h.edge_masks()) {
    if ((e & ~keep) == 0) out.push_back(compress(e, keep));
  }
  return Hypergraph::from_masks(h.uniformity(), popcount(keep), std::move(out));
}

Hypergraph delete_vertices(const Hypergraph& h, VertexSet s) {
  check_range(h, s.mask());
  return induced(h, h.vertex_mask() & ~s.mask());
}

Hypergraph link(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.order())
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  if (h.uniformity() < 2) throw Error(ErrorCode::ArityUnderflow, "link of a 1-graph");
  const VertexMask keep = h.vertex_mask() & ~bit(v);
  std::vector<VertexMask> out;
  for (VertexMask e : h.edge_masks()) {
    if (e & bit(v)) out.push_back(compress(e & ~bit(v), keep));
  }
  return Hypergraph::from_masks(h.uniformity() - 1, h.order() - 1, std::move(out));
}

bool is_weakly_independent(const Hypergraph& h, VertexSet s) {
  check_range(h, s.mask());
  return std::none_of(h.edge_masks().begin(), h.edge_masks().end(),
                      [&](VertexMask e) { return (e & ~s.mask()) == 0; });
}

std::string describe(const Hypergraph& h) {
  std::ostringstream os;
  os << "r=" << h.uniformity() << " n=" << h.order() << " m=" << h.size() << " {";
  bool first = true;
  for (VertexMask e : h.edge_masks()) {
    os << (first ? "" : " ") << edge_text(vertices_of(e));
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace hgx
