#pragma once

#include <compare>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

/// Complete isomorphism invariant: the edge set under a canonical labeling.
/// Two hypergraphs have equal forms iff they are isomorphic.
struct CanonicalForm {
  int r = 0;
  int n = 0;
  std::vector<VertexMask> edges;  // ascending

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> labeling;                  // vertex -> canonical label
  std::vector<std::vector<Vertex>> automorphisms;  // generators found on the way (may be partial)
};

/// Colour refinement plus individualization search with automorphism pruning.
/// Supports r <= 11.
CanonicalLabeling canonical_labeling(const Hypergraph& h);
CanonicalForm canonical_form(const Hypergraph& h);
Hypergraph canonical_hypergraph(const Hypergraph& h);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hgx
