#pragma once

#include <optional>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

/// Vertex colouring; colors[v] is a 0-based colour index, k the number used.
struct Coloring {
  std::vector<int> colors;
  int k = 0;
};

bool is_proper(const Hypergraph& h, const Coloring& c);
/// Every edge holds exactly one vertex of colour 0 (red).
bool is_strong_red_blue(const Hypergraph& h, const Coloring& c);

/// Minimum crosscut together with the chromatic numbers of the link graphs of
/// its vertices, sorted non-increasing. Link chromatic numbers are only
/// defined for r >= 3; for graphs the list is empty.
struct CrosscutProfile {
  int q = 0;
  VertexSet crosscut;
  std::vector<int> link_chromatics;
};

/// Largest set of pairwise disjoint edges (edge indices into h.edge_masks()).
std::vector<int> maximum_matching(const Hypergraph& h);
int matching_number(const Hypergraph& h);

/// Least k with a proper k-colouring; 1 for edgeless hypergraphs. Throws
/// NotColorable for 1-graphs with edges.
int chromatic_number(const Hypergraph& h);
Coloring optimal_coloring(const Hypergraph& h);

/// Smallest red class over proper red-blue colourings. Throws NoEdges or
/// NotTwoChromatic.
int p_value(const Hypergraph& f);
VertexSet p_witness(const Hypergraph& f);

/// Minimum crosscut (lexicographically least among minimum ones), or nullopt
/// when no strong red-blue colouring exists (q is infinite).
std::optional<CrosscutProfile> q_value(const Hypergraph& f);
/// q(f) > s, treating an infinite q as exceeding every s.
bool q_exceeds(const Hypergraph& f, int s);
std::vector<VertexSet> minimum_crosscuts(const Hypergraph& f);
/// Throws NoCrosscut when q is infinite.
CrosscutProfile crosscut_link_chromatics(const Hypergraph& f);

std::optional<Vertex> universal_vertex(const Hypergraph& f);

struct DerivedFamily {
  std::vector<Hypergraph> members;  // pairwise non-isomorphic, f itself first
  int dropped_edgeless = 0;         // distinct edgeless results discarded
};

/// Every hypergraph obtained from f by deleting a weakly independent set
/// (the empty set included), up to isomorphism, edgeless results dropped.
DerivedFamily derived_family(const Hypergraph& f);

/// r-expansion of a graph: each edge padded with r-2 private new vertices,
/// appended in edge-lexicographic order. Throws ArityTooSmall for r < 2.
Hypergraph expansion(const Hypergraph& g, int r);

struct MValue {
  int value = 0;
  VertexSet w;  // lexicographically least minimizer
};

/// min over independent W of |W| + #edges disjoint from W. Throws NoEdges.
MValue m_value(const Hypergraph& g);

struct MPrimeValue {
  int value = 0;
  VertexSet u;
  std::vector<VertexMask> z;  // deleted edges
};

/// Fewest edges Z such that deleting some independent U and Z leaves a
/// (k-2)-chromatic graph, k = chromatic number. Throws ChromaticTooSmall.
MPrimeValue m_prime_value(const Hypergraph& g);

bool is_independent(const Hypergraph& g, VertexMask s);
/// Least number of monochromatic edges over all colourings with `colors`
/// colours, with one optimal colouring's monochromatic edges.
std::pair<int, std::vector<VertexMask>> min_monochromatic(const Hypergraph& g, int colors);

}  // namespace hgx
