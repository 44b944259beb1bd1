#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"
#include "hgx/numeric.hpp"

namespace hgx {

/// Near-equal split of total into count parts, larger parts first.
std::vector<int> balanced_parts(int total, int count);

/// Balanced complete l-partite graph T(n, l); T(n, 1) is edgeless.
Hypergraph turan_graph(int n, int l);

/// Complete l-partite graph with one part of order n-s and l-1 near-equal
/// parts sharing s vertices. The s small-part vertices are labeled 0..s-1.
Hypergraph g_nls(int n, int l, int s);

/// All r-sets meeting {0..s-1}.
Hypergraph a_nrs(int n, int r, int s);

/// All r-sets with exactly one vertex in {0..a-1}.
Hypergraph crosscut_star(int n, int r, int a);

/// core on {0..s-1} plus every r-set meeting it in 1..r-1 vertices.
Hypergraph core_cover(const Hypergraph& core, int n, int r);

/// 3-graph with A1 = {0..i-2}, A2 = {i-1..s-1}, B = {s..n-1}: A1 joined to all
/// pairs of B, A2 joined to the edges of T(n-s, l-1) placed on B.
Hypergraph h_i_construction(int n, int s, int i, int l);

/// All r-sets with exactly one vertex in A = {0..m-2}.
Hypergraph g1(int n, int r, int m);

/// A (w+z-1), B (x), C (y), D (rest) in label order. B joins all (r-1)-sets
/// of D, A joins the complete (k-2)-partite (r-1)-graph on D, C the complete
/// (k-1)-partite one. The (k-2)-partition merges the two smallest parts of
/// the balanced (k-1)-partition, so the former graph sits inside the latter.
Hypergraph g1_prime(int n, int r, int k, int w, int x, int y, int z);

/// A (m'-1) joins all (r-1)-sets of C (n-s), B (s-m'+1) joins the balanced
/// complete (k-2)-partite (r-1)-graph on C.
Hypergraph g2(int n, int r, int s, int mprime, int k);

/// A (x) joins all (r-1)-sets of D (n-s), B (y-1) the (k-1)-partite and
/// C (s-x-y+1) the (k-2)-partite (r-1)-graph, partitioned as in g1_prime.
Hypergraph g2_prime(int n, int r, int s, int k, int x, int y);

/// All r-sets with at most one vertex per part; parts are consecutive label
/// ranges in the given order.
Hypergraph complete_multipartite_uniform(const std::vector<int>& parts, int r);

enum class ConstructionKind {
  TuranGraph,
  GNls,
  ANrs,
  CrosscutStar,
  CoreCover,
  Hi,
  G1,
  G1Prime,
  G2,
  G2Prime,
  CompleteMultipartite,
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::ANrs;
  std::map<std::string, long long> params;
  std::vector<int> parts;            // CompleteMultipartite only
  std::optional<Hypergraph> core;    // CoreCover only
};

/// Accepts the canonical names (turan_graph, G_nls, A_nrs, crosscut_star,
/// core_cover, H_i, G1, G1prime, G2, G2prime, complete_multipartite_uniform)
/// case-insensitively, with or without underscores. Throws BadParams.
ConstructionKind parse_construction(const std::string& name);
std::string construction_name(ConstructionKind kind);
/// Parameter names each construction reads.
std::vector<std::string> construction_params(ConstructionKind kind);

Hypergraph build(const ConstructionSpec& spec);
/// Closed-form edge count; never materializes the hypergraph.
Integer count_edges(const ConstructionSpec& spec);

}  // namespace hgx
