#include "doctest.h"
#include "fixtures.hpp"
#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/embedding.hpp"
#include "hgx/formulas.hpp"
#include "hgx/invariants.hpp"

using namespace hgx;

namespace {

template <class Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hgx::Error");
  return ErrorCode::BadParams;
}

// r-sets of {0..n-1} satisfying pred, counted one by one.
template <class Pred>
long long count_sets(int n, int r, Pred pred) {
  long long c = 0;
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    if (popcount(m) == r && pred(m)) ++c;
  }
  return c;
}

Integer counted(ConstructionKind kind, std::map<std::string, long long> params) {
  ConstructionSpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return count_edges(spec);
}

Hypergraph built(ConstructionKind kind, std::map<std::string, long long> params) {
  ConstructionSpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return build(spec);
}

}  // namespace

TEST_CASE("turan graph examples") {
  CHECK(isomorphic(turan_graph(4, 2), fx::c4()));
  CHECK(turan_graph(9, 2).size() == 20);
  CHECK(turan_graph(5, 1).size() == 0);
  CHECK(turan_graph(5, 1).order() == 5);
  CHECK(balanced_parts(9, 2) == std::vector<int>{5, 4});
}

TEST_CASE("G(n,l,s) examples") {
  CHECK(g_nls(10, 2, 2).size() == 16);
  CHECK(g_nls(7, 3, 2).size() == 11);
  CHECK(g_nls(6, 2, 0).empty());
  CHECK(code_of([] { (void)g_nls(5, 1, 2); }) == ErrorCode::BadPartition);
  CHECK(code_of([] { (void)g_nls(5, 2, 5); }) == ErrorCode::BadPartition);
  // Parts of size zero are allowed when s < l - 1.
  CHECK(g_nls(6, 4, 1).size() == 5);
  for (int n = 2; n <= 12; ++n) {
    for (int l = 2; l <= 5; ++l) {
      for (int s = 0; s < n; ++s) CHECK(Integer(g_nls(n, l, s).size()) == alon_frankl_formula(n, l, s));
    }
  }
}

TEST_CASE("A(n,r,s) examples") {
  CHECK(a_nrs(4, 3, 0).empty());
  CHECK(isomorphic(a_nrs(5, 2, 1), fx::star(5, 2)));
  // C(8,3) - C(6,3) = 36.
  CHECK(a_nrs(8, 3, 2).size() == 36);
  CHECK(code_of([] { (void)a_nrs(3, 4, 1); }) == ErrorCode::ArityExceedsVertices);
}

TEST_CASE("crosscut star examples") {
  CHECK(crosscut_star(10, 3, 2).size() == 56);
  CHECK(crosscut_star(7, 3, 0).empty());
  CHECK(isomorphic(crosscut_star(5, 2, 1), fx::star(5, 2)));
  CHECK(code_of([] { (void)crosscut_star(5, 3, 4); }) == ErrorCode::ArityExceedsVertices);
}

TEST_CASE("core cover examples") {
  CHECK(core_cover(Hypergraph(3, 2), 6, 3).size() == 16);
  CHECK(core_cover(Hypergraph(3, 0), 6, 3).empty());
  // One triple on {0,1,2} plus every triple with one or two vertices there.
  const long long direct = 1 + count_sets(6, 3, [](VertexMask m) {
    const int k = popcount(m & 7);
    return k == 1 || k == 2;
  });
  CHECK(static_cast<long long>(core_cover(fx::triple(), 6, 3).size()) == direct);
  CHECK(direct == 19);
  CHECK(code_of([] { (void)core_cover(fx::k3(), 6, 3); }) == ErrorCode::UniformityMismatch);
}

TEST_CASE("H_i examples") {
  CHECK(h_i_construction(12, 3, 2, 2).size() == 36);
  CHECK(h_i_construction(12, 3, 1, 3).size() == 60);
  CHECK(h_i_construction(4, 3, 1, 2).empty());
  CHECK(code_of([] { (void)h_i_construction(12, 3, 4, 2); }) == ErrorCode::BadParams);
  CHECK(code_of([] { (void)h_i_construction(3, 3, 1, 2); }) == ErrorCode::BadParams);
}

TEST_CASE("G1 examples") {
  CHECK(g1(10, 3, 2).size() == 36);
  CHECK(g1(8, 3, 1).empty());
  CHECK(g1(6, 4, 3).size() == 8);
  CHECK(code_of([] { (void)g1(6, 3, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("G1' examples") {
  // k - 2 = 1: the (k-2)-partite (r-1)-graph is empty, so A adds nothing.
  CHECK(g1_prime(8, 3, 3, 2, 0, 0, 1).empty());
  // |D| = 6 split 2,2,2; merging two parts gives 4,2. 15 pairs + 8 + 12.
  CHECK(g1_prime(9, 3, 4, 1, 1, 1, 1).size() == 35);
  CHECK(g1_prime(9, 3, 4, 1, 0, 0, 0).empty());
  CHECK(code_of([] { (void)g1_prime(9, 3, 2, 1, 1, 1, 1); }) == ErrorCode::BadParams);
}

TEST_CASE("G2 examples") {
  CHECK(g2(10, 3, 2, 1, 4).size() == 32);
  CHECK(g2(10, 3, 2, 3, 3).size() == 56);
  CHECK(g2(10, 3, 2, 1, 3).empty());
  CHECK(code_of([] { (void)g2(10, 3, 2, 4, 4); }) == ErrorCode::BadParams);
}

TEST_CASE("G2' examples") {
  // |D| = 8 split 3,3,2; the coarser split is 3,5. 28 pairs + 21 + 15.
  CHECK(g2_prime(11, 3, 3, 4, 1, 2).size() == 64);
  CHECK(g2_prime(11, 3, 3, 4, 0, 1).size() == 3 * 15);
  CHECK(g2_prime(11, 3, 3, 4, 2, 2).size() == 2 * 28 + 1 * 21);
  CHECK(code_of([] { (void)g2_prime(11, 3, 3, 4, 3, 2); }) == ErrorCode::BadParams);
}

TEST_CASE("complete multipartite examples") {
  CHECK(isomorphic(complete_multipartite_uniform({2, 2}, 2), fx::c4()));
  CHECK(complete_multipartite_uniform({2, 2, 2}, 3).size() == 8);
  CHECK(complete_multipartite_uniform({5}, 2).empty());
}

TEST_CASE("names and parameters") {
  CHECK(parse_construction("anrs") == ConstructionKind::ANrs);
  CHECK(parse_construction("A_nrs") == ConstructionKind::ANrs);
  CHECK(parse_construction("G1prime") == ConstructionKind::G1Prime);
  CHECK(construction_name(ConstructionKind::Hi) == "H_i");
  CHECK(code_of([] { (void)parse_construction("nope"); }) == ErrorCode::BadParams);
  CHECK(code_of([] { (void)built(ConstructionKind::ANrs, {{"n", 5}}); }) == ErrorCode::BadParams);
}

TEST_CASE("closed-form counts match the built hypergraphs") {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 1; r <= 4 && r <= n; ++r) {
      for (int s = 0; s <= std::min(n, 4); ++s) {
        CHECK(counted(ConstructionKind::ANrs, {{"n", n}, {"r", r}, {"s", s}}) == Integer(a_nrs(n, r, s).size()));
        CHECK(Integer(a_nrs(n, r, s).size()) == emc_formula(n, r, s));
      }
      for (int a = 0; a <= n && r <= n - a + 1; ++a)
        CHECK(counted(ConstructionKind::CrosscutStar, {{"n", n}, {"r", r}, {"a", a}}) == Integer(crosscut_star(n, r, a).size()));
      for (int m = 1; r >= 2 && m - 1 + r - 1 <= n; ++m)
        CHECK(counted(ConstructionKind::G1, {{"n", n}, {"r", r}, {"m", m}}) == Integer(g1(n, r, m).size()));
    }
  }
  for (int n = 4; n <= 12; ++n) {
    for (int s = 1; s < n && s <= 4; ++s) {
      for (int i = 1; i <= s; ++i) {
        for (int l = 2; l <= 4; ++l)
          CHECK(counted(ConstructionKind::Hi, {{"n", n}, {"s", s}, {"i", i}, {"l", l}}) == Integer(h_i_construction(n, s, i, l).size()));
      }
    }
  }
  for (int k = 3; k <= 5; ++k) {
    CHECK(counted(ConstructionKind::G2, {{"n", 11}, {"r", 3}, {"s", 3}, {"mprime", 2}, {"k", k}}) == Integer(g2(11, 3, 3, 2, k).size()));
    CHECK(counted(ConstructionKind::G2Prime, {{"n", 11}, {"r", 3}, {"s", 3}, {"k", k}, {"x", 1}, {"y", 2}}) ==
          Integer(g2_prime(11, 3, 3, k, 1, 2).size()));
    CHECK(counted(ConstructionKind::G1Prime, {{"n", 11}, {"r", 3}, {"k", k}, {"w", 1}, {"x", 1}, {"y", 1}, {"z", 1}}) ==
          Integer(g1_prime(11, 3, k, 1, 1, 1, 1).size()));
  }
}

TEST_CASE("freeness of the constructions") {
  const std::vector<Hypergraph> c4m3 = {fx::c4_cubed()};
  for (int n = 4; n <= 10; ++n) {
    // q(C4^3) = 2 > 1, so the one-vertex crosscut star avoids it.
    CHECK(is_free(crosscut_star(n, 3, 1), c4m3));
    CHECK(matching_number(crosscut_star(n, 3, 2)) <= 2);
    for (int s = 0; s <= 3; ++s) CHECK(matching_number(a_nrs(n, 3, s)) <= s);
  }
  CHECK(is_free(g1(10, 3, m_value(fx::k3()).value), std::vector<Hypergraph>{expansion(fx::k3(), 3)}));
  for (int s = 1; s <= 3; ++s) {
    for (int i = 1; i <= s; ++i) CHECK(matching_number(h_i_construction(10, s, i, 3)) <= s);
  }
}

TEST_CASE("generators are deterministic and valid") {
  for (int rep = 0; rep < 2; ++rep) {
    const Hypergraph a = g2_prime(11, 3, 3, 4, 1, 2);
    const Hypergraph b = g2_prime(11, 3, 3, 4, 1, 2);
    CHECK(a == b);
    CHECK_NOTHROW(validate(a.uniformity(), a.order(), a.edges()));
  }
}
