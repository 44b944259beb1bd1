#include "doctest.h"
#include "fixtures.hpp"
#include "hgx/canonical.hpp"
#include "hgx/constructions.hpp"
#include "hgx/invariants.hpp"
#include "oracles.hpp"

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

bool has_member(const DerivedFamily& d, const Hypergraph& h) {
  for (const auto& m : d.members) {
    if (isomorphic(m, h)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("matching number examples") {
  CHECK(matching_number(fx::triple()) == 1);
  CHECK(matching_number(fx::cycle(7)) == 3);
  CHECK(matching_number(a_nrs(10, 3, 2)) == 2);
  CHECK(matching_number(Hypergraph(3, 5)) == 0);
  const Hypergraph h = a_nrs(10, 3, 2);
  const auto m = maximum_matching(h);
  VertexMask used = 0;
  for (int i : m) {
    CHECK((used & h.edge_masks()[i]) == 0);
    used |= h.edge_masks()[i];
  }
}

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(fx::complete(4, 2)) == 4);
  CHECK(chromatic_number(fx::complete(4, 3)) == 2);
  CHECK(chromatic_number(fx::complete(5, 3)) == 3);
  CHECK(chromatic_number(Hypergraph(3, 4)) == 1);
  CHECK(code_of([] { (void)chromatic_number(Hypergraph(1, 2, {{0}})); }) == ErrorCode::NotColorable);
  const Coloring c = optimal_coloring(fx::complete(5, 3));
  CHECK(c.k == 3);
  CHECK(is_proper(fx::complete(5, 3), c));
}

TEST_CASE("p examples") {
  CHECK(p_value(fx::triple()) == 1);
  CHECK(p_value(fx::k2()) == 1);
  CHECK(p_value(fx::c4()) == 2);
  CHECK(p_value(fx::complete(4, 3)) == 2);
  CHECK(code_of([] { (void)p_value(fx::k3()); }) == ErrorCode::NotTwoChromatic);
  CHECK(code_of([] { (void)p_value(Hypergraph(2, 3)); }) == ErrorCode::NoEdges);
  CHECK(p_witness(fx::c4()).size() == 2);
}

TEST_CASE("q examples") {
  auto q1 = q_value(fx::triple());
  REQUIRE(q1);
  CHECK(q1->q == 1);
  auto q2 = q_value(fx::c4_cubed());
  REQUIRE(q2);
  CHECK(q2->q == 2);
  CHECK_FALSE(q_value(fx::complete(4, 3)));
  CHECK(q_exceeds(fx::complete(4, 3), 1000));
  CHECK(q_exceeds(fx::c4_cubed(), 1));
  CHECK_FALSE(q_exceeds(fx::c4_cubed(), 2));
  for (const VertexSet& q : minimum_crosscuts(fx::c4_cubed())) {
    Coloring c{std::vector<int>(8, 1), 2};
    for (Vertex v : q.vertices()) c.colors[v] = 0;
    CHECK(is_strong_red_blue(fx::c4_cubed(), c));
  }
}

TEST_CASE("universal vertex examples") {
  CHECK(universal_vertex(fx::star(6, 3)) == std::optional<Vertex>(0));
  CHECK_FALSE(universal_vertex(fx::matching(2, 3)));
  CHECK_FALSE(universal_vertex(fx::complete(4, 3)));
}

TEST_CASE("derived family examples") {
  const DerivedFamily k3 = derived_family(fx::k3());
  CHECK(k3.members.size() == 2);
  CHECK(k3.members[0] == fx::k3());
  CHECK(has_member(k3, fx::k2()));

  const DerivedFamily t = derived_family(fx::triple());
  CHECK(t.members.size() == 1);
  CHECK(t.dropped_edgeless > 0);

  // M2^3 loses one triple with one or two of its vertices: two non-isomorphic
  // survivors besides M2^3 itself.
  const DerivedFamily m = derived_family(fx::matching(2, 3));
  CHECK(m.members.size() == 3);
  CHECK(has_member(m, Hypergraph(3, 5, {{0, 1, 2}})));
  CHECK(has_member(m, Hypergraph(3, 4, {{0, 1, 2}})));
}

TEST_CASE("expansion examples") {
  CHECK(expansion(fx::k2(), 3) == fx::triple());
  const Hypergraph c = expansion(fx::c4(), 3);
  CHECK(c.order() == 8);
  CHECK(c.size() == 4);
  CHECK(c.edges() == std::vector<Edge>{{0, 1, 4}, {0, 3, 5}, {1, 2, 6}, {2, 3, 7}});
  CHECK(expansion(fx::cycle(5), 2) == fx::cycle(5));
  CHECK(code_of([] { (void)expansion(fx::k3(), 1); }) == ErrorCode::ArityTooSmall);
}

TEST_CASE("m examples") {
  CHECK(m_value(fx::k2()).value == 1);
  CHECK(m_value(fx::k3()).value == 2);
  CHECK(m_value(fx::cycle(5)).value == 3);
  CHECK(code_of([] { (void)m_value(Hypergraph(2, 3)); }) == ErrorCode::NoEdges);
}

TEST_CASE("m' examples") {
  CHECK(m_prime_value(fx::k3()).value == 1);
  CHECK(m_prime_value(fx::complete(4, 2)).value == 1);
  // C5 minus an independent pair is a path with 2 edges; one colour left.
  CHECK(m_prime_value(fx::cycle(5)).value == 1);
  CHECK(code_of([] { (void)m_prime_value(fx::c4()); }) == ErrorCode::ChromaticTooSmall);
  const MPrimeValue w = m_prime_value(fx::complete(4, 2));
  CHECK(is_independent(fx::complete(4, 2), w.u.mask()));
}

TEST_CASE("crosscut link chromatics examples") {
  const CrosscutProfile c4 = crosscut_link_chromatics(fx::c4_cubed());
  CHECK(c4.q == 2);
  CHECK(c4.link_chromatics == std::vector<int>{2, 2});
  const CrosscutProfile t = crosscut_link_chromatics(fx::triple());
  CHECK(t.q == 1);
  CHECK(t.link_chromatics == std::vector<int>{2});
  const CrosscutProfile k4 = crosscut_link_chromatics(fx::k4_cubed());
  CHECK(k4.q == 4);
  CHECK(k4.crosscut == VertexSet{0, 7, 8, 9});
  CHECK(k4.link_chromatics == std::vector<int>{2, 2, 2, 2});
  CHECK(oracle::q_value(fx::k4_cubed()) == std::optional<int>(4));
  CHECK(code_of([] { (void)crosscut_link_chromatics(fx::complete(4, 3)); }) == ErrorCode::NoCrosscut);
  // Graphs carry no link chromatic numbers.
  CHECK(crosscut_link_chromatics(fx::c4()).link_chromatics.empty());
}

TEST_CASE("invariants agree with brute force on small graphs") {
  for (const auto& g : oracle::graph_corpus(6)) {
    CHECK(matching_number(g) == oracle::matching_number(g));
    const int k = chromatic_number(g);
    CHECK(k == oracle::chromatic_number(g));
    if (g.empty()) continue;
    CHECK(m_value(g).value == oracle::m_value(g));
    if (k == 2) CHECK(p_value(g) == oracle::p_value(g));
    auto q = q_value(g);
    auto oq = oracle::q_value(g);
    CHECK(q.has_value() == oq.has_value());
    if (q && oq) CHECK(q->q == *oq);
    if (k >= 3) {
      const int mp = m_prime_value(g).value;
      CHECK(mp == oracle::m_prime_by_colourings(g));
      if (g.size() <= 10) CHECK(mp == oracle::m_prime_literal(g));
    }
  }
}

TEST_CASE("invariants agree with brute force on random 3-graphs") {
  for (const auto& h : oracle::random_3graphs(20, 99)) {
    CHECK(matching_number(h) == oracle::matching_number(h));
    const int k = chromatic_number(h);
    CHECK(k == oracle::chromatic_number(h));
    if (k == 2) CHECK(p_value(h) == oracle::p_value(h));
    auto q = q_value(h);
    auto oq = oracle::q_value(h);
    CHECK(q.has_value() == oq.has_value());
    if (q && oq) CHECK(q->q == *oq);
  }
}

TEST_CASE("structural laws") {
  for (const auto& g : oracle::graph_corpus(6)) {
    if (g.empty()) continue;
    const int k = chromatic_number(g);
    if (k == 2) {
      auto q = q_value(g);
      if (q) CHECK(p_value(g) <= q->q);
      auto q3 = q_value(expansion(g, 3));
      REQUIRE(q3);
      CHECK(q3->q == p_value(g));
    }
    for (int r : {3, 4}) {
      const Hypergraph e = expansion(g, r);
      CHECK(chromatic_number(e) == 2);
      CHECK(e.order() == g.order() + (r - 2) * static_cast<int>(g.size()));
      CHECK(e.size() == g.size());
    }
    const DerivedFamily d = derived_family(g);
    CHECK(isomorphic(d.members.front(), g));
  }
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 3 && r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        const int mn = matching_number(a_nrs(n, r, s));
        CHECK(mn <= s);
        if (n >= s * (r + 1)) CHECK(mn == s);
      }
    }
  }
}
