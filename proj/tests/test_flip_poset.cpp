#include <doctest.h>

#include "mang/error.hpp"
#include "mang/flip_poset.hpp"
#include "oracles.hpp"

using namespace mang;

namespace {

// A hand-made poset from cover lists, for lattices that never occur as
// flip intervals.  Element i is ranked by the longest chain below it.
FinitePoset from_covers(std::vector<std::vector<int>> covers) {
  FinitePoset p;
  const int size = static_cast<int>(covers.size());
  p.elements.assign(size, make_q0(1, 1));
  p.covers = std::move(covers);
  p.covered.assign(size, {});
  for (int i = 0; i < size; ++i) {
    for (int j : p.covers[i]) p.covered[j].push_back(i);
  }
  p.ranks.assign(size, 0);
  for (int pass = 0; pass < size; ++pass) {
    for (int i = 0; i < size; ++i) {
      for (int j : p.covers[i]) p.ranks[j] = std::max(p.ranks[j], p.ranks[i] + 1);
    }
  }
  p.up.assign(size, Bits(size));
  p.down.assign(size, Bits(size));
  for (int pass = 0; pass <= size; ++pass) {
    for (int i = 0; i < size; ++i) {
      p.up[i].set(i);
      for (int j : p.covers[i]) p.up[i] |= p.up[j];
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (p.up[i][j]) p.down[j].set(i);
    }
  }
  return p;
}

}  // namespace

TEST_CASE("build_poset") {
  CHECK(build_poset(2, 3).size() == 12);
  for (int m = 1; m <= 4; ++m) {
    const FinitePoset p = build_poset(m, 1);
    CHECK(p.size() == 1);
    CHECK(p.covers[0].empty());
  }
  const FinitePoset pentagon = build_poset(1, 3);
  CHECK(pentagon.size() == 5);
  int edges = 0;
  for (const auto& c : pentagon.covers) edges += static_cast<int>(c.size());
  CHECK(edges == 1 * 2 + 2 * 1);
  CHECK_THROWS_AS(build_poset(1, 11), Error);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; m * n <= 9; ++n) {
      const FinitePoset p = build_poset(m, n);
      CHECK(p.minimum() >= 0);
      CHECK(p.up[p.minimum()].all());
      CHECK(rank_is_consistent(p));
      for (int i : p.maximal_elements()) CHECK(is_final(p.elements[i]));
    }
  }
}

TEST_CASE("cover counts and chains") {
  const FinitePoset p = build_poset(2, 3);
  CHECK(p.covers[p.minimum()].size() == 4);
  CHECK(cover_count_check(p).pass);
  CHECK(maximal_chain_count(p) == 8);
  CHECK(maximal_chain_count(build_poset(3, 1)) == 1);
  CHECK(maximal_chain_count(build_poset(1, 4)) == 6);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 8; ++n) {
      const FinitePoset q = build_poset(m, n);
      CHECK(cover_count_check(q).pass);
      BigInt expected = 1;
      for (int k = 1; k < n; ++k) expected *= m * k;
      CHECK(maximal_chain_count(q) == expected);
      CHECK(oracle::chain_count_dfs(q) == expected);
    }
  }
}

TEST_CASE("lemma_descent_witness") {
  const Dissection hexagon(2, 2, {{1, 4}});
  CHECK(lemma_descent_witness(hexagon) == Chord{0, 3});
  CHECK(lemma_descent_step(hexagon) == make_q0(2, 2));
  for (const Dissection& q : enumerate_dissections(2, 3)) {
    if (q == make_q0(2, 3)) continue;
    const Chord d0 = lemma_descent_witness(q);
    int crossings = 0;
    for (const Chord& d : q.diagonals()) crossings += chords_cross(d0, d) ? 1 : 0;
    CHECK(crossings == 1);
  }
  // One non-Q0 diagonal: the witness is the Q0 diagonal it replaced.
  const Dissection near(2, 3, {{0, 3}, {3, 6}});
  CHECK(lemma_descent_witness(near) == Chord{0, 5});
  CHECK_THROWS_AS(lemma_descent_witness(make_q0(2, 3)), Error);
}

TEST_CASE("mobius") {
  const FinitePoset p = build_poset(2, 3);
  const int bottom = p.minimum();
  CHECK(mobius(p, make_interval(p, bottom, bottom)) == 1);
  CHECK(mobius(p, make_interval(p, bottom, p.covers[bottom][0])) == -1);
  for (int a = 0; a < p.size(); ++a) {
    const auto mu = mobius_from(p, a);
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) {
        CHECK(mu[b] == 0);
        continue;
      }
      CHECK(mu[b] >= -1);
      CHECK(mu[b] <= 1);
    }
  }
  CHECK_THROWS_AS(make_interval(p, p.covers[bottom][0], bottom), Error);
}

TEST_CASE("interval_decompose") {
  const FinitePoset p = build_poset(2, 3);
  for (int a = 0; a < p.size(); ++a) {
    const Dissection& q = p.elements[a];
    const auto d = interval_decompose(q, q);
    CHECK(d.b0 == make_q0(2, static_cast<int>(d.parts.size())));
    CHECK(d.parts == cut_L(q));
  }
  const Dissection q0 = make_q0(2, 3);
  for (const Dissection& top : p.elements) {
    const auto d = interval_decompose(q0, top);
    CHECK(d.b0 == top);
    CHECK(d.parts.size() == 3);
  }
  int pairs = 0;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      const auto d = interval_decompose(p.elements[a], p.elements[b]);
      CHECK(glue_G(d.b0, d.parts) == p.elements[b]);
      ++pairs;
    }
  }
  CHECK(pairs == 31);
  // Incomparable pair: the top is not obtained from the bottom's pieces.
  const Dissection x(2, 3, {{0, 3}, {3, 6}}), y(2, 3, {{0, 5}, {1, 4}});
  REQUIRE_FALSE(p.leq(p.index_of(x), p.index_of(y)));
  CHECK_THROWS_AS(interval_decompose(x, y), Error);
}

TEST_CASE("count_order_ideals") {
  CHECK(count_order_ideals({}) == 1);
  CHECK(count_order_ideals({{0}, {-1}}) == 2);
  CHECK(count_order_ideals({{0, 1}, {-1, 0}}) == 3);          // 2-chain
  CHECK(count_order_ideals({{0, 1}, {-1, -1}}) == 4);         // antichain
  CHECK(count_order_ideals({{0, 1, 2}, {-1, 0, 0}}) == 5);    // two leaves under one root
}

TEST_CASE("interval_structure") {
  const FinitePoset p = build_poset(2, 2);
  const int bottom = p.minimum();
  auto s = interval_structure(p, make_interval(p, bottom, bottom));
  CHECK(s.is_distributive);
  CHECK(s.forest.nodes.empty());
  const int top = p.covers[bottom][0];
  s = interval_structure(p, make_interval(p, bottom, top));
  CHECK(s.forest.nodes.size() == 1);
  CHECK(s.ideal_count == 2);

  for (auto [m, n] : {std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 3}, std::pair{1, 5}}) {
    const FinitePoset q = build_poset(m, n);
    for (int a = 0; a < q.size(); ++a) {
      for (int b = 0; b < q.size(); ++b) {
        if (!q.leq(a, b)) continue;
        const Interval iv = make_interval(q, a, b);
        const auto fast = interval_structure(q, iv);
        const auto slow = analyze_interval_reference(q, iv);
        CHECK(slow.failure.empty());
        CHECK(slow.is_distributive);
        CHECK(fast.forest.nodes == slow.forest.nodes);
        CHECK(fast.forest.parent == slow.forest.parent);
        CHECK(fast.ideal_count == iv.elements.size());
      }
    }
  }
}

TEST_CASE("non-distributive lattices are rejected by both routes") {
  // M3: bottom 0, atoms 1..3, top 4.
  const FinitePoset m3 = from_covers({{1, 2, 3}, {4}, {4}, {4}, {}});
  const Interval all{0, 4, {0, 1, 2, 3, 4}};
  CHECK_FALSE(analyze_interval(m3, all).failure.empty());
  CHECK_FALSE(analyze_interval_reference(m3, all).is_distributive);
  CHECK_THROWS_AS(interval_structure(m3, all), Error);
  // N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
  const FinitePoset n5 = from_covers({{1, 3}, {2}, {4}, {4}, {}});
  CHECK_FALSE(analyze_interval(n5, all).failure.empty());
  CHECK_FALSE(analyze_interval_reference(n5, all).is_distributive);
  // Boolean lattice B2 passes.
  const FinitePoset b2 = from_covers({{1, 2}, {3}, {3}, {}});
  const Interval square{0, 3, {0, 1, 2, 3}};
  CHECK(analyze_interval(b2, square).failure.empty());
  CHECK(analyze_interval_reference(b2, square).failure.empty());
  // Two maximal elements: not a lattice.
  const FinitePoset vee = from_covers({{1, 2}, {}, {}});
  CHECK_FALSE(is_lattice(vee));
  CHECK(is_lattice(b2));
}

TEST_CASE("width_cover_check") {
  const FinitePoset p = build_poset(2, 2);
  const int hexagon = p.index_of(Dissection(2, 2, {{1, 4}}));
  CHECK(p.covered[hexagon].size() == 1);
  CHECK(width_cover_check(build_poset(3, 1)).pass);
  CHECK(width_cover_check(build_poset(2, 4)).pass);
  CHECK(width_cover_check(build_poset(3, 3)).pass);
}

TEST_CASE("upper_ideal_iso_check") {
  const FinitePoset p = build_poset(2, 4);
  CHECK(upper_ideal_iso_check(p, p, p.minimum()).pass);
  for (int i : p.maximal_elements()) CHECK(upper_ideal_iso_check(p, i).pass);
  for (int i = 0; i < p.size(); i += 7) CHECK(upper_ideal_iso_check(p, i).pass);
  CHECK_THROWS_AS(upper_ideal_iso_check(p, build_poset(2, 2), p.minimum()), Error);
}

TEST_CASE("degree profiles") {
  const FinitePoset p = build_poset(2, 2);
  const int bottom = p.minimum();
  const auto whole = degree_profile(p, make_interval(p, bottom, bottom));
  CHECK(whole == DegreeProfile{{{0, 0}, 1}});
  const DegreeProfile chain{{{0, 1}, 1}, {{1, 0}, 1}};
  CHECK(degree_profile(p, make_interval(p, bottom, p.covers[bottom][0])) == chain);
  CHECK(product_profile(chain, chain) == DegreeProfile{{{0, 2}, 1}, {{1, 1}, 2}, {{2, 0}, 1}});
}

TEST_CASE("the ambient poset is observed, not assumed, to be a lattice") {
  CHECK(is_lattice(build_poset(1, 2)));
  CHECK_FALSE(is_lattice(build_poset(2, 2)));
  CHECK_FALSE(is_lattice(build_poset(1, 3)));
}
