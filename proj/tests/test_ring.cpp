#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace supercayley;

TEST(RingSpec, ParsesProductsAndQuotients) {
  const RingSpec z6 = parse_ring_spec("Z/6");
  EXPECT_EQ(z6.components().size(), 1U);
  EXPECT_EQ(z6.exponent(), 6);
  EXPECT_EQ(z6.size(), 6);

  const RingSpec cube = parse_ring_spec("Z/2 x Z/2 x Z/2");
  EXPECT_EQ(cube.components().size(), 3U);
  EXPECT_EQ(cube.exponent(), 2);
  EXPECT_EQ(cube.size(), 8);

  const RingSpec f9 = parse_ring_spec("GF(3)[x]/(x^2+1)");
  EXPECT_EQ(f9.components()[0].kind, ComponentKind::PolyQuotient);
  EXPECT_EQ(f9.exponent(), 3);
  EXPECT_EQ(f9.size(), 9);

  EXPECT_EQ(parse_ring_spec("Z/4 x GF(2)[x]/(x^2+x+1)").exponent(), 4);
  EXPECT_EQ(parse_ring_spec("  Z/12  ").size(), 12);
}

TEST(RingSpec, RejectsMalformedText) {
  for (const char* bad : {"", "Z/", "Z/-3", "Q/5", "Z/6 x", "GF(3)[x]/(x^2+1", "Z/5 y Z/7"})
    EXPECT_THROW(parse_ring_spec(bad), ParseError) << bad;
  // well-formed text naming something that is not a valid ring
  for (const char* bad : {"Z/1", "Z/0", "GF(4)[x]/(x^2+1)", "GF(3)[x]/(2)", "GF(3)[x]/(2*x^2+1)"})
    EXPECT_THROW(parse_ring_spec(bad), DomainError) << bad;
}

TEST(RingSpec, FunctionalValues) {
  const RingSpec z6 = parse_ring_spec("Z/6");
  EXPECT_EQ(z6.psi(5), 5);
  const RingSpec z2z3 = parse_ring_spec("Z/2 x Z/3");
  EXPECT_EQ(z2z3.psi(z2z3.parse_element("(1,2)")), 1);  // 3*1 + 2*2 = 7 = 1 mod 6
  const RingSpec f9 = parse_ring_spec("GF(3)[x]/(x^2+1)");
  EXPECT_EQ(f9.psi(f9.parse_element("1+2*x")), 2);
}

TEST(RingSpec, CharacterValues) {
  const RingSpec z6 = parse_ring_spec("Z/6");
  EXPECT_EQ(chi(z6, 1, 1), CycNumber::root_of_unity(6, 1));
  const RingSpec z9 = parse_ring_spec("Z/9");
  EXPECT_EQ(chi(z9, 1, 3), CycNumber::root_of_unity(3, 1).lift(9));
  for (const auto* text : {"Z/6", "Z/2 x Z/3", "GF(3)[x]/(x^2)"}) {
    const RingSpec R = parse_ring_spec(text);
    for (Elem s = 0; s < R.size(); ++s) EXPECT_EQ(chi(R, 0, s), CycNumber::one(static_cast<int>(R.exponent())));
  }
}

TEST(RingSpec, UnitGroups) {
  EXPECT_EQ(units(parse_ring_spec("Z/6")), (std::vector<Elem>{1, 5}));
  const RingSpec cube = parse_ring_spec("Z/2 x Z/2 x Z/2");
  ASSERT_EQ(cube.units().size(), 1U);
  EXPECT_EQ(cube.render(cube.units()[0]), "1,1,1");
  const RingSpec dual = parse_ring_spec("GF(3)[x]/(x^2)");
  const auto u = dual.units();
  EXPECT_EQ(u.size(), 6U);
  // brute force: a is a unit iff some b has ab = 1
  for (Elem a = 0; a < dual.size(); ++a) {
    bool inv = false;
    for (Elem b = 0; b < dual.size(); ++b) inv = inv || dual.mul(a, b) == dual.one();
    EXPECT_EQ(inv, std::binary_search(u.begin(), u.end(), a));
    EXPECT_EQ(inv, dual.element(a).coords[0][0] != 0);
  }
}

TEST(RingSpec, RandomRingsSatisfyTheAxioms) {
  for (int ring_trial = 0; ring_trial < 60; ++ring_trial) {
    const std::string text = oracle::random_ring_text(200);
    const RingSpec R = parse_ring_spec(text);
    const auto N = R.size();
    auto pick = [&] { return static_cast<Elem>(oracle::uniform(0, N - 1)); };
    for (int t = 0; t < 10000 / 60 + 1; ++t) {
      const Elem a = pick(), b = pick(), c = pick();
      ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))) << text;
      ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c))) << text;
      ASSERT_EQ(R.add(R.add(a, b), c), R.add(a, R.add(b, c))) << text;
      ASSERT_EQ(R.mul(a, b), R.mul(b, a)) << text;
      ASSERT_EQ(R.mul(a, R.one()), a) << text;
      ASSERT_EQ(R.add(a, R.neg(a)), R.zero()) << text;
      ASSERT_EQ(R.psi(R.add(a, b)), arith::mod(R.psi(a) + R.psi(b), R.exponent())) << text;
      ASSERT_EQ(R.parse_element(R.render(a)), a) << text;
    }
    // non-degeneracy: every nonzero a has some r with psi(ra) != 0
    for (Elem a = 1; a < N; ++a) {
      bool seen = false;
      for (Elem r = 0; r < N && !seen; ++r) seen = R.psi(R.mul(r, a)) != 0;
      ASSERT_TRUE(seen) << text << " at " << R.render(a);
    }
  }
}

TEST(Ideals, LatticeMatchesSubsetEnumeration) {
  for (const auto* text : {"Z/6", "Z/12", "Z/4 x Z/2", "GF(3)[x]/(x^2+1)", "Z/2 x Z/2 x Z/2", "GF(2)[x]/(x^3)",
                           "Z/2 x GF(2)[x]/(x^2)", "Z/9", "Z/3 x Z/3"}) {
    const RingSpec R = parse_ring_spec(text);
    std::set<std::vector<Elem>> expect;
    for (auto& I : oracle::all_ideals(R)) expect.insert(I);
    std::set<std::vector<Elem>> got;
    for (const auto& I : ideal_lattice(R)) got.insert(I.elements);
    EXPECT_EQ(got, expect) << text;
  }
  EXPECT_EQ(ideal_lattice(parse_ring_spec("Z/6")).size(), 4U);
  EXPECT_EQ(ideal_lattice(parse_ring_spec("GF(3)[x]/(x^2+1)")).size(), 2U);
  EXPECT_EQ(ideal_lattice(parse_ring_spec("Z/4 x Z/2")).size(), 6U);
}

TEST(Ideals, AnnihilatorSizesMultiplyToRingOrder) {
  for (int t = 0; t < 25; ++t) {
    const RingSpec R = parse_ring_spec(oracle::random_ring_text(300));
    for (const auto& I : ideal_lattice(R)) {
      EXPECT_EQ(static_cast<std::int64_t>(I.size() * I.annihilator.size()), R.size()) << R.to_string();
      for (Elem a : I.annihilator)
        for (Elem x : I.elements) EXPECT_EQ(R.mul(a, x), 0U);
    }
  }
}

TEST(Ideals, MaximalAndNilpotent) {
  const RingSpec z12 = parse_ring_spec("Z/12");
  const auto lat = ideal_lattice(z12);
  const auto maxi = maximal_ideals(lat, z12.size());
  ASSERT_EQ(maxi.size(), 2U);
  EXPECT_EQ(maxi[0].size() + maxi[1].size(), 6U + 4U);
  EXPECT_TRUE(is_nilpotent(z12, 6));
  EXPECT_FALSE(is_nilpotent(z12, 2));
  EXPECT_TRUE(is_nilpotent_ideal(z12, principal_ideal(z12, 6)));
  EXPECT_FALSE(is_nilpotent_ideal(z12, principal_ideal(z12, 4)));
}
