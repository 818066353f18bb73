#include <gtest/gtest.h>

#include "support.hpp"

using namespace supercayley;

namespace {

CycNumber z(int n, std::int64_t k = 1) { return CycNumber::root_of_unity(n, k); }

}  // namespace

TEST(Ramanujan, SmallValues) {
  const RingSpec z6 = parse_ring_spec("Z/6");
  const UnitSubgroup U = subgroup_from(z6, UnitSubgroupSpec::full());
  EXPECT_EQ(ramanujan(U, 0), CycNumber::integer(6, 2));
  EXPECT_EQ(ramanujan(U, 1), CycNumber::integer(6, 1));
  EXPECT_EQ(ramanujan(U, 3), CycNumber::integer(6, -2));
}

TEST(Ramanujan, HoelderFormulaOnCyclicRings) {
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t g = 0; g < n; ++g) {
      // sum over a coprime to n of zeta^{ag}, straight from the definition
      CycNumber direct = CycNumber::zero(static_cast<int>(n));
      for (std::int64_t a = 0; a < n; ++a)
        if (std::gcd(a, n) == 1) direct += z(static_cast<int>(n), a * g);
      ASSERT_EQ(direct, CycNumber::integer(static_cast<int>(n), static_cast<long>(hoelder(n, g)))) << n << " " << g;
      if (n >= 2) {
        const RingSpec R = parse_ring_spec("Z/" + std::to_string(n));
        ASSERT_EQ(ramanujan(GeneratingFunctional(R), R.units(), static_cast<Elem>(g)), direct);
      }
    }
  }
}

TEST(Ramanujan, ClosedFormOnEveryElement) {
  const auto z6 = ramanujan_closed_form(parse_ring_spec("Z/6"), 1);
  EXPECT_EQ(z6.value, CycNumber::integer(6, 1));
  EXPECT_EQ(z6.mu_quotient, 1);
  const auto z4 = ramanujan_closed_form(parse_ring_spec("Z/4"), 2);
  EXPECT_EQ(z4.value, CycNumber::integer(4, -2));
  EXPECT_EQ(z4.phi_quotient, 1);
  const auto zero = ramanujan_closed_form(parse_ring_spec("Z/12"), 0);
  EXPECT_EQ(zero.value, CycNumber::integer(12, 4));

  for (int t = 0; t < 40; ++t) {
    const RingSpec R = parse_ring_spec(oracle::random_ring_text(150));
    for (Elem g = 0; g < R.size(); ++g) {
      const auto cf = ramanujan_closed_form(R, g);
      EXPECT_TRUE(cf.agrees) << R.to_string() << " g = " << R.render(g);
      EXPECT_EQ(cf.value, cf.direct);
    }
  }
}

TEST(Ramanujan, QuotientFormulaForTableEntries) {
  for (const auto& [ring, spec] : std::vector<std::pair<std::string, UnitSubgroupSpec>>{
           {"Z/12", UnitSubgroupSpec::full()},
           {"Z/9", UnitSubgroupSpec::pth_powers(3)},
           {"Z/4 x Z/2", UnitSubgroupSpec::full()},
           {"GF(3)[x]/(x^2)", UnitSubgroupSpec::squares()},
           {"Z/15", UnitSubgroupSpec::squares()}}) {
    const auto t = build_theory(subgroup_from(parse_ring_spec(ring), spec));
    EXPECT_TRUE(quotient_formula_check(sigma_table(t)).ok()) << ring;
  }
}

TEST(MultChar, ValuesAndKernels) {
  const RingSpec z5 = parse_ring_spec("Z/5");
  const auto leg = build_mult_char(z5, MultCharKind::Jacobi);
  EXPECT_EQ(leg.value(1), CycNumber::one(2));
  EXPECT_EQ(leg.value(4), CycNumber::one(2));
  EXPECT_EQ(leg.value(2), CycNumber::integer(2, -1));
  EXPECT_EQ(leg.value(3), CycNumber::integer(2, -1));
  EXPECT_TRUE(leg.value(0).is_zero());
  EXPECT_EQ(leg.kernel(), (std::vector<Elem>{1, 4}));

  const RingSpec z7 = parse_ring_spec("Z/7");
  const auto cubic = build_mult_char(z7, MultCharKind::PowerResidue, 3);
  EXPECT_EQ(cubic.d, 3);
  EXPECT_EQ(cubic.kernel(), (std::vector<Elem>{1, 6}));
  EXPECT_TRUE(is_multiplicative(cubic));

  const RingSpec z12 = parse_ring_spec("Z/12");
  const auto triv = build_mult_char(z12, MultCharKind::Trivial);
  EXPECT_EQ(triv.kernel(), z12.units());
  for (Elem x = 0; x < 12; ++x) EXPECT_EQ(triv.value(x), CycNumber::integer(1, z12.is_unit(x) ? 1 : 0));
  EXPECT_THROW(build_mult_char(z12, MultCharKind::PowerResidue, 2), DomainError);  // (Z/12)^x is not cyclic
  EXPECT_THROW(build_mult_char(z7, MultCharKind::PowerResidue, 4), DomainError);

  const RingSpec z65 = parse_ring_spec("Z/65");
  const auto jac = build_mult_char(z65, MultCharKind::Jacobi);
  const auto ker = jac.kernel();
  for (Elem a = 0; a < 65; ++a)
    EXPECT_EQ(std::binary_search(ker.begin(), ker.end(), a), std::gcd(a, 65U) == 1 && arith::jacobi_symbol(a, 65) == 1);
  for (const auto& rho : {leg, cubic, triv, jac}) EXPECT_TRUE(kernel_indicator_check(rho)) << rho.descriptor;
}

TEST(Gauss, QuadraticSums) {
  const RingSpec z5 = parse_ring_spec("Z/5");
  const auto leg = build_mult_char(z5, MultCharKind::Jacobi);
  const CycNumber tau = gauss(leg, 1);
  EXPECT_EQ(tau, z(5) - z(5, 2) - z(5, 3) + z(5, 4));
  EXPECT_EQ(tau * conj(tau), CycNumber::integer(5, 5));
  EXPECT_TRUE(gauss(leg, 0).is_zero());
  EXPECT_EQ(gauss(build_mult_char(z5, MultCharKind::Trivial), 1), CycNumber::integer(5, -1));

  for (std::int64_t p : {3, 7, 11, 13, 17, 19, 23, 29}) {
    const RingSpec R = parse_ring_spec("Z/" + std::to_string(p));
    const auto rho = build_mult_char(R, MultCharKind::Jacobi);
    const CycNumber t = gauss(rho, 1);
    EXPECT_EQ(t * conj(t), CycNumber::integer(1, static_cast<long>(p))) << p;
    EXPECT_EQ(t * t, CycNumber::integer(1, static_cast<long>(p % 4 == 1 ? p : -p))) << p;
  }
}

TEST(Gauss, RamanujanSumOverKernel) {
  const RingSpec z5 = parse_ring_spec("Z/5");
  const auto leg = build_mult_char(z5, MultCharKind::Jacobi);
  const CycNumber c = ramanujan(GeneratingFunctional(z5), leg.kernel(), 1);
  EXPECT_EQ(c, (gauss(build_mult_char(z5, MultCharKind::Trivial), 1) + gauss(leg, 1)) / Rational(2));
  EXPECT_NEAR(c.approx().real(), (std::sqrt(5.0) - 1) / 2, 1e-12);

  for (const auto* ring : {"Z/13", "Z/7", "Z/25", "Z/65", "GF(2)[x]/(x^3+x+1)", "GF(3)[x]/(x^2+1)"}) {
    const RingSpec R = parse_ring_spec(ring);
    std::vector<MultChar> chars{build_mult_char(R, MultCharKind::Trivial)};
    const auto order = static_cast<std::int64_t>(R.units().size());
    for (std::int64_t d : arith::divisors(order))
      if (d > 1) {
        try {
          chars.push_back(build_mult_char(R, MultCharKind::PowerResidue, d));
        } catch (const DomainError&) {
        }
      }
    for (const auto& rho : chars)
      for (Elem g = 0; g < R.size(); ++g) ASSERT_TRUE(ramanujan_via_gauss_check(rho, g)) << ring << " " << rho.descriptor;
  }
}

TEST(Heilbronn, SmallValues) {
  EXPECT_EQ(heilbronn(3, 0), CycNumber::integer(9, 2));
  EXPECT_EQ(heilbronn(3, 3), CycNumber::integer(9, -1));
  EXPECT_EQ(heilbronn(5, 0), CycNumber::integer(25, 4));
  EXPECT_THROW(heilbronn(9, 1), DomainError);
}
