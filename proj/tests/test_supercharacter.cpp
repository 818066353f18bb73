#include <gtest/gtest.h>

#include "support.hpp"

using namespace supercayley;

namespace {

SuperTheory theory(const std::string& ring, const UnitSubgroupSpec& spec) {
  const RingSpec R = parse_ring_spec(ring);
  return build_theory(subgroup_from(R, spec));
}

std::vector<std::vector<Elem>> class_list(const SuperTheory& t) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < t.class_count(); ++i) out.push_back(t.class_of(i));
  return out;
}

const std::vector<std::pair<std::string, UnitSubgroupSpec>>& sample_theories() {
  static const std::vector<std::pair<std::string, UnitSubgroupSpec>> v{
      {"Z/6", UnitSubgroupSpec::full()},
      {"Z/5", UnitSubgroupSpec::squares()},
      {"Z/9", UnitSubgroupSpec::pth_powers(3)},
      {"Z/8", UnitSubgroupSpec::involutions()},
      {"Z/13", UnitSubgroupSpec::jacobi()},
      {"Z/12", UnitSubgroupSpec::full()},
      {"Z/4 x Z/2", UnitSubgroupSpec::full()},
      {"GF(3)[x]/(x^2+1)", UnitSubgroupSpec::squares()},
      {"GF(2)[x]/(x^2+x+1)", UnitSubgroupSpec::full()},
      {"GF(3)[x]/(x^2)", UnitSubgroupSpec::full()},
      {"Z/2 x Z/2 x Z/2", UnitSubgroupSpec::full()},
      {"Z/3 x Z/5", UnitSubgroupSpec::squares()},
      {"Z/25", UnitSubgroupSpec::pth_powers(5)},
  };
  return v;
}

}  // namespace

TEST(UnitSubgroup, Descriptors) {
  const RingSpec z5 = parse_ring_spec("Z/5");
  EXPECT_EQ(subgroup_from(z5, UnitSubgroupSpec::squares()).elements(), (std::vector<Elem>{1, 4}));
  const RingSpec z9 = parse_ring_spec("Z/9");
  EXPECT_EQ(subgroup_from(z9, UnitSubgroupSpec::pth_powers(3)).elements(), (std::vector<Elem>{1, 8}));
  std::vector<Elem> cubes;
  for (Elem u : z9.units()) cubes.push_back(z9.pow(u, 3));
  std::sort(cubes.begin(), cubes.end());
  cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
  EXPECT_EQ(cubes, (std::vector<Elem>{1, 8}));
  const RingSpec z8 = parse_ring_spec("Z/8");
  EXPECT_EQ(subgroup_from(z8, UnitSubgroupSpec::involutions()).elements(), (std::vector<Elem>{1, 3, 5, 7}));
  // -1 is adjoined when missing: the squares mod 7 are {1,2,4}
  const RingSpec z7 = parse_ring_spec("Z/7");
  EXPECT_EQ(subgroup_from(z7, UnitSubgroupSpec::squares()).size(), 6U);
  EXPECT_THROW(subgroup_from(z7, UnitSubgroupSpec::generated({3, 0})), DomainError);
}

TEST(UnitSubgroup, ClosedAndContainsMinusOne) {
  for (int t = 0; t < 30; ++t) {
    const RingSpec R = parse_ring_spec(oracle::random_ring_text(120));
    for (const auto& spec : {UnitSubgroupSpec::full(), UnitSubgroupSpec::squares(), UnitSubgroupSpec::involutions()}) {
      const UnitSubgroup U = subgroup_from(R, spec);
      EXPECT_TRUE(U.contains(R.one()));
      EXPECT_TRUE(U.contains(R.neg(R.one())));
      for (Elem a : U.elements())
        for (Elem b : U.elements()) ASSERT_TRUE(U.contains(R.mul(a, b))) << R.to_string();
    }
  }
}

TEST(SuperTheory, OrbitPartitions) {
  const auto z6 = theory("Z/6", UnitSubgroupSpec::full());
  EXPECT_EQ(class_list(z6), (std::vector<std::vector<Elem>>{{0}, {1, 5}, {2, 4}, {3}}));
  const auto cube = theory("Z/2 x Z/2 x Z/2", UnitSubgroupSpec::full());
  EXPECT_EQ(cube.class_count(), 8U);
  const RingSpec f4 = parse_ring_spec("GF(2)[x]/(x^2+x+1)");
  const auto gf4 = build_theory(subgroup_from(f4, UnitSubgroupSpec::generated({f4.one()})));
  EXPECT_EQ(gf4.class_count(), 4U);
  const auto z5 = theory("Z/5", UnitSubgroupSpec::full());
  EXPECT_EQ(class_list(z5), (std::vector<std::vector<Elem>>{{0}, {1, 2, 3, 4}}));
  for (const auto& [ring, spec] : sample_theories()) {
    const auto t = theory(ring, spec);
    EXPECT_EQ(t.class_of(0), std::vector<Elem>{0});
    std::vector<int> hit(static_cast<std::size_t>(t.ring().size()), 0);
    for (std::size_t i = 0; i < t.class_count(); ++i)
      for (Elem x : t.class_of(i)) {
        ++hit[x];
        EXPECT_EQ(t.class_index(x), i);
      }
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) << ring;
  }
}

TEST(SuperTheory, TableMatchesDirectCharacterSums) {
  for (const auto& [ring, spec] : sample_theories()) {
    const auto t = theory(ring, spec);
    const auto table = sigma_table(t);
    const RingSpec& R = t.ring();
    const int n = static_cast<int>(R.exponent());
    for (std::size_t i = 0; i < t.class_count(); ++i)
      for (std::size_t j = 0; j < t.class_count(); ++j) {
        CycNumber direct = CycNumber::zero(n);
        for (Elem x : t.class_of(i)) direct += CycNumber::root_of_unity(n, R.psi(R.mul(x, t.representative(j))));
        ASSERT_EQ(table.sigma[i][j], direct) << ring << " " << i << "," << j;
      }
  }
}

TEST(SuperTheory, DualityAndTransposeOnEveryCell) {
  for (const auto& [ring, spec] : sample_theories()) {
    const auto t = theory(ring, spec);
    const auto table = sigma_table(t);
    const auto m = table.m();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_EQ(table.omega[j][i] * Rational(static_cast<long>(table.dual_sizes[i])),
                  table.sigma[i][j] * Rational(static_cast<long>(t.class_size(j))));
        EXPECT_EQ(table.omega[j][i], table.sigma[j][i]);
        EXPECT_EQ(table.sigma[i][j], conj(table.sigma[i][j]));
      }
    EXPECT_TRUE(verify_sigma_table(table).ok()) << ring;
    EXPECT_TRUE(column_orthogonality_check(table).ok()) << ring;
  }
}

TEST(SuperFourier, KnownTransforms) {
  const auto z5 = theory("Z/5", UnitSubgroupSpec::full());
  const auto table = sigma_table(z5);
  const auto zero = super_fourier(table, SuperclassFunction::zero(z5));
  for (const auto& v : zero.values) EXPECT_TRUE(v.is_zero());
  const auto at_zero = super_fourier(table, SuperclassFunction::indicator(z5, {0}));
  for (const auto& v : at_zero.values) EXPECT_EQ(v, CycNumber::one(5));
  const auto complete = super_fourier(table, SuperclassFunction::indicator(z5, {1}));
  EXPECT_EQ(complete.values[0], CycNumber::integer(5, 4));
  EXPECT_EQ(complete.values[1], CycNumber::integer(5, -1));
}

TEST(SuperFourier, SquareIsScaledIdentity) {
  for (const auto& [ring, spec] : sample_theories()) {
    const auto t = theory(ring, spec);
    const auto table = sigma_table(t);
    const int n = static_cast<int>(t.ring().exponent());
    EXPECT_TRUE(double_transform_check(table, SuperclassFunction::zero(t)));
    for (std::size_t i = 0; i < t.class_count(); ++i)
      EXPECT_TRUE(double_transform_check(table, SuperclassFunction::indicator(t, {i}))) << ring;
    for (int trial = 0; trial < 5; ++trial) {
      SuperclassFunction f = SuperclassFunction::zero(t);
      for (auto& v : f.values) v = CycNumber::rational(n, oracle::random_rational(20, 6));
      EXPECT_TRUE(double_transform_check(table, f)) << ring;
    }
  }
}

TEST(PartitionCheck, RejectsIncompatiblePartitions) {
  const auto t = theory("Z/6", UnitSubgroupSpec::full());
  const auto good = class_list(t);
  EXPECT_TRUE(check_partition(t.functional(), good, good).is_theory());
  // {1,2} and {4,5} are not unions of dual classes: the superclass sums are not constant
  const std::vector<std::vector<Elem>> bad{{0}, {1, 2}, {4, 5}, {3}};
  EXPECT_FALSE(check_partition(t.functional(), bad, bad).is_theory());
  const std::vector<std::vector<Elem>> no_zero{{0, 3}, {1, 5}, {2, 4}};
  EXPECT_FALSE(check_partition(t.functional(), no_zero, no_zero).is_theory());
}
