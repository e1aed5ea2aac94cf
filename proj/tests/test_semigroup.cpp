#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "monocurve/oracle.hpp"
#include "monocurve/semigroup.hpp"
#include "support/corpus.hpp"

using namespace monocurve;

TEST(GeneratorSet, RejectsInvalidInput) {
  EXPECT_THROW(GeneratorSet({5}), ValidationError);
  EXPECT_THROW(GeneratorSet({4, 6}), ValidationError);
  EXPECT_THROW(GeneratorSet({5, 3}), ValidationError);
  EXPECT_THROW(GeneratorSet({3, 3, 5}), ValidationError);
  EXPECT_THROW(GeneratorSet({0, 3, 5}), ValidationError);
  EXPECT_THROW(GeneratorSet({-1, 3}), ValidationError);
  EXPECT_NO_THROW(GeneratorSet({3, 5}));
}

TEST(GeneratorSet, ModulusDefaultsToLargest) {
  EXPECT_EQ(GeneratorSet({3, 5, 7}).modulus(), 7);
  EXPECT_EQ(GeneratorSet({3, 5, 7}, 3).modulus(), 3);
}

TEST(Apery, TableOneResidueFour) {
  const AperyTable t = apery(GeneratorSet({5, 9, 11, 20}));
  EXPECT_EQ(t.omega[4], 24);
  EXPECT_EQ(t.deg[4], 4);
}

TEST(Apery, ThreeFiveModuloFive) {
  const AperyTable t = apery(GeneratorSet({3, 5}, 5));
  EXPECT_EQ(t.omega, (std::vector<std::int64_t>{0, 6, 12, 3, 9}));
  EXPECT_EQ(t.deg, (std::vector<std::int64_t>{0, 2, 4, 1, 3}));
}

TEST(Apery, OneAndDIsIdentity) {
  for (std::int64_t d = 2; d <= 30; ++d) {
    const AperyTable t = apery(GeneratorSet({1, d}));
    for (std::int64_t i = 0; i < d; ++i) {
      EXPECT_EQ(t.omega[static_cast<std::size_t>(i)], i);
      EXPECT_EQ(t.deg[static_cast<std::size_t>(i)], i);
    }
  }
}

TEST(Apery, DegreeReachesDMinusOne) {
  // {1, d}: omega(d - 1) = d - 1 needs d - 1 copies of 1, one below the sentinel.
  const AperyTable t = apery(GeneratorSet({1, 17}));
  EXPECT_EQ(t.max_degree(), 16);
  EXPECT_EQ(t.steps, 17);
}

TEST(Apery, StepsIsMaxDegreePlusOne) {
  for (const auto& g : monocurve::testing::random_generator_sets(100, 80, 11)) {
    const AperyTable t = apery(GeneratorSet(g));
    EXPECT_EQ(t.steps, t.max_degree() + 1);
  }
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius(GeneratorSet({3, 5})), 7);
  EXPECT_EQ(frobenius(GeneratorSet({1, 4, 9})), -1);
  EXPECT_EQ(frobenius(GeneratorSet({5, 9, 11, 20})), oracle::bf_frobenius(GeneratorSet({5, 9, 11, 20})));
  EXPECT_EQ(frobenius(GeneratorSet({6, 9, 20})), 43);
}

TEST(Frobenius, TwoGeneratorClosedForm) {
  for (std::int64_t a = 2; a <= 25; ++a)
    for (std::int64_t b = a + 1; b <= 40; ++b)
      if (std::gcd(a, b) == 1) { EXPECT_EQ(frobenius(GeneratorSet({a, b})), a * b - a - b) << a << "," << b; }
}

TEST(Frobenius, EqualsLargestOmegaMinusModulus) {
  for (const auto& g : monocurve::testing::random_generator_sets(100, 90, 12)) {
    const GeneratorSet a(g);
    const AperyTable t = apery(a);
    EXPECT_EQ(frobenius(a), *std::max_element(t.omega.begin(), t.omega.end()) - a.modulus());
  }
}

TEST(Membership, Examples) {
  const GeneratorSet a({3, 5});
  EXPECT_TRUE(membership(a, 8));
  EXPECT_FALSE(membership(a, 7));
  EXPECT_FALSE(membership(a, -1));
  EXPECT_TRUE(membership(a, 0));
}

TEST(Membership, MatchesAperyCriterion) {
  for (const auto& g : monocurve::testing::random_generator_sets(40, 60, 13)) {
    const GeneratorSet a(g);
    const AperyTable t = apery(a);
    for (std::int64_t n = -3; n < 400; ++n) {
      const bool expect = n >= 0 && t.omega[static_cast<std::size_t>(n % t.modulus)] <= n;
      ASSERT_EQ(membership(a, n), expect);
      ASSERT_EQ(membership(t, n), expect);
    }
  }
}

TEST(Apery, MinimalityAndCongruence) {
  for (const auto& g : monocurve::testing::random_generator_sets(80, 100, 14)) {
    const GeneratorSet a(g);
    const AperyTable t = apery(a);
    ASSERT_EQ(t.omega[0], 0);
    ASSERT_EQ(t.deg[0], 0);
    for (std::int64_t i = 0; i < t.modulus; ++i) {
      const auto w = t.omega[static_cast<std::size_t>(i)];
      ASSERT_EQ(w % t.modulus, i);
      ASSERT_FALSE(membership(a, w - t.modulus));
      ASSERT_EQ(degree(a, w), t.deg[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(GeneratorSet({5, 9, 11, 20}), 24), 4);
  EXPECT_EQ(degree(GeneratorSet({3, 5}), 0), 0);
  EXPECT_EQ(degree(GeneratorSet({3, 5}), 8), 2);
  EXPECT_EQ(degree(GeneratorSet({5, 11, 12}), 18), not_in_semigroup);
  EXPECT_EQ(degree(GeneratorSet({3, 5}), 7), not_in_semigroup);
}

TEST(Degree, NonMinimalGeneratingSet) {
  // 6 = 3 + 3 is redundant but shortens 6 and 12.
  EXPECT_EQ(degree(GeneratorSet({3, 5, 6}), 12), 2);
  EXPECT_EQ(degree(GeneratorSet({3, 5}), 12), 4);
}

TEST(Degree, MatchesExhaustiveSearch) {
  for (const auto& g : monocurve::testing::random_generator_sets(60, 60, 15)) {
    const GeneratorSet a(g);
    for (std::int64_t n = 0; n <= 400; ++n) ASSERT_EQ(degree(a, n), oracle::bf_degree(a, n)) << n;
  }
}

TEST(Degree, Subadditive) {
  for (const auto& g : monocurve::testing::random_generator_sets(30, 40, 16)) {
    const GeneratorSet a(g);
    for (std::int64_t m = 0; m <= 120; m += 3)
      for (std::int64_t n = 0; n <= 120; n += 5) {
        const Degree dm = degree(a, m), dn = degree(a, n);
        if (!dm || !dn) continue;
        ASSERT_LE(*degree(a, m + n), *dm + *dn);
      }
  }
}

TEST(DegreeTable, MatchesDegree) {
  const GeneratorSet a({5, 9, 11, 20});
  const DegreeTable t = degree_table(a, 20, 8);
  EXPECT_EQ(t.at(0, 0), 0);
  EXPECT_EQ(t.at(4, 1), 4);
  for (std::int64_t i = 0; i < 20; ++i)
    for (std::int64_t j = 0; j <= 3; ++j) {
      const Degree e = t.at(i, j);
      if (e) { EXPECT_EQ(e, degree(a, i + 20 * j)) << i << "," << j; }
    }
}

TEST(DegreeTable, FiniteCellsAreMembers) {
  for (const auto& g : monocurve::testing::random_generator_sets(20, 40, 17)) {
    const GeneratorSet a(g);
    const std::int64_t d = a.largest();
    const DegreeTable t = degree_table(a, d, 6);
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t j = 0; j <= 4; ++j)
        if (t.at(i, j)) { ASSERT_TRUE(membership(a, i + j * d)); }
  }
}

TEST(GapProfile, Examples) {
  const GapProfile p = gap_profile(GeneratorSet({5, 9, 11, 20}));
  EXPECT_EQ(p.lambdas, (std::vector<std::int64_t>{4, 3, 1, 8}));
  EXPECT_EQ(p.lambda_max, 8);
  EXPECT_EQ(p.lambda_sl, 4);

  const GapProfile e = gap_profile(GeneratorSet({5, 11, 12}));
  EXPECT_EQ(e.lambda_max, 5);

  const GapProfile one = gap_profile(GeneratorSet({1, 2, 3, 9, 10}));
  EXPECT_EQ(one.lambda_max, 5);
  EXPECT_EQ(one.lambda_sl, 0);
  ASSERT_EQ(one.blocks.size(), 2u);
  EXPECT_EQ(one.blocks[0], (Block{0, 3}));
  EXPECT_EQ(one.blocks[1], (Block{9, 10}));
  EXPECT_EQ(one.r(), 1u);
}

TEST(GapProfile, RepeatedMaximum) {
  const GapProfile p = gap_profile(GeneratorSet({4, 8, 9}));
  EXPECT_EQ(p.lambda_max, 3);
  EXPECT_EQ(p.lambda_sl, 3);
}

TEST(GapProfile, Invariants) {
  for (const auto& g : monocurve::testing::random_generator_sets(100, 80, 18)) {
    const GeneratorSet a(g);
    const GapProfile p = gap_profile(a);
    const auto sum = std::accumulate(p.lambdas.begin(), p.lambdas.end(), std::int64_t{0});
    ASSERT_EQ(sum, a.largest() - static_cast<std::int64_t>(a.size()));
    ASSERT_LE(p.lambda_sl, p.lambda_max);
    for (std::size_t j = 1; j < p.blocks.size(); ++j) ASSERT_LE(p.blocks[j - 1].last + 2, p.blocks[j].first);
    ASSERT_EQ(p.blocks.front().first, 0);
    ASSERT_EQ(p.blocks.back().last, a.largest());
  }
}
