#include <gtest/gtest.h>

#include <random>

#include "monocurve/oracle.hpp"
#include "monocurve/verify.hpp"
#include "support/corpus.hpp"

using namespace monocurve;
namespace bf = monocurve::oracle;

TEST(Oracle, MembershipExamples) {
  const GeneratorSet a({3, 5});
  EXPECT_FALSE(bf::bf_membership(a, 7));
  EXPECT_TRUE(bf::bf_membership(a, 8));
  EXPECT_FALSE(bf::bf_membership(a, -4));
  EXPECT_THROW(bf::bf_membership(a, bf::kMaxMembership + 1), bf::RangeError);
}

TEST(Oracle, MembershipAgreesOnRandomQueries) {
  std::mt19937_64 rng(51);
  const auto sets = monocurve::testing::random_generator_sets(50, 100, 52);
  for (int q = 0; q < 10'000; ++q) {
    const GeneratorSet a(sets[static_cast<std::size_t>(q) % sets.size()]);
    const auto n = std::uniform_int_distribution<std::int64_t>(-5, 3000)(rng);
    ASSERT_EQ(membership(a, n), bf::bf_membership(a, n)) << n;
  }
}

TEST(Oracle, AperyExamples) {
  const AperyTable t = bf::bf_apery(GeneratorSet({3, 5}, 5));
  EXPECT_EQ(t.omega, (std::vector<std::int64_t>{0, 6, 12, 3, 9}));
  const AperyTable id = bf::bf_apery(GeneratorSet({1, 9}));
  for (std::int64_t i = 0; i < 9; ++i) EXPECT_EQ(id.deg[static_cast<std::size_t>(i)], i);
  const AperyTable t1 = bf::bf_apery(GeneratorSet({5, 9, 11, 20}));
  EXPECT_EQ(t1.omega[4], 24);
  EXPECT_EQ(t1.deg[4], 4);
  EXPECT_EQ(t1.omega[17], 37);
  EXPECT_EQ(t1.deg[17], 5);
}

TEST(Oracle, RangeGuards) {
  EXPECT_THROW(bf::bf_apery(GeneratorSet({2, 201})), bf::RangeError);
  EXPECT_THROW(bf::bf_frobenius(GeneratorSet({2, 201})), bf::RangeError);
  EXPECT_THROW(bf::bf_degree(GeneratorSet({3, 5}), 501), bf::RangeError);
  std::vector<std::int64_t> big{1, 2, 61};
  EXPECT_THROW(bf::bf_sprime_minus_s(CurveSpec(big)), bf::RangeError);
  EXPECT_THROW(bf::bf_sigma(CurveSpec({1, 7, 13, 29, 150})), bf::RangeError);
}

TEST(Oracle, AperyAndFrobeniusAgree) {
  for (const auto& g : monocurve::testing::random_generator_sets(150, 150, 53)) {
    const GeneratorSet a(g);
    const AperyTable f = apery(a), o = bf::bf_apery(a);
    ASSERT_EQ(f.omega, o.omega);
    ASSERT_EQ(f.deg, o.deg);
    ASSERT_EQ(frobenius(a), bf::bf_frobenius(a));
  }
}

TEST(Oracle, SprimeMinusSExamples) {
  EXPECT_EQ(bf::bf_sprime_minus_s(CurveSpec({5, 9, 11, 20})), (std::vector<LatticePoint>{{24, 36}}));
  EXPECT_TRUE(bf::bf_sprime_minus_s(CurveSpec({1, 2, 7})).empty());
  EXPECT_EQ(bf::bf_sprime_minus_s(CurveSpec({2, 10, 22, 57})).size(), 2u);
}

TEST(Oracle, CohomologyAgrees) {
  for (const auto& c : monocurve::testing::random_curves({80, 4, 40, 10, 54})) {
    const CohomologyProfile p = first_cohomology(c);
    const bf::BfCohomology o = bf::bf_cohomology(c);
    ASSERT_EQ(p.Lprime, o.points) << to_string(c);
    ASSERT_EQ(p.a1, o.a1) << to_string(c);
    ASSERT_EQ(p.a2, o.a2) << to_string(c);
    ASSERT_EQ(p.ell_h1, o.ell) << to_string(c);
    if (!c.is_full()) { ASSERT_EQ(p.reg, o.reg) << to_string(c); }
    ASSERT_EQ(p.I, bf::bf_index_set(c)) << to_string(c);
  }
}

TEST(Oracle, SigmaExamples) {
  const CurveSpec c({1, 3, 11, 13});
  EXPECT_EQ(bf::bf_sigma(c), first_cohomology(c).reg);
  EXPECT_EQ(bf::bf_sigma(CurveSpec({1, 2, 3, 4})), 1);
}

TEST(Verify, CrossCheckPasses) {
  const VerifyReport r = cross_check(CurveSpec({5, 9, 11, 20}));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.checked.empty());
  EXPECT_TRUE(r.skipped.empty());
}

TEST(Verify, OutOfRangeIsSkipped) {
  const VerifyReport r = cross_check(CurveSpec({39, 58, 68, 129, 158}));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.skipped.empty());
}

TEST(Verify, CorpusHasNoMismatches) {
  for (const auto& c : monocurve::testing::random_curves({60, 4, 60, 10, 55})) {
    const VerifyReport r = cross_check(c);
    for (const auto& m : r.mismatches) ADD_FAILURE() << to_string(c) << " " << m.what << ": " << m.fast << " vs " << m.oracle;
  }
}
