#include <gtest/gtest.h>

#include "monocurve/bounds.hpp"
#include "monocurve/oracle.hpp"
#include "support/corpus.hpp"

using namespace monocurve;

namespace {

std::vector<std::int64_t> example51(std::int64_t k) {
  std::vector<std::int64_t> a{2 * k - 1};
  for (std::int64_t i = 2; i <= k; ++i) a.push_back(2 * (2 * k - 1) + (i - 1));
  return a;
}

}  // namespace

TEST(Schur, Examples) {
  EXPECT_EQ(schur_bound(GeneratorSet({3, 5})), 7);
  EXPECT_EQ(schur_bound(GeneratorSet({1, 4})), -1);
  EXPECT_EQ(schur_bound(GeneratorSet({5, 9, 11, 20})), 75);
  EXPECT_GE(75, oracle::bf_frobenius(GeneratorSet({5, 9, 11, 20})));
}

TEST(Selmer, DistinctResidues) {
  const Bound b = selmer_bound(GeneratorSet({5, 7, 9, 16}));
  ASSERT_TRUE(b.applicable);
  EXPECT_EQ(b.values, (std::vector<std::int64_t>{27}));
  EXPECT_GE(27, frobenius(GeneratorSet({5, 7, 9, 16})));
}

TEST(Selmer, ResidueCountVariant) {
  const Bound b = selmer_residue_bound(GeneratorSet({3, 5}));
  ASSERT_TRUE(b.applicable);
  EXPECT_EQ(b.values[0], 7);
  EXPECT_EQ(residue_count(GeneratorSet({3, 5}), 3), 2u);
}

TEST(Selmer, RepeatedResiduesNotApplicable) {
  const GeneratorSet a({4, 6, 9, 13});
  EXPECT_FALSE(selmer_bound(a).applicable);
  EXPECT_FALSE(selmer_bound(a).reason.empty());
  const Bound r = selmer_residue_bound(a);
  ASSERT_TRUE(r.applicable);
  EXPECT_GE(r.values[0], frobenius(a));
}

TEST(Selmer, DominatesOnRandomSets) {
  for (const auto& g : monocurve::testing::random_generator_sets(200, 120, 31)) {
    const GeneratorSet a(g);
    const std::int64_t f = frobenius(a);
    EXPECT_GE(schur_bound(a), f);
    const Bound s = selmer_bound(a);
    if (s.applicable) { EXPECT_GE(s.values[0], f); }
    EXPECT_GE(selmer_residue_bound(a).values[0], f);
    const Bound dw = delta_omega_bound(a);
    if (dw.applicable) { EXPECT_GE(dw.values[0], apery(a).max_degree()); }
  }
}

TEST(DeltaOmega, Examples) {
  const Bound b = delta_omega_bound(GeneratorSet({3, 5}));
  ASSERT_TRUE(b.applicable);
  EXPECT_GE(b.values[0], apery(GeneratorSet({3, 5})).max_degree());
  EXPECT_FALSE(delta_omega_bound(GeneratorSet({4, 6, 9, 13})).applicable);
  for (std::int64_t k = 3; k <= 12; ++k) {
    const GeneratorSet a(example51(k));
    const Bound e = delta_omega_bound(a);
    ASSERT_TRUE(e.applicable) << k;
    EXPECT_EQ(e.values[0], 6);
    EXPECT_EQ(apery(a).max_degree(), 6) << k;
  }
}

TEST(FrobSum, Cases) {
  // eps = 2 and 0, 1 lie in A1.
  const CurveSpec run({1, 2, 3, 5});
  const FrobSumBounds r = frobsum_bound(run);
  ASSERT_TRUE(r.run.applicable);
  EXPECT_EQ(r.run.values[0], 0);
  EXPECT_EQ(r.sharpest, 0);

  const CurveSpec adj({4, 5, 11});
  const FrobSumBounds a = frobsum_bound(adj);
  ASSERT_TRUE(a.adjacent.applicable);
  EXPECT_EQ(a.adjacent.values[0], frobenius_epsilon(adj) - 2);

  const CurveSpec gen({5, 9, 11, 20});
  const FrobSumBounds g = frobsum_bound(gen);
  ASSERT_TRUE(g.generic.applicable);
  EXPECT_EQ(g.generic.values[0], 5 + 9 - 3);
  EXPECT_FALSE(g.adjacent.applicable);
  EXPECT_FALSE(g.run.applicable);
}

TEST(A2Bound, Examples) {
  EXPECT_EQ(a2_bound(CurveSpec({1, 3, 6, 7})), -1);
  EXPECT_GE(a2_bound(CurveSpec({5, 9, 11, 20})), 3);
  for (std::int64_t k = 3; k <= 10; ++k) EXPECT_LE(a2_bound(CurveSpec(example51(k))), 1) << k;
}

TEST(A1Bounds, ExampleFamilyAttained) {
  for (std::int64_t k = 5; k <= 20; ++k) {
    const CurveSpec c(example51(k));
    const WProfile w = build_profile(c);
    const A1Bounds b = a1_bounds(c, w);
    ASSERT_TRUE(b.lower.applicable);
    EXPECT_EQ(b.lower.values[0], 5) << k;
    EXPECT_EQ(b.upper_ii.values[0], 5) << k;
    EXPECT_EQ(b.upper_iii.values[0], 5) << k;
    EXPECT_EQ(w.ap2.max_degree(), 4) << k;
    EXPECT_EQ(first_cohomology(c).a1, 5);
  }
}

TEST(A1Bounds, ExampleFamilySmallK) {
  // A2 = {0, 1, ..., k-2, 3k-2, d}: max delta over Ap(A2) is ceil((3k-3)/(k-2)).
  const std::vector<std::pair<std::int64_t, std::int64_t>> upper{{3, 7}, {4, 6}};
  for (const auto& [k, u] : upper) {
    const CurveSpec c(example51(k));
    const WProfile w = build_profile(c);
    const A1Bounds b = a1_bounds(c, w);
    EXPECT_EQ(w.ap2.max_degree(), ceil_div(3 * k - 3, k - 2)) << k;
    EXPECT_EQ(b.lower.values[0], 5) << k;
    EXPECT_EQ(b.upper_iii.values[0], u) << k;
    EXPECT_EQ(first_cohomology(c).a1, 5);
  }
}

TEST(A1Bounds, CohenMacaulayNotApplicable) {
  const CurveSpec c({1, 2, 7});
  const A1Bounds b = a1_bounds(c, build_profile(c));
  EXPECT_FALSE(b.lower.applicable);
  EXPECT_FALSE(b.upper_ii.applicable);
  EXPECT_FALSE(b.upper_iii.applicable);
}

TEST(A1Bounds, TableOneSandwich) {
  const CurveSpec c({5, 9, 11, 20});
  const A1Bounds b = a1_bounds(c, build_profile(c));
  EXPECT_LE(b.lower.values[0], 3);
  EXPECT_GE(b.upper_ii.values[0], 3);
  EXPECT_GE(b.upper_iii.values[0], 3);
  ASSERT_TRUE(b.upper_iii.exact);
}

TEST(RegBounds, GlpAndLvovsky) {
  const CurveSpec c({5, 9, 11, 20});
  EXPECT_EQ(lvovsky_bound(c), 13);
  EXPECT_EQ(glp_bound(c), 17);
  const CurveSpec one({1, 2, 3, 9, 10});
  EXPECT_EQ(lvovsky_bound(one), 5 + 1);
}

TEST(SmoothBound, Examples) {
  const CurveSpec c({1, 3, 11, 12});
  const SmoothBounds s = smooth_bound(c);
  ASSERT_TRUE(s.upper.applicable);
  EXPECT_EQ(s.upper.values[0], 8);
  EXPECT_GE(8, first_cohomology(c).reg);
  EXPECT_FALSE(smooth_bound(CurveSpec({5, 9, 11, 20})).upper.applicable);
}

TEST(SmoothBound, ShortGapsGiveTwo) {
  // lambda_max = 1 <= eps = 2.
  const CurveSpec c({1, 2, 4, 6, 7, 8});
  const SmoothBounds s = smooth_bound(c);
  ASSERT_TRUE(s.upper.applicable);
  EXPECT_EQ(s.upper.values[0], 2);
  EXPECT_TRUE(first_cohomology(c).buchsbaum);
}

TEST(SmoothBound, LowerAndUpperSandwich) {
  // a_1..a_p = 1..p, then one gap of length lambda = lambda_max, eps = p.
  for (std::int64_t p = 1; p <= 4; ++p)
    for (std::int64_t lambda = p + 1; lambda <= 12; ++lambda) {
      std::vector<std::int64_t> a;
      for (std::int64_t x = 1; x <= p; ++x) a.push_back(x);
      const std::int64_t start = p + lambda + 1;
      for (std::int64_t x = start; x < start + p + 1; ++x) a.push_back(x);
      const CurveSpec c(a);
      if (smooth_epsilon(c) != p) continue;
      const SmoothBounds s = smooth_bound(c);
      const std::int64_t reg = first_cohomology(c).reg;
      ASSERT_TRUE(s.upper.applicable) << to_string(c);
      ASSERT_TRUE(s.lower.applicable) << to_string(c);
      EXPECT_LE(s.lower.values[0], reg) << to_string(c);
      EXPECT_GE(s.upper.values[0], reg) << to_string(c);
    }
}

TEST(BuchsbaumRegBounds, OnlyForBuchsbaum) {
  const CurveSpec c({5, 9, 11, 20});
  const BuchsbaumRegBounds b = buchsbaum_reg_bounds(c, true);
  ASSERT_TRUE(b.generic.applicable);
  EXPECT_EQ(b.generic.values[0], 5 + 20 - 11);
  EXPECT_GE(b.generic.values[0], 5);
  EXPECT_FALSE(buchsbaum_reg_bounds(c, false).generic.applicable);
}

TEST(R1Values, Examples) {
  const Bound i = r1_values(CurveSpec({1, 3, 4, 5}));
  ASSERT_TRUE(i.applicable);
  EXPECT_EQ(i.values, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(first_cohomology(CurveSpec({1, 3, 4, 5})).reg, 2);

  const Bound ii = r1_values(CurveSpec({1, 2, 7}));
  ASSERT_TRUE(ii.applicable);
  EXPECT_EQ(ii.values, (std::vector<std::int64_t>{2, 3}));

  const Bound na = r1_values(CurveSpec({1, 2, 3, 7, 8}));
  EXPECT_FALSE(na.applicable);
  EXPECT_EQ(na.reason, "p > d - q");
  EXPECT_FALSE(r1_values(CurveSpec({5, 9, 11, 20})).applicable);
}

TEST(Bd2Bound, Applicability) {
  EXPECT_FALSE(bd2_bound(CurveSpec({1, 2, 7})).applicable);
  const Bound b = bd2_bound(CurveSpec({2, 3, 7, 8, 9, 13, 14}));
  EXPECT_EQ(b.applicable, true) << b.reason;
  if (b.applicable) { EXPECT_GE(b.values[0], first_cohomology(CurveSpec({2, 3, 7, 8, 9, 13, 14})).reg); }
}

TEST(TheoremA9, NotApplicableWhenA1BelowK) {
  const TheoremA9Bounds t = theorem_a9_bound(CurveSpec({1, 3, 11, 13}));
  EXPECT_FALSE(t.reg.applicable);
}

TEST(TheoremA9, ExactRationalAndDomination) {
  std::size_t seen = 0;
  for (const auto& c : monocurve::testing::random_curves({400, 8, 120, 8, 33})) {
    const TheoremA9Bounds t = theorem_a9_bound(c);
    if (!t.reg.applicable) continue;
    ++seen;
    ASSERT_TRUE(t.reg.exact);
    const CohomologyProfile p = first_cohomology(c);
    EXPECT_LE(p.reg, t.reg.values[0]) << to_string(c);
    EXPECT_TRUE(p.reg <= *t.reg.exact);
    if (p.a1) { EXPECT_LE(*p.a1, t.a1.values[0]) << to_string(c); }
  }
  EXPECT_GT(seen, 0u);
}

TEST(BoundReport, TableOneCurve) {
  const BoundReport r = bound_report(CurveSpec({5, 9, 11, 20}));
  EXPECT_TRUE(r.all_hold());
  ASSERT_NE(r.find("lvovsky"), nullptr);
  EXPECT_EQ(r.find("lvovsky")->values[0], 13);
  EXPECT_EQ(r.targets.reg, 5);
  EXPECT_EQ(r.targets.a1, 3);
  EXPECT_EQ(r.find("sigma_gw"), nullptr);
}

TEST(BoundReport, CohenMacaulayRows) {
  const BoundReport r = bound_report(CurveSpec({1, 2, 7}));
  for (const char* name : {"a1_lower", "a1_upper_ii", "a1_upper_iii"}) {
    const BoundEntry* e = r.find(name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_FALSE(e->applicable);
    EXPECT_FALSE(e->holds);
  }
  EXPECT_TRUE(r.all_hold());
}

TEST(BoundReport, ExampleFamilyAttained) {
  const CurveSpec c(example51(5));
  const BoundReport r = bound_report(c);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.find("a1_lower")->values[0], r.targets.a1);
  EXPECT_EQ(r.find("a1_upper_iii")->values[0], r.targets.a1);
  EXPECT_EQ(r.find("delta_omega_A1")->values[0], r.targets.delta_omega1);
}

TEST(BoundReport, Satisfies) {
  BoundEntry e;
  e.kind = BoundKind::upper;
  e.values = {5};
  EXPECT_TRUE(satisfies(e, 5));
  EXPECT_FALSE(satisfies(e, 6));
  e.kind = BoundKind::lower;
  EXPECT_TRUE(satisfies(e, 6));
  EXPECT_FALSE(satisfies(e, 4));
  e.kind = BoundKind::one_of;
  e.values = {2, 3};
  EXPECT_TRUE(satisfies(e, 3));
  EXPECT_FALSE(satisfies(e, 4));
}

TEST(BoundReport, EnumRoundTrip) {
  for (auto t : {BoundTarget::F1, BoundTarget::F2, BoundTarget::frob_sum, BoundTarget::delta_omega1,
                 BoundTarget::delta_omega2, BoundTarget::a1, BoundTarget::a2, BoundTarget::reg, BoundTarget::sigma})
    EXPECT_EQ(parse_bound_target(to_string(t)), t);
  for (auto k : {BoundKind::upper, BoundKind::lower, BoundKind::exact, BoundKind::one_of})
    EXPECT_EQ(parse_bound_kind(to_string(k)), k);
  EXPECT_FALSE(parse_bound_target("nope"));
}

TEST(BoundReport, DominationOnCorpus) {
  for (const auto& c : monocurve::testing::random_curves({150, 4, 80, 10, 34})) {
    const BoundReport r = bound_report(c);
    for (const auto& e : r.entries)
      if (e.applicable && e.holds) { ASSERT_TRUE(*e.holds) << to_string(c) << " " << e.name; }
    ASSERT_GE(glp_bound(c), lvovsky_bound(c));
    ASSERT_GE(lvovsky_bound(c), r.targets.reg) << to_string(c);
    const FrobSumBounds f = frobsum_bound(c);
    if (frobenius_epsilon(c) < 2) continue;
    if (f.run.applicable && f.adjacent.applicable) { ASSERT_LE(f.run.values[0], f.adjacent.values[0]); }
    if (f.run.applicable) { ASSERT_LE(f.run.values[0], f.generic.values[0]); }
  }
}
