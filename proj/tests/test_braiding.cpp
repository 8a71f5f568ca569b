#include "qgw/braiding.hpp"
#include "qgw/qalg.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

// The convention the search settles on; pinned so a change is noticed.
const GradingConvention kChosen{-1, 0, -1, -1, -1, 1};

TEST(Braiding, DerivationFindsPinnedConvention) {
  const auto r = derive_grading_convention(2);
  EXPECT_EQ(r.chosen, kChosen);
  ASSERT_EQ(r.passing.size(), 2u);
  EXPECT_EQ(r.passing[1], (GradingConvention{1, 0, -1, 1, -1, -1}));
  EXPECT_TRUE(r.q_one_baseline);
  EXPECT_THROW(derive_grading_convention(0), ConventionNotFound);
  EXPECT_TRUE(check_q_one_baseline().passed());
}

TEST(Braiding, RankOneAtQOne) {
  // On V itself: T(u1) = -u2 and T(u2) = u1 with the E-exponent sign rule.
  const WeightModule m(2, 1, Specialization::q_one);
  const auto t = braid_operator(m, kChosen, 1);
  const auto& from_u1 = t.block(Weight::from_content({1, 0}));
  const auto& from_u2 = t.block(Weight::from_content({0, 1}));
  EXPECT_EQ(*from_u1.target.content(), (std::vector<int>{0, 1}));
  EXPECT_EQ(from_u1.matrix.at(0, 0), LaurentPoly(-1));
  EXPECT_EQ(from_u2.matrix.at(0, 0), LaurentPoly(1));
}

TEST(Braiding, BlocksReflectAndInvert) {
  const WeightModule m(3, 3);
  for (int i = 1; i <= 2; ++i) {
    const auto t = braid_operator(m, kChosen, i);
    for (const auto& b : t.blocks) EXPECT_EQ(b.target, reflect(m.cartan(), b.source, i));
    const auto inv = invert(t);
    for (const auto& b : t.blocks) {
      const auto& back = inv.block(b.target);
      EXPECT_EQ(compose(back, to_rational(b)).matrix,
                SparseMatrix<RationalFunction>::identity(m.dimension(b.source)));
    }
    EXPECT_TRUE(check_weyl_compatibility(m, kChosen, i).passed());
  }
}

TEST(Braiding, BraidRelations) {
  const WeightModule m(4, 3);
  EXPECT_TRUE(check_braid_relation(m, kChosen, 1, 2).passed());
  EXPECT_TRUE(check_braid_relation(m, kChosen, 2, 3).passed());
  EXPECT_TRUE(check_braid_relation(m, kChosen, 1, 3).passed());
  const WeightModule one(4, 3, Specialization::q_one);
  EXPECT_TRUE(check_braid_relation(one, GradingConvention{0, 0}, 1, 2).passed());
}

TEST(Braiding, ZeroShiftBreaksBraidRelation) {
  const WeightModule m(3, 3);
  const auto r = check_braid_relation(m, GradingConvention{0, 0}, 1, 2);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.counterexample->weight.empty());
}

TEST(Braiding, ConjugationAndFactorization) {
  for (auto spec : {Specialization::generic, Specialization::q_one}) {
    const WeightModule m(3, 3, spec);
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
      EXPECT_TRUE(conjugation_check(m, kChosen, i, j).passed());
      EXPECT_TRUE(check_tij_factorization(m, kChosen, i, j).passed());
    }
  }
}

TEST(Braiding, WrongRootUnitIsDetected) {
  const WeightModule m(3, 2);
  GradingConvention flipped = kChosen;
  flipped.eps = 1;
  EXPECT_FALSE(conjugation_check(m, flipped, 1, 2).passed());
  GradingConvention shifted = kChosen;
  shifted.c = 1;
  EXPECT_FALSE(conjugation_check(m, shifted, 1, 2).passed());
}

TEST(Braiding, ReportCarriesConvention) {
  const WeightModule m(3, 2);
  const auto r = check_braid_relation(m, kChosen, 1, 2);
  ASSERT_FALSE(r.sections.empty());
  EXPECT_EQ(r.sections[0].first, "convention");
  EXPECT_EQ(r.sections[0].second.at("c1"), -1);
  EXPECT_EQ(r.citation, "thm-2.10");
}

}  // namespace
}  // namespace qgw
