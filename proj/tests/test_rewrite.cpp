#include "qgw/qalg.hpp"
#include "qgw/rewrite.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

std::shared_ptr<const CartanData> type_a(int rank) {
  return std::make_shared<const CartanData>(CartanData::type_a(rank));
}

FormalSum nf(const std::string& text, int rank, std::vector<int> content) {
  return normal_form(parse_sum(text, type_a(rank), Weight::from_content(std::move(content))));
}

TEST(Rewrite, MergesDividedPowers) {
  EXPECT_EQ(nf("E1 E1", 1, {2, 1}).to_string(), "(1*q^-1 + 1*q^1) * E1^(2)");
  EXPECT_EQ(nf("F2^(2) F2", 2, {0, 0, 3}).to_string(),
            "(1*q^-2 + 1*q^0 + 1*q^2) * F2^(3)");
}

TEST(Rewrite, SerreSplit) {
  EXPECT_EQ(nf("E1 E2 E1", 2, {1, 1, 1}).to_string(),
            "(1*q^0) * E1^(2) E2 + (1*q^0) * E2 E1^(2)");
}

TEST(Rewrite, StraightensAndMatchesOracle) {
  const auto cartan = type_a(1);
  const Weight w = Weight::from_content({0, 2});
  const auto sum = parse_sum("E1 F1", cartan, w);
  const auto out = normal_form(sum);
  EXPECT_EQ(out.to_string(), "(1*q^-1 + 1*q^1) * id + (1*q^0) * F1 E1");
  EXPECT_TRUE(oracle_equal(sum, out, 2, 2).passed());
}

TEST(Rewrite, DistantLettersCommuteFLeft) {
  EXPECT_EQ(nf("E1 F2", 2, {0, 1, 1}).to_string(), "(1*q^0) * F2 E1");
  EXPECT_EQ(nf("E3 E1", 3, {1, 0, 1, 0}).to_string(), "(1*q^0) * E1 E3");
}

TEST(Rewrite, ParseErrorsCarryTokenPosition) {
  const auto cartan = type_a(2);
  const Weight w = Weight::from_content({1, 1, 1});
  try {
    parse_sum("E1 X2", cartan, w);
    FAIL() << "expected a parse error";
  } catch (const RewriteParseError& e) {
    EXPECT_EQ(e.token, 2u);
  }
  EXPECT_THROW(parse_sum("E1 E4", cartan, w), RewriteParseError);
  EXPECT_THROW(parse_sum("E1 + F1", cartan, w), std::invalid_argument);
  // Syntax alone is fine even when the weights of the terms disagree.
  const auto terms = parse_terms("q^2 * E1^(2) + E2 F1", *cartan);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].first, LaurentPoly::q(2));
  EXPECT_EQ(terms[1].second.to_string(), "E2 F1");
}

TEST(Rewrite, NullWordsAreKeptButEvaluateToZero) {
  const auto cartan = type_a(1);
  const Weight w = Weight::from_content({0, 1});
  FormalSum s(cartan, w);
  s.add(parse_terms("E1", *cartan)[0].second, 1);
  EXPECT_TRUE(is_null_word(*cartan, s.terms().begin()->first, w));
  EXPECT_TRUE(s.prune_null().is_zero());
  EXPECT_FALSE(s.is_zero());
}

TEST(Rewrite, MeasureDropsOnEveryRule) {
  const auto cartan = type_a(2);
  const auto before = measure(*cartan, parse_terms("E1 F1", *cartan)[0].second);
  const auto after = measure(*cartan, parse_terms("F1 E1", *cartan)[0].second);
  EXPECT_LT(after, before);
  EXPECT_GT(measure_chain_bound(before), 1);
}

TEST(Rewrite, RandomSweepIsSoundAndConfluent) {
  RewriteSweep sweep;
  sweep.N_max = 4;
  sweep.samples = 150;
  sweep.seed = 7;
  EXPECT_TRUE(check_rewrite_soundness(sweep).passed());
  sweep.samples = 40;
  EXPECT_TRUE(check_rewrite_confluence(sweep).passed());
}

TEST(Rewrite, TerminatesOnOtherGraphs) {
  RewriteSweep sweep;
  sweep.samples = 100;
  const auto d4 = std::make_shared<const CartanData>(cartan_from_graph(preset_graph("D4")));
  EXPECT_TRUE(check_rewrite_termination(d4, sweep).passed());
}

TEST(Rewrite, OracleRejectsDifferentSums) {
  const auto cartan = type_a(2);
  const Weight w = Weight::from_content({2, 1, 0});
  const auto r = oracle_equal(parse_sum("E1 E2 E1", cartan, w), parse_sum("E1^(2) E2", cartan, w), 3, 3);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Rewrite, RealizeWeight) {
  const auto w = realize_weight(Weight(std::vector<int>{0, 1}), 3, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w->content(), (std::vector<int>{1, 1, 2}));
  EXPECT_FALSE(realize_weight(Weight(std::vector<int>{0, 1}), 3, 3).has_value());
  EXPECT_FALSE(realize_weight(Weight(std::vector<int>{5, 0}), 3, 2).has_value());
}

}  // namespace
}  // namespace qgw
