#include "qgw/nilhecke.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

// d_k on a monomial, from the geometric-series formula
// (x^a y^b - x^b y^a) / (x - y) with x = x_k, y = x_{k+1}.
MultiPoly demazure_closed_form(int k, const MultiPoly::Exponents& e) {
  MultiPoly out(static_cast<int>(e.size()));
  const int a = e[k - 1], b = e[k];
  const int sign = a > b ? 1 : -1;
  const int lo = std::min(a, b), hi = std::max(a, b);
  for (int t = 0; t < hi - lo; ++t) {
    auto f = e;
    f[k - 1] = lo + t;
    f[k] = hi - 1 - t;
    out.add_term(f, sign);
  }
  return out;
}

TEST(NilHecke, DemazureMatchesClosedForm) {
  for (int m = 2; m <= 4; ++m)
    for (const auto& mono : all_monomials(m, 6))
      for (int k = 1; k < m; ++k) {
        const auto& [e, c] = *mono.terms().begin();
        EXPECT_EQ(demazure(k, mono), demazure_closed_form(k, e)) << mono.to_string();
      }
}

TEST(NilHecke, DemazureBasics) {
  const auto x1 = MultiPoly::variable(2, 1), x2 = MultiPoly::variable(2, 2);
  EXPECT_EQ(demazure(1, x1), MultiPoly::constant(2, 1));
  EXPECT_EQ(demazure(1, x1 * x2), MultiPoly(2));
  EXPECT_EQ((x1 + x2).to_string(), "1*x2 + 1*x1");
  EXPECT_THROW(demazure(2, x1), std::out_of_range);
  EXPECT_EQ(demazure(1, x1 * x1).internal_degree(), 2);
}

TEST(NilHecke, MonomialEnumeration) {
  // C(m + d, d) monomials of degree <= d.
  EXPECT_EQ(all_monomials(3, 4).size(), 35u);
  EXPECT_EQ(all_monomials(2, 0).size(), 1u);
  EXPECT_EQ(random_polynomials(3, 4, 5, 9), random_polynomials(3, 4, 5, 9));
}

TEST(NilHecke, Relations) {
  for (int m = 2; m <= 4; ++m) EXPECT_TRUE(check_nilhecke(m, 6, 0, 1).passed()) << m;
  EXPECT_TRUE(check_nilhecke(3, 8, 25, 3).passed());
}

TEST(KLR, CrossingRules) {
  const auto a2 = CartanData::type_a(2);
  const auto one = MultiPoly::constant(2, 1);
  // Lower to higher color is a plain swap, the way back multiplies by x1 + x2.
  const auto up = klr_crossing(a2, ColoredWord{1, 2}, 1, one);
  EXPECT_EQ(up, KLRElement(ColoredWord{2, 1}, one));
  const auto down = klr_crossing(a2, up, 1);
  EXPECT_EQ(down, KLRElement(ColoredWord{1, 2}, MultiPoly::variable(2, 1) + MultiPoly::variable(2, 2)));
  // Equal colors: the Demazure operator kills constants.
  EXPECT_TRUE(klr_crossing(a2, ColoredWord{1, 1}, 1, one).is_zero());
}

TEST(KLR, EdgeAndDoubleCrossing) {
  const auto a3 = CartanData::type_a(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      EXPECT_TRUE(check_klr_double_crossing(a3, i, j, 6, 0, 1).passed()) << i << j;
      if (a3.adjacent(i, j)) EXPECT_TRUE(check_klr_edge_relation(a3, i, j, 6, 0, 1).passed());
    }
  EXPECT_THROW(check_klr_edge_relation(a3, 1, 3, 4, 0, 1), std::invalid_argument);
}

TEST(KLR, TheoremSixComposite) {
  const auto a2 = CartanData::type_a(2);
  EXPECT_TRUE(check_theorem6_computation(a2, 1, 2, 8, 0, 1).passed());
  EXPECT_TRUE(check_theorem6_computation(a2, 2, 1, 8, 0, 1).passed());
  const auto broken =
      check_theorem6_computation(a2, 1, 2, 4, 0, 1, Theorem6Variant::drop_inner_demazure);
  EXPECT_FALSE(broken.passed());
  EXPECT_TRUE(broken.counterexample.has_value());
}

}  // namespace
}  // namespace qgw
