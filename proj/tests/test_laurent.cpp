#include "qgw/laurent.hpp"
#include "qgw/qalg.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

// q-Pascal recurrence, independent of the factorial quotient.
LaurentPoly pascal(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  return pascal(n - 1, k).shifted(-k) + pascal(n - 1, k - 1).shifted(n - k);
}

TEST(Laurent, CanonicalText) {
  EXPECT_EQ(qint(2).to_string(), "1*q^-1 + 1*q^1");
  EXPECT_EQ(LaurentPoly(1).to_string(), "1*q^0");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((LaurentPoly::q(2) - LaurentPoly::monomial(3, -1)).to_string(), "-3*q^-1 + 1*q^2");
}

TEST(Laurent, ParseRoundTrip) {
  for (const char* text : {"1*q^-1 + 1*q^1", "-3*q^-1 + 1*q^2", "0", "5*q^0"})
    EXPECT_EQ(LaurentPoly::parse(text).to_string(), text);
  EXPECT_EQ(LaurentPoly::parse("q^2 - q"), LaurentPoly::q(2) - LaurentPoly::q(1));
  EXPECT_THROW(LaurentPoly::parse("q^"), std::invalid_argument);
}

TEST(Laurent, ArithmeticAndDivision) {
  const LaurentPoly a = qint(3), b = qint(2);
  EXPECT_EQ(a * b, qint(4) + qint(2));
  EXPECT_EQ((a * b).divide_exact(b), a);
  EXPECT_FALSE(qint(3).divide_exact(qint(2)).has_value());
  EXPECT_TRUE(LaurentPoly::monomial(-1, 5).is_unit());
  EXPECT_FALSE(LaurentPoly(2).is_unit());
}

TEST(QAlg, QuantumIntegers) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(-3), -qint(3));
  EXPECT_EQ(qint(3).to_string(), "1*q^-2 + 1*q^0 + 1*q^2");
  EXPECT_EQ(qfact(3), qint(1) * qint(2) * qint(3));
}

TEST(QAlg, BinomialMatchesPascal) {
  for (int n = 0; n <= 9; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(qbinom(n, k), pascal(n, k)) << n << ' ' << k;
  EXPECT_EQ(qbinom(4, 2).to_string(), "1*q^-4 + 1*q^-2 + 2*q^0 + 1*q^2 + 1*q^4");
  EXPECT_TRUE(qbinom(-2, 1).is_zero());
}

TEST(QAlg, SpecializationsAndSymmetry) {
  EXPECT_EQ(evaluate_at_one(qbinom(6, 3)), 20);
  EXPECT_EQ(bar_involution(qbinom(5, 2)), qbinom(5, 2));
  EXPECT_EQ(gdim_proj(2), qint(3));
  EXPECT_EQ(decat_shift(1, 2), LaurentPoly::monomial(-1, 2));
}

TEST(Rational, CrossMultiplicationEquality) {
  const RationalFunction a(qint(4), qint(2));
  EXPECT_EQ(a, RationalFunction(LaurentPoly::q(2) + LaurentPoly::q(-2)));
  EXPECT_EQ(a * a.inverse(), RationalFunction(1));
  EXPECT_FALSE(RationalFunction(qint(3), qint(2)).as_laurent().has_value());
}

}  // namespace
}  // namespace qgw
