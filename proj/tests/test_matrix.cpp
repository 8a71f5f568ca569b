#include "qgw/matrix.hpp"
#include "qgw/qalg.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

using M = SparseMatrix<LaurentPoly>;

TEST(Matrix, ProductAndIdentity) {
  const M a = M::from_triplets(2, 2, {{0, 0, 1}, {0, 1, LaurentPoly::q(1)}, {1, 1, 1}});
  EXPECT_EQ(a * M::identity(2), a);
  const M sq = a * a;
  EXPECT_EQ(sq.at(0, 1), LaurentPoly::monomial(2, 1));
  EXPECT_EQ(sq.nonzeros(), 3u);
}

TEST(Matrix, DeterminantOfKnownMatrix) {
  // [[q, 1], [1, q^-1]] has determinant 0; [[[2], 1], [1, [2]]] has [2]^2 - 1 = [3].
  const M singular = M::from_triplets(2, 2, {{0, 0, LaurentPoly::q(1)}, {0, 1, 1}, {1, 0, 1},
                                              {1, 1, LaurentPoly::q(-1)}});
  EXPECT_TRUE(determinant(singular).is_zero());
  EXPECT_FALSE(inverse(singular).has_value());
  const M a = M::from_triplets(2, 2, {{0, 0, qint(2)}, {0, 1, 1}, {1, 0, 1}, {1, 1, qint(2)}});
  EXPECT_EQ(determinant(a), qint(3));
}

TEST(Matrix, InverseOverFractionField) {
  const M a = M::from_triplets(3, 3, {{0, 0, qint(2)}, {0, 2, 1}, {1, 1, LaurentPoly::q(-1)},
                                      {2, 0, 1}, {2, 1, 1}, {2, 2, qint(3)}});
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(to_rational(a) * *inv, SparseMatrix<RationalFunction>::identity(3));
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(M(2, 3) * M(2, 3), std::invalid_argument);
  EXPECT_THROW(M(-1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace qgw
