#include "qgw/matrix.hpp"

namespace qgw {

namespace {

using Dense = std::vector<std::vector<LaurentPoly>>;

Dense to_dense(const SparseMatrix<LaurentPoly>& a, int extra_identity_cols) {
  const int n = a.rows();
  Dense d(n, std::vector<LaurentPoly>(a.cols() + extra_identity_cols));
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, v] : a.row(r)) d[r][c] = v;
    if (extra_identity_cols) d[r][a.cols() + r] = 1;
  }
  return d;
}

LaurentPoly exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den == LaurentPoly(1)) return num;
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *q;
}

// Fraction-free elimination over columns [0, n). When `jordan` is set, rows
// above the pivot are cleared too. Returns the sign of the row permutation, or
// 0 if a zero pivot column was met.
int bareiss(Dense& m, int n, bool jordan, LaurentPoly& last_pivot) {
  const int width = m.empty() ? 0 : static_cast<int>(m[0].size());
  int sign = 1;
  LaurentPoly prev(1);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    const LaurentPoly pivot = m[k][k];
    for (int i = jordan ? 0 : k + 1; i < n; ++i) {
      if (i == k) continue;
      const LaurentPoly factor = m[i][k];
      for (int j = jordan ? 0 : k + 1; j < width; ++j) {
        if (j == k) continue;
        LaurentPoly v = pivot * m[i][j];
        if (!factor.is_zero() && !m[k][j].is_zero()) v -= factor * m[k][j];
        m[i][j] = exact(v, prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = pivot;
  }
  last_pivot = prev;
  return sign;
}

}  // namespace

LaurentPoly determinant(const SparseMatrix<LaurentPoly>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  Dense m = to_dense(a, 0);
  LaurentPoly last;
  const int sign = bareiss(m, n, false, last);
  if (sign == 0) return {};
  return sign > 0 ? last : -last;
}

std::optional<AdjugateResult> adjugate(const SparseMatrix<LaurentPoly>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  const int n = a.rows();
  if (n == 0) return AdjugateResult{SparseMatrix<LaurentPoly>(0, 0), LaurentPoly(1)};
  Dense m = to_dense(a, n);
  LaurentPoly last;
  const int sign = bareiss(m, n, true, last);
  if (sign == 0) return std::nullopt;
  // Left block is now last*I and the right block is last*A^{-1}; last is
  // det(A) up to the permutation sign.
  if (sign < 0) last = -last;
  SparseMatrix<LaurentPoly> right(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) right.set(r, c, sign < 0 ? -m[r][n + c] : std::move(m[r][n + c]));
  return AdjugateResult{std::move(right), std::move(last)};
}

std::optional<SparseMatrix<RationalFunction>> inverse(const SparseMatrix<LaurentPoly>& a) {
  auto adj = adjugate(a);
  if (!adj) return std::nullopt;
  const LaurentPoly& d = adj->determinant;
  return adj->adjugate.map([&](const LaurentPoly& p) { return RationalFunction(p, d); });
}

}  // namespace qgw
