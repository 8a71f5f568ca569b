#include "qgw/qalg.hpp"

#include <stdexcept>
#include <string>

namespace qgw {

LaurentPoly qint(int n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int e = 1 - n; e <= n - 1; e += 2) terms.emplace_back(e, 1);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact of negative integer " + std::to_string(n));
  LaurentPoly p(1);
  for (int k = 2; k <= n; ++k) p *= qint(k);
  return p;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || k > n) return {};
  auto quotient = qfact(n).divide_exact(qfact(k) * qfact(n - k));
  if (!quotient) {
    throw std::logic_error("inexact q-binomial division for (" + std::to_string(n) + ", " +
                           std::to_string(k) + ")");
  }
  return *quotient;
}

LaurentPoly gdim_proj(int n) {
  if (n < -1) throw std::invalid_argument("projective space of dimension " + std::to_string(n));
  return qint(n + 1);
}

LaurentPoly bar_involution(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(-e, c);
  return LaurentPoly::from_terms(std::move(terms));
}

Integer evaluate_at_one(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

LaurentPoly decat_shift(int cohomological, int equivariant) {
  return LaurentPoly::monomial(cohomological % 2 == 0 ? 1 : -1, equivariant);
}

}  // namespace qgw
