#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgw {

using Integer = mpz_class;

/// Integer Laurent polynomial in one variable q.
///
/// Terms are kept as (exponent, coefficient) pairs sorted by exponent with no
/// zero coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coeff, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1);
  /// Build from arbitrary (exponent, coeff) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// ±q^k with unit coefficient.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Integer coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;
  /// Multiply every coefficient by an integer.
  LaurentPoly scaled(const Integer& c) const;

  /// Quotient if `divisor` divides this exactly in Z[q,q^-1], nullopt otherwise.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Canonical text: `c*q^e` terms by ascending exponent joined by " + ";
  /// the zero polynomial prints as `0`.
  std::string to_string() const;
  /// Inverse of to_string. Also accepts bare `q`, `q^e`, integers and a
  /// leading sign on each term. Throws std::invalid_argument.
  static LaurentPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Fraction of Laurent polynomials, reduced lazily.
///
/// Only unit denominators (±q^k) are absorbed into the numerator; equality is
/// decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly numerator, LaurentPoly denominator);
  RationalFunction(long constant) : RationalFunction(LaurentPoly(constant)) {}  // NOLINT

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The numerator if the denominator is 1 after normalization.
  std::optional<LaurentPoly> as_laurent() const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  RationalFunction inverse() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

}  // namespace qgw
