#pragma once

#include "qgw/cartan.hpp"
#include "qgw/laurent.hpp"
#include "qgw/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qgw {

/// Polynomial in x_1..x_m with integer coefficients. Each x_k has internal
/// degree 2.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int variables = 0) : m_(variables) {}
  static MultiPoly constant(int variables, const Integer& c);
  /// x_k, 1-based.
  static MultiPoly variable(int variables, int k);
  static MultiPoly monomial(Exponents e, const Integer& c = 1);

  int variables() const { return m_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree in the x's; -1 for zero.
  int degree() const;
  /// Twice degree(), the grading in which x_k sits in degree 2.
  int internal_degree() const { return is_zero() ? -1 : 2 * degree(); }
  bool is_homogeneous() const;

  void add_term(const Exponents& e, const Integer& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// s_k: exchange x_k and x_{k+1}.
  MultiPoly swapped(int k) const;
  /// x_k * f.
  MultiPoly times_variable(int k) const;

  /// e.g. `3*x1^2*x3 + -1*x2`; `0` when zero.
  std::string to_string() const;

 private:
  void check_same(const MultiPoly& o) const;
  int m_;
  std::map<Exponents, Integer> terms_;
};

/// (f - s_k f) / (x_k - x_{k+1}) by long division in x_k. Throws
/// std::out_of_range for k outside 1..m-1 and std::logic_error on a remainder.
MultiPoly demazure(int k, const MultiPoly& f);

/// Every monomial of total degree <= degree_bound in m variables, in
/// graded lexicographic order.
std::vector<MultiPoly> all_monomials(int m, int degree_bound);
/// `samples` random polynomials of degree <= degree_bound (a handful of terms
/// with small coefficients), deterministic in `seed`.
std::vector<MultiPoly> random_polynomials(int m, int degree_bound, int samples,
                                          std::uint64_t seed);

/// Test inputs: all monomials when samples == 0, else random polynomials.
std::vector<MultiPoly> test_polynomials(int m, int degree_bound, int samples, std::uint64_t seed);

/// Relations (a) d_k^2 = 0, (b) d_k d_{k+1} d_k = d_{k+1} d_k d_{k+1},
/// (c) x_k d_k - d_k x_{k+1} = 1 = -x_{k+1} d_k + d_k x_k, and the degree drop
/// of d_k by 2 internal units.
VerificationReport check_nilhecke(int m, int degree_bound, int samples, std::uint64_t seed);

using ColoredWord = std::vector<int>;

/// Vector of the KLR polynomial representation: one polynomial per word.
class KLRElement {
 public:
  KLRElement() = default;
  KLRElement(ColoredWord w, MultiPoly f);

  const std::map<ColoredWord, MultiPoly>& components() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  void add(const ColoredWord& w, const MultiPoly& f);
  KLRElement& operator+=(const KLRElement& o);
  /// Multiply every component by x_k.
  KLRElement times_variable(int k) const;
  std::string to_string() const;
  friend bool operator==(const KLRElement&, const KLRElement&) = default;

 private:
  std::map<ColoredWord, MultiPoly> parts_;
};

/// The crossing at strands (k, k+1) on the component (w, f). Equal colors:
/// demazure. Non-adjacent colors: swap variables and colors. Adjacent colors
/// a < b: (a,b) -> (b,a) swaps freely; (b,a) -> (a,b) swaps and multiplies by
/// x_k + x_{k+1}.
KLRElement klr_crossing(const CartanData& cartan, const ColoredWord& w, int k, const MultiPoly& f);
/// Linear extension to all components.
KLRElement klr_crossing(const CartanData& cartan, const KLRElement& v, int k);

/// Double crossing on the word (i, j): x_1 + x_2 for adjacent colors, the
/// identity for distinct non-adjacent colors, zero for i == j.
VerificationReport check_klr_double_crossing(const CartanData& cartan, int i, int j,
                                             int degree_bound, int samples, std::uint64_t seed);
/// T_ji T_ij = x_1 + x_2 on (i, j); throws std::invalid_argument unless adjacent.
VerificationReport check_klr_edge_relation(const CartanData& cartan, int i, int j,
                                           int degree_bound, int samples, std::uint64_t seed);

enum class Theorem6Variant {
  as_stated,
  /// Negative control: the rightmost demazure factor is dropped.
  drop_inner_demazure,
};

/// On the word (j, i, i): d_2 o T_1 o T_1 o d_2 = d_2, and the intermediate
/// identity d_2 (x_1 + x_2) d_2 = d_2.
VerificationReport check_theorem6_computation(const CartanData& cartan, int i, int j,
                                              int degree_bound, int samples, std::uint64_t seed,
                                              Theorem6Variant variant = Theorem6Variant::as_stated);

}  // namespace qgw
