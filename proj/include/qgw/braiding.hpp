#pragma once

#include "qgw/tensor_rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qgw {

/// q-powers attached to the alternating sums and to the root vectors.
///
/// The Rickard term in homological degree s is weighted by
/// (-1)^s q^{c1 s + c2 s^2}. The E root vector is e_j e_i + eps q^c e_i e_j and
/// the F root vector is f_i f_j + eps_f q^{c_f} f_j f_i (operator order, the
/// right factor acts first).
struct GradingConvention {
  int c1 = 0;
  int c2 = 0;
  int eps = -1;
  int c = 0;
  int eps_f = -1;
  int c_f = 0;

  int gamma(int s) const { return c1 * s + c2 * s * s; }
  std::string to_string() const;
  friend bool operator==(const GradingConvention&, const GradingConvention&) = default;
};

/// Which alternating sum to build: F^{(m+s)} E^{(s)} (needs m >= 0) or
/// E^{(-m+s)} F^{(s)} (needs m <= 0). In both, a term whose E exponent is t
/// carries (-1)^t q^{gamma(t)}.
enum class RickardBranch { automatic, fe, ef };

/// T_i on one weight space: lambda -> s_i(lambda).
OperatorMatrix rickard_block(const WeightModule& m, const GradingConvention& conv, int i,
                             const Weight& lambda, RickardBranch branch = RickardBranch::automatic);

template <class Scalar>
struct BraidOperatorT {
  int index = 0;
  /// One block per weight of the module, in module weight order.
  std::vector<BlockOperator<Scalar>> blocks;

  const BlockOperator<Scalar>& block(const Weight& source) const {
    for (const auto& b : blocks)
      if (b.source == source) return b;
    throw std::out_of_range("braid operator has no block at " + source.to_string());
  }
};

using BraidOperator = BraidOperatorT<LaurentPoly>;
using InverseBraidOperator = BraidOperatorT<RationalFunction>;

/// Every block of T_i; throws std::logic_error if a block lands off reflect(lambda, i).
BraidOperator braid_operator(const WeightModule& m, const GradingConvention& conv, int i);

class SingularBlockError : public std::runtime_error {
 public:
  SingularBlockError(const Weight& w, int index)
      : std::runtime_error("T_" + std::to_string(index) + " block at " + w.to_string() +
                           " is singular"),
        weight(w) {}
  Weight weight;
};

/// Blockwise inverse (s_i(lambda) -> lambda) via fraction-free elimination.
/// Verifies T * T^{-1} = id on every block; throws SingularBlockError.
InverseBraidOperator invert(const BraidOperator& t);

/// Inverse of an already inverted operator (over the fraction field).
InverseBraidOperator invert(const InverseBraidOperator& t);

BlockOperator<RationalFunction> to_rational(const OperatorMatrix& op);

/// Adjacent: T_i T_j T_i = T_j T_i T_j blockwise; otherwise T_i T_j = T_j T_i.
VerificationReport check_braid_relation(const WeightModule& m, const GradingConvention& conv,
                                        int i, int j);

/// Block targets are reflect(lambda, i), blocks are nonsingular, and at q = 1
/// every block determinant is ±1. Also checks that both branch formulas agree
/// where <lambda, alpha_i> = 0.
VerificationReport check_weyl_compatibility(const WeightModule& m, const GradingConvention& conv,
                                            int i);

/// e_j e_i + eps q^c e_i e_j on the lambda space.
OperatorMatrix root_vector(const WeightModule& m, const GradingConvention& conv, int i, int j,
                           const Weight& lambda);
/// f_i f_j + eps_f q^{c_f} f_j f_i on the lambda space.
OperatorMatrix f_root_vector(const WeightModule& m, const GradingConvention& conv, int i, int j,
                             const Weight& lambda);

/// r_ij T_i = T_i e_j and f-root T_i = T_i f_j blockwise, plus
/// r_ij^2 T_i = [2] T_i e_j^{(2)}.
VerificationReport conjugation_check(const WeightModule& m, const GradingConvention& conv, int i,
                                     int j);

/// With t_ij = T_i T_j T_i^{-1}: t_ij T_i = T_i T_j, T_j t_ij = T_i T_j, and t_ij
/// equals the alternating sum built from the root-vector divided powers.
VerificationReport check_tij_factorization(const WeightModule& m, const GradingConvention& conv,
                                           int i, int j);

struct ConventionCandidate {
  int c1 = 0;
  int c2 = 0;
  bool invertible = true;
  bool braid = true;
  bool q_one = true;
  /// (eps, c) values for which the E / F conjugation identities hold.
  std::vector<std::pair<int, int>> e_units;
  std::vector<std::pair<int, int>> f_units;
  std::string failure;

  bool passes() const {
    return invertible && braid && q_one && !e_units.empty() && !f_units.empty();
  }
};

struct DerivationOptions {
  /// (n, N) modules the candidates are tested on.
  std::vector<std::pair<int, int>> modules{{2, 2}, {3, 2}, {3, 3}};
  /// |c| bound for the root-vector unit search.
  int unit_bound = 2;
};

struct DerivationResult {
  std::vector<ConventionCandidate> candidates;
  /// Every passing tuple, one per (c1, c2, eps, c) with the first passing F unit.
  std::vector<GradingConvention> passing;
  GradingConvention chosen;
  /// The gamma = 0 operator at q = 1 satisfied all braid and Weyl checks.
  bool q_one_baseline = false;
};

class ConventionNotFound : public std::runtime_error {
 public:
  ConventionNotFound(std::string what, DerivationResult partial)
      : std::runtime_error(std::move(what)), result(std::move(partial)) {}
  DerivationResult result;
};

/// Brute force over |c1|, |c2| <= search_bound (ordered by |c1|+|c2|, then c1,
/// then c2). Throws ConventionNotFound if nothing passes.
DerivationResult derive_grading_convention(int search_bound, const DerivationOptions& options = {});

/// The q = 1 reference check alone: gamma = 0 operators on the q = 1 modules.
VerificationReport check_q_one_baseline(const DerivationOptions& options = {});

}  // namespace qgw
