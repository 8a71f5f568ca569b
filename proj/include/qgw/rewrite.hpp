#pragma once

#include "qgw/cartan.hpp"
#include "qgw/laurent.hpp"
#include "qgw/report.hpp"
#include "qgw/tensor_rep.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgw {

/// A word in divided powers, written in operator order: the rightmost letter
/// acts first on the source weight. The empty word is the identity.
struct FormalWord {
  std::vector<GeneratorLetter> letters;

  bool empty() const { return letters.empty(); }
  std::string to_string() const;
  friend auto operator<=>(const FormalWord&, const FormalWord&) = default;
};

/// flow[k] is the weight after the rightmost k letters have acted, so flow[0]
/// is `source` and flow.back() the target. The letter written at position p
/// acts on flow[size - 1 - p].
std::vector<Weight> weight_flow(const CartanData& cartan, const FormalWord& word,
                                const Weight& source);

/// True if some intermediate weight has a negative content entry.
bool is_null_word(const CartanData& cartan, const FormalWord& word, const Weight& source);

/// Z[q,q^-1]-combination of words sharing a source weight and a target weight.
/// Null words are kept; they evaluate to zero.
class FormalSum {
 public:
  FormalSum(std::shared_ptr<const CartanData> cartan, Weight source);

  const CartanData& cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanData>& cartan_ptr() const { return cartan_; }
  const Weight& source() const { return source_; }
  /// Target weight of the words, nullopt while the sum is empty.
  const std::optional<Weight>& target() const { return target_; }
  const std::map<FormalWord, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * word. Throws std::invalid_argument if the word's target differs
  /// from the other words' or an index is outside the graph.
  void add(const FormalWord& word, const LaurentPoly& c);
  /// Copy without the null words.
  FormalSum prune_null() const;
  /// A sum with the same anchor and no terms.
  FormalSum empty_like() const { return FormalSum(cartan_, source_); }

  /// `(<laurent>) * word` terms joined by " + "; `0` when empty.
  std::string to_string() const;

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.source_ == b.source_ && a.terms_ == b.terms_;
  }

 private:
  std::shared_ptr<const CartanData> cartan_;
  Weight source_;
  std::optional<Weight> target_;
  std::map<FormalWord, LaurentPoly> terms_;
};

class RewriteParseError : public std::invalid_argument {
 public:
  RewriteParseError(std::size_t token, const std::string& message)
      : std::invalid_argument("token " + std::to_string(token) + ": " + message), token(token) {}
  /// 1-based token index.
  std::size_t token;
};

/// Syntax only: the (coefficient, word) terms in input order, without weight
/// checks or merging of repeated words.
std::vector<std::pair<LaurentPoly, FormalWord>> parse_terms(std::string_view text,
                                                            const CartanData& cartan);

/// Grammar: terms joined by `+`; a term is `[coef *] word`, coef being a
/// parenthesized Laurent polynomial or a monomial such as `q^2`, `-3`,
/// `2*q^-1`; a word is letters `E1`, `F2^(3)` or the literal `id`.
FormalSum parse_sum(std::string_view text, std::shared_ptr<const CartanData> cartan,
                    const Weight& source);

enum class Rule { merge, commute, straighten, serre };

std::string to_string(Rule r);

/// E_i^{(r1)} E_i^{(r2)} -> [r1+r2 choose r1] E_i^{(r1+r2)} (and for F), to fixpoint.
FormalSum rule_merge_divided(const FormalSum& sum);
/// Adjacent commuting letters are sorted: E_i F_j -> F_j E_i for i != j, and
/// same-kind letters at non-adjacent indices go to ascending index order. To fixpoint.
FormalSum rule_commute_distant(const FormalSum& sum);
/// Leftmost same-index E^{(b)} F^{(a)} of every word goes to the F-left form.
FormalSum rule_straighten_ef(const FormalSum& sum);
/// Leftmost E_i^{(a)} E_j E_i^{(b)} (i, j adjacent) of every word is split;
/// the same for F.
FormalSum rule_serre(const FormalSum& sum);

/// Lexicographic termination measure of a word.
struct WordMeasure {
  /// Sum of pow(E) * pow(F) over letter pairs with the E written left of the F.
  std::int64_t inversions = 0;
  std::int64_t letters = 0;
  /// Commuting same-kind pairs written in descending index order.
  std::int64_t disorder = 0;
  friend auto operator<=>(const WordMeasure&, const WordMeasure&) = default;
};

WordMeasure measure(const CartanData& cartan, const FormalWord& word);

/// Longest strictly decreasing chain of measures starting below `m`, plus one.
std::int64_t measure_chain_bound(const WordMeasure& m);

struct NormalFormOptions {
  /// Rules tried in this order; rules left out are never applied.
  std::vector<Rule> priority{Rule::merge, Rule::commute, Rule::straighten, Rule::serre};
  /// Extra passes allowed beyond the measure bound; 0 keeps the bound itself.
  std::int64_t slack = 0;
};

struct NormalFormStats {
  std::int64_t passes = 0;
  std::int64_t applications = 0;
  std::int64_t bound = 0;
};

class RewriteCapExceeded : public std::runtime_error {
 public:
  RewriteCapExceeded(const std::string& what, std::string stuck)
      : std::runtime_error(what), stuck_term(std::move(stuck)) {}
  std::string stuck_term;
};

/// Rewrites every word with its highest-priority applicable rule until nothing
/// applies. Throws std::logic_error if a step fails to lower the measure and
/// RewriteCapExceeded past the measure-derived pass bound.
FormalSum normal_form(const FormalSum& sum, const NormalFormOptions& options = {},
                      NormalFormStats* stats = nullptr);

/// Content for `w` inside V^{⊗N} of sl_n, or nullopt if no composition fits.
std::optional<Weight> realize_weight(const Weight& w, int n, int N);

/// Matrix of the sum on the module; throws std::invalid_argument if the
/// source is not a weight of the module.
OperatorMatrix evaluate_sum(const FormalSum& sum, const WeightModule& m);

VerificationReport oracle_equal(const FormalSum& a, const FormalSum& b, const WeightModule& m);
/// Builds the generic (n, N) module and compares there.
VerificationReport oracle_equal(const FormalSum& a, const FormalSum& b, int n, int N);

/// Uniform random word of the given length over E/F, indices of the graph and
/// powers 1..max_power.
FormalWord random_word(std::mt19937_64& rng, const CartanData& cartan, int length, int max_power);

struct RewriteSweep {
  int n_min = 2;
  int n_max = 4;
  int N_min = 1;
  int N_max = 5;
  int samples = 1000;
  int max_length = 6;
  int max_power = 2;
  std::uint64_t seed = 1;
  NormalFormOptions options;
  /// Optional on-disk matrix cache for the oracle modules.
  std::shared_ptr<const MatrixCache> cache;
};

/// Seeded random words at random weights of random (n, N) modules in range:
/// normal_form stays within its measure bound and is oracle-equal to the input.
VerificationReport check_rewrite_soundness(const RewriteSweep& sweep);

/// For each sample, normal forms under a shuffled rule order are oracle-equal
/// to the normal form under `sweep.options`.
VerificationReport check_rewrite_confluence(const RewriteSweep& sweep);

/// Termination alone on an arbitrary graph, anchored at the zero weight.
VerificationReport check_rewrite_termination(std::shared_ptr<const CartanData> cartan,
                                             const RewriteSweep& sweep);

}  // namespace qgw
