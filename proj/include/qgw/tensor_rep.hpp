#pragma once

#include "qgw/cartan.hpp"
#include "qgw/laurent.hpp"
#include "qgw/matrix.hpp"
#include "qgw/report.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace qgw {

enum class GeneratorKind { E, F, K, Kinv };

std::string to_string(GeneratorKind kind);

/// Whether q stays an indeterminate or is specialized to 1.
enum class Specialization { generic, q_one };

/// A linear map between two weight spaces.
template <class Scalar>
struct BlockOperator {
  Weight source;
  Weight target;
  SparseMatrix<Scalar> matrix;

  friend bool operator==(const BlockOperator&, const BlockOperator&) = default;
};

using OperatorMatrix = BlockOperator<LaurentPoly>;

/// outer ∘ inner; throws std::invalid_argument unless inner.target == outer.source.
template <class Scalar>
BlockOperator<Scalar> compose(const BlockOperator<Scalar>& outer,
                              const BlockOperator<Scalar>& inner) {
  if (!(inner.target == outer.source))
    throw std::invalid_argument("composition weight mismatch: " + inner.target.to_string() +
                                " vs " + outer.source.to_string());
  return {inner.source, outer.target, outer.matrix * inner.matrix};
}

template <class Scalar>
BlockOperator<Scalar> operator*(const BlockOperator<Scalar>& outer,
                                const BlockOperator<Scalar>& inner) {
  return compose(outer, inner);
}

template <class Scalar>
BlockOperator<Scalar>& operator+=(BlockOperator<Scalar>& a, const BlockOperator<Scalar>& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw std::invalid_argument("sum of operators between different weight spaces");
  a.matrix += b.matrix;
  return a;
}

template <class Scalar>
BlockOperator<Scalar> operator+(BlockOperator<Scalar> a, const BlockOperator<Scalar>& b) {
  return a += b;
}

template <class Scalar>
BlockOperator<Scalar> operator-(BlockOperator<Scalar> a, const BlockOperator<Scalar>& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw std::invalid_argument("difference of operators between different weight spaces");
  a.matrix -= b.matrix;
  return a;
}

template <class Scalar>
BlockOperator<Scalar> scaled(BlockOperator<Scalar> a, const Scalar& s) {
  a.matrix = a.matrix.scaled(s);
  return a;
}

/// One letter E_i^{(r)} or F_i^{(r)} of an operator word.
struct GeneratorLetter {
  GeneratorKind kind = GeneratorKind::E;
  int index = 1;
  int power = 1;
  friend auto operator<=>(const GeneratorLetter&, const GeneratorLetter&) = default;
};

/// Size limits for build_module.
struct ModuleLimits {
  int max_n = 6;
  int max_N = 8;
};

/// On-disk store for divided-power matrices, one file per request.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path file_for(Specialization spec, int n, int N, GeneratorKind kind, int i,
                                 int r, const Weight& lambda) const;
  /// nullopt if absent; throws std::runtime_error if the header disagrees.
  std::optional<OperatorMatrix> load(Specialization spec, int n, int N, GeneratorKind kind,
                                     int i, int r, const Weight& lambda,
                                     const Weight& target) const;
  void store(Specialization spec, int n, int N, GeneratorKind kind, int i, int r,
             const OperatorMatrix& m) const;

  struct Stats {
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
  };
  Stats stats() const;
  std::size_t clear() const;

  /// Header line `n N kind i r lambda rows cols`.
  static std::string header(int n, int N, GeneratorKind kind, int i, int r, const Weight& lambda,
                            int rows, int cols);

 private:
  std::filesystem::path dir_;
};

/// The module V^{⊗N} for U_q(sl_n), split into weight spaces.
///
/// Weight spaces are indexed by compositions of N into n parts; the basis of a
/// weight space is its words in {1..n}^N in lexicographic order. Immutable
/// apart from the write-once divided-power cache.
class WeightModule {
 public:
  WeightModule(int n, int N, Specialization spec = Specialization::generic,
               ModuleLimits limits = {});

  int n() const { return n_; }
  int N() const { return N_; }
  Specialization specialization() const { return spec_; }
  const CartanData& cartan() const { return cartan_; }

  /// All weights, contents in lexicographically descending order.
  const std::vector<Weight>& weights() const { return weights_; }
  /// True for compositions of N into n nonnegative parts.
  bool has_weight(const Weight& lambda) const;
  /// Dimension of the weight space; 0 for null weights. Throws for weights
  /// of the wrong shape.
  int dimension(const Weight& lambda) const;
  std::uint64_t total_dimension() const;

  /// Basis words of a weight space, letters 1..n.
  std::vector<std::vector<int>> basis(const Weight& lambda) const;
  int index_of(const Weight& lambda, const std::vector<int>& word) const;

  /// p itself, or p(1) as a constant when q is specialized.
  LaurentPoly scalar(const LaurentPoly& p) const;

  OperatorMatrix generator(GeneratorKind kind, int i, const Weight& lambda) const;
  OperatorMatrix divided_power(GeneratorKind kind, int i, int r, const Weight& lambda) const;
  OperatorMatrix identity(const Weight& lambda) const;
  OperatorMatrix zero(const Weight& source, const Weight& target) const;

  /// Product of letters in operator order: the rightmost letter acts first.
  OperatorMatrix evaluate_word(std::span<const GeneratorLetter> word, const Weight& source) const;
  /// Weight reached from `source` after applying the word.
  Weight word_target(std::span<const GeneratorLetter> word, const Weight& source) const;

  void attach_cache(std::shared_ptr<const MatrixCache> cache) { disk_ = std::move(cache); }

  struct CacheCounters {
    std::size_t computed = 0;
    std::size_t loaded = 0;
  };
  CacheCounters cache_counters() const;

 private:
  struct Space {
    std::vector<std::uint64_t> words;  // encoded, ascending
  };
  std::uint64_t encode(const std::vector<int>& word) const;
  std::vector<int> decode(std::uint64_t code) const;
  const Space* space(const Weight& lambda) const;
  void check_shape(const Weight& lambda) const;
  void check_index(int i) const;
  OperatorMatrix compute_divided_power(GeneratorKind kind, int i, int r,
                                       const Weight& lambda) const;

  int n_;
  int N_;
  Specialization spec_;
  CartanData cartan_;
  std::vector<Weight> weights_;
  std::map<std::vector<int>, Space> spaces_;

  using Key = std::tuple<GeneratorKind, int, int, std::vector<int>>;
  mutable std::mutex mutex_;
  mutable std::map<Key, std::shared_ptr<const OperatorMatrix>> cache_;
  mutable CacheCounters counters_;
  std::shared_ptr<const MatrixCache> disk_;
};

/// Build V^{⊗N} for U_q(sl_n); throws std::invalid_argument past the limits.
WeightModule build_module(int n, int N, Specialization spec = Specialization::generic,
                          ModuleLimits limits = {});

/// Multinomial N! / (lambda_1! ... lambda_n!).
Integer multinomial(const std::vector<int>& content);

/// Records an exact comparison in `report`; on mismatch attaches both sides.
bool expect_equal(VerificationReport& report, const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                  const std::string& what);

// Verifiers. Each sweeps every weight space of the module.

/// Every weight space has dimension multinomial(content), and the spaces add
/// up to n^N.
VerificationReport verify_weight_dimensions(const WeightModule& m);

/// e^{(r1)} e^{(r2)} = [r1+r2 choose r1] e^{(r1+r2)}, and the same for f.
VerificationReport verify_divided_power_rule(const WeightModule& m, int i, int r1, int r2);

/// e^{(b)} f^{(a)} = sum_j [m-a+b choose j] f^{(a-j)} e^{(b-j)} on the lambda space
/// (m = <lambda,alpha_i>), or the mirrored identity
/// f^{(a)} e^{(b)} = sum_j [a-b-m choose j] e^{(b-j)} f^{(a-j)} when m-a+b < 0.
/// For a = b = 1 also checks ef - fe = [m] id.
VerificationReport verify_ef_straightening(const WeightModule& m, int i, int a, int b,
                                           const Weight& lambda);
/// verify_ef_straightening at every weight.
VerificationReport verify_ef_straightening_all(const WeightModule& m, int i, int a, int b);

/// Adjacent i,j: e_i e_j e_i = e_i^{(2)} e_j + e_j e_i^{(2)} (and for f).
/// Non-adjacent: e_i e_j = e_j e_i (and for f). Throws if i == j.
VerificationReport verify_serre(const WeightModule& m, int i, int j);

/// e_i^{(a)} e_j e_i^{(b)} = [a+b-1 choose b] e_i^{(a+b)} e_j + [a+b-1 choose a] e_j e_i^{(a+b)}
/// (and for f). Requires i,j adjacent.
VerificationReport verify_mixed_decompositions(const WeightModule& m, int i, int j, int a, int b);

/// f_j e_i = e_i f_j (with divided powers up to 2); for non-adjacent i,j also
/// e_i e_j = e_j e_i and f_i f_j = f_j f_i. Throws if i == j.
VerificationReport verify_distant_and_ef_commutations(const WeightModule& m, int i, int j);

}  // namespace qgw
