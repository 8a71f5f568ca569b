#include "qgw/qalg.hpp"
#include "qgw/tensor_rep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>

namespace qgw {
namespace {

int count_words(int n, int N, const std::vector<int>& content) {
  // Brute force over {1..n}^N.
  int total = 0;
  std::vector<int> w(N, 1);
  for (;;) {
    std::vector<int> c(n, 0);
    for (int x : w) ++c[x - 1];
    total += c == content;
    int p = N - 1;
    while (p >= 0 && w[p] == n) w[p--] = 1;
    if (p < 0) break;
    ++w[p];
  }
  return total;
}

TEST(TensorRep, DimensionsMatchBruteForce) {
  for (int n = 2; n <= 4; ++n)
    for (int N = 1; N <= 4; ++N) {
      const WeightModule m(n, N);
      std::uint64_t sum = 0;
      for (const auto& w : m.weights()) {
        EXPECT_EQ(m.dimension(w), count_words(n, N, *w.content()));
        sum += m.dimension(w);
      }
      EXPECT_EQ(sum, m.total_dimension());
      EXPECT_TRUE(verify_weight_dimensions(m).passed());
    }
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
}

// At q = 1, E_i^{(r)} sends a word to the sum of the words obtained by turning
// r of its letters i into i+1.
TEST(TensorRep, DividedPowersAtQOneMatchCombinatorics) {
  const WeightModule m(3, 4, Specialization::q_one);
  for (int i = 1; i <= 2; ++i)
    for (int r = 1; r <= 3; ++r)
      for (const auto& lambda : m.weights()) {
        const auto op = m.divided_power(GeneratorKind::E, i, r, lambda);
        if (op.target.is_null()) continue;
        SparseMatrix<LaurentPoly> expected(m.dimension(op.target), m.dimension(lambda));
        for (const auto& word : m.basis(lambda)) {
          std::vector<int> spots;
          for (int p = 0; p < static_cast<int>(word.size()); ++p)
            if (word[p] == i) spots.push_back(p);
          if (static_cast<int>(spots.size()) < r) continue;
          std::vector<bool> pick(spots.size(), false);
          std::fill(pick.begin(), pick.begin() + r, true);
          do {
            auto t = word;
            for (std::size_t k = 0; k < spots.size(); ++k)
              if (pick[k]) t[spots[k]] = i + 1;
            expected.add_to(m.index_of(op.target, t), m.index_of(lambda, word), 1);
          } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        EXPECT_EQ(op.matrix, expected) << "E" << i << "^(" << r << ") at " << lambda.to_string();
      }
}

TEST(TensorRep, GenericSpecializesToQOne) {
  const WeightModule gen(3, 3), one(3, 3, Specialization::q_one);
  for (const auto& lambda : gen.weights())
    for (auto kind : {GeneratorKind::E, GeneratorKind::F})
      for (int i = 1; i <= 2; ++i) {
        const auto g = gen.generator(kind, i, lambda);
        const auto o = one.generator(kind, i, lambda);
        EXPECT_EQ(g.matrix.map([](const LaurentPoly& p) { return LaurentPoly(evaluate_at_one(p)); }),
                  o.matrix);
        for (const auto& [r, c, v] : g.matrix.triplets()) EXPECT_TRUE(v.is_unit());
      }
}

TEST(TensorRep, WordsActRightToLeft) {
  const WeightModule m(3, 2);
  const Weight source = Weight::from_content({1, 1, 0});
  const std::vector<GeneratorLetter> e2e1{{GeneratorKind::E, 2, 1}, {GeneratorKind::E, 1, 1}};
  // E1 first: (1,1,0) -> (0,2,0), then E2: -> (0,1,1).
  EXPECT_EQ(*m.word_target(e2e1, source).content(), (std::vector<int>{0, 1, 1}));
  const auto prod = m.evaluate_word(e2e1, source);
  const auto step = m.generator(GeneratorKind::E, 1, source);
  EXPECT_EQ(prod, compose(m.generator(GeneratorKind::E, 2, step.target), step));
}

TEST(TensorRep, Sl2Relations) {
  const WeightModule m(2, 5);
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int r2 = 1; r1 + r2 <= 4; ++r2) EXPECT_TRUE(verify_divided_power_rule(m, 1, r1, r2).passed());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) EXPECT_TRUE(verify_ef_straightening_all(m, 1, a, b).passed());
}

TEST(TensorRep, SerreAndMixed) {
  const WeightModule m(4, 3);
  EXPECT_TRUE(verify_serre(m, 1, 2).passed());
  EXPECT_TRUE(verify_serre(m, 1, 3).passed());
  EXPECT_TRUE(verify_mixed_decompositions(m, 2, 3, 2, 1).passed());
  EXPECT_TRUE(verify_distant_and_ef_commutations(m, 3, 1).passed());
  EXPECT_THROW(verify_serre(m, 2, 2), std::invalid_argument);
  EXPECT_THROW(verify_mixed_decompositions(m, 1, 3, 1, 1), std::invalid_argument);
}

TEST(TensorRep, Limits) {
  EXPECT_THROW(build_module(7, 2), std::invalid_argument);
  EXPECT_THROW(build_module(3, 9), std::invalid_argument);
  EXPECT_NO_THROW(build_module(3, 9, Specialization::q_one, {6, 9}));
  EXPECT_THROW(WeightModule(3, 2).dimension(Weight::from_content({1, 1})), std::invalid_argument);
}

TEST(TensorRep, DiskCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "qgw_test_matrix_cache";
  std::filesystem::remove_all(dir);
  auto cache = std::make_shared<const MatrixCache>(dir);
  const Weight lambda = Weight::from_content({2, 1, 0});
  OperatorMatrix cold;
  {
    WeightModule m(3, 3);
    m.attach_cache(cache);
    cold = m.divided_power(GeneratorKind::E, 1, 2, lambda);
    EXPECT_EQ(m.cache_counters().loaded, 0u);
  }
  EXPECT_GT(cache->stats().files, 0u);
  WeightModule warm(3, 3);
  warm.attach_cache(cache);
  EXPECT_EQ(warm.divided_power(GeneratorKind::E, 1, 2, lambda), cold);
  EXPECT_GT(warm.cache_counters().loaded, 0u);
  EXPECT_GT(cache->clear(), 0u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qgw
