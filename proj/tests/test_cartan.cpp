#include "qgw/cartan.hpp"

#include <gtest/gtest.h>

namespace qgw {
namespace {

TEST(Cartan, TypeAMatrix) {
  const auto a3 = CartanData::type_a(3);
  const std::vector<std::vector<int>> expected{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(a3.matrix(), expected);
  EXPECT_TRUE(a3.adjacent(1, 2));
  EXPECT_FALSE(a3.adjacent(1, 3));
  EXPECT_FALSE(a3.adjacent(2, 2));
}

TEST(Cartan, PresetsAndFiles) {
  const auto d4 = cartan_from_graph(preset_graph("D4"));
  EXPECT_EQ(d4.rank(), 4);
  int edges = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) edges += d4.adjacent(i, j);
  EXPECT_EQ(edges, 3);
  const auto g = parse_graph("vertices: 3\nedge: 1 2\nedge: 2 3\n");
  EXPECT_EQ(cartan_from_graph(g).matrix(), CartanData::type_a(3).matrix());
}

TEST(Cartan, RejectsBadGraphs) {
  EXPECT_THROW(cartan_from_graph(parse_graph("vertices: 2\nedge: 1 1\n")), std::invalid_argument);
  EXPECT_THROW(cartan_from_graph(parse_graph("vertices: 2\nedge: 1 2\nedge: 2 1\n")),
               std::invalid_argument);
  EXPECT_THROW(cartan_from_graph(parse_graph("vertices: 2\nedge: 1 3\n")), std::invalid_argument);
  EXPECT_THROW(preset_graph("E8"), std::invalid_argument);
}

TEST(Weight, ContentPairings) {
  const auto w = Weight::from_content({2, 0, 1});
  EXPECT_EQ(w.pairings(), (std::vector<int>{-2, 1}));
  const auto a2 = CartanData::type_a(2);
  const auto up = w.shifted(a2, 1, 1);
  EXPECT_EQ(*up.content(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(up.pairing(1), 0);
  EXPECT_EQ(parse_weight("(2,0,1)"), w);
  EXPECT_EQ(parse_weight("[-2,1]").pairings(), w.pairings());
}

TEST(Weight, ReflectionIsInvolution) {
  const auto a3 = CartanData::type_a(3);
  const auto w = Weight::from_content({3, 0, 1, 2});
  for (int i = 1; i <= 3; ++i) {
    const auto r = reflect(a3, w, i);
    EXPECT_EQ(r.pairing(i), -w.pairing(i));
    EXPECT_EQ(reflect(a3, r, i), w);
  }
  // s_i swaps lambda_i and lambda_{i+1}.
  EXPECT_EQ(*reflect(a3, w, 1).content(), (std::vector<int>{0, 3, 1, 2}));
}

TEST(Braid, FreeReduction) {
  const BraidWord w{{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}};
  EXPECT_EQ(free_reduce(w), (BraidWord{{3, 1}}));
  EXPECT_THROW(validate_braid_word(CartanData::type_a(2), w), std::invalid_argument);
}

}  // namespace
}  // namespace qgw
