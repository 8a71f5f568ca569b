#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgw {

/// Finite simple graph on vertices 1..vertex_count.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Parse the plain-text graph format (`vertices: n` then `edge: i j` lines) or
/// a preset name `A<n>` / `D<n>`. Throws std::invalid_argument.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph preset_graph(std::string_view name);

/// Simply-laced Cartan data built from a SimpleGraph. Immutable.
class CartanData {
 public:
  const SimpleGraph& graph() const { return graph_; }
  int rank() const { return graph_.vertex_count; }
  /// C_ij with 1-based indices.
  int entry(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && entry(i, j) == -1; }
  bool contains(int i) const { return i >= 1 && i <= rank(); }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  /// Path graph with n-1 vertices (the Dynkin diagram of sl_n).
  static CartanData type_a(int n_minus_one);

 private:
  friend CartanData cartan_from_graph(const SimpleGraph& graph);
  SimpleGraph graph_;
  std::vector<std::vector<int>> matrix_;
};

/// C_ij = 2 delta_ij - [i,j adjacent]. Rejects loops, duplicate edges and
/// out-of-range endpoints with std::invalid_argument.
CartanData cartan_from_graph(const SimpleGraph& graph);

/// A weight, stored by its pairings d_i = <lambda, alpha_i>.
///
/// For sl_n the composition (lambda_1..lambda_n) may be attached as `content`;
/// then d_i = lambda_{i+1} - lambda_i. Content entries may go negative to name
/// an empty weight space.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> pairings) : pairings_(std::move(pairings)) {}
  static Weight from_content(std::vector<int> content);

  const std::vector<int>& pairings() const { return pairings_; }
  const std::optional<std::vector<int>>& content() const { return content_; }
  bool has_content() const { return content_.has_value(); }
  /// True when content is present and has a negative entry.
  bool is_null() const;

  /// <lambda, alpha_i>, 1-based. Throws std::out_of_range.
  int pairing(int i) const;

  /// lambda + r alpha_i. With content: lambda_i -= r, lambda_{i+1} += r.
  Weight shifted(const CartanData& cartan, int i, int r) const;

  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  std::vector<int> pairings_;
  std::optional<std::vector<int>> content_;
};

int pairing(const Weight& weight, int i);

/// s_i(lambda) = lambda - <lambda,alpha_i> alpha_i.
Weight reflect(const CartanData& cartan, const Weight& weight, int i);

/// Parse `(l1,...,ln)` as an sl_n content or `[d1,...,dr]` as pairings.
Weight parse_weight(std::string_view text);

struct BraidLetter {
  int index = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Cancel adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& word);

/// Throws std::invalid_argument if some index is outside the graph.
void validate_braid_word(const CartanData& cartan, const BraidWord& word);

}  // namespace qgw
