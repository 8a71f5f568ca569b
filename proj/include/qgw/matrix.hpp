#pragma once

#include "qgw/laurent.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qgw {

/// Row-compressed sparse matrix over a commutative ring T.
///
/// Each row holds (column, value) pairs sorted by column with no zero values,
/// so operator== is entrywise equality.
template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<int, T>;
  using Triplet = std::tuple<int, int, T>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(checked(rows)), cols_(checked(cols)), data_(rows) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }

  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
    SparseMatrix m(rows, cols);
    for (auto& [r, c, v] : triplets) m.add_to(r, c, v);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& row(int r) const { return data_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  T at(int r, int c) const {
    check_index(r, c);
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return T();
  }

  void add_to(int r, int c, const T& value) {
    check_index(r, c);
    if (qgw::is_zero(value)) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += value;
      if (qgw::is_zero(it->second)) row.erase(it);
    } else {
      row.emplace(it, c, value);
    }
  }

  void set(int r, int c, T value) {
    check_index(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (qgw::is_zero(value)) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      row.emplace(it, c, std::move(value));
    }
  }

  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) out.emplace_back(r, c, v);
    return out;
  }

  /// Apply f to every stored entry (zeros stay zero).
  template <class F>
  auto map(F&& f) const -> SparseMatrix<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    SparseMatrix<U> m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) m.set(r, c, f(v));
    return m;
  }

  SparseMatrix scaled(const T& s) const {
    if (qgw::is_zero(s)) return SparseMatrix(rows_, cols_);
    return map([&](const T& v) { return v * s; });
  }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    check_same_shape(o);
    for (int r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], o.data_[r], false);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    check_same_shape(o);
    for (int r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], o.data_[r], true);
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  /// Matrix product a*b (b applied first when read as operators).
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " +
                                  b.shape());
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<T> acc(static_cast<std::size_t>(b.cols_));
    std::vector<char> used(static_cast<std::size_t>(b.cols_), 0);
    std::vector<int> touched;
    for (int r = 0; r < a.rows_; ++r) {
      touched.clear();
      for (const auto& [k, av] : a.data_[r]) {
        for (const auto& [c, bv] : b.data_[k]) {
          if (!used[c]) {
            used[c] = 1;
            touched.push_back(c);
            acc[c] = av * bv;
          } else {
            acc[c] += av * bv;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = out.data_[r];
      for (int c : touched) {
        if (!qgw::is_zero(acc[c])) row.emplace_back(c, std::move(acc[c]));
        acc[c] = T();
        used[c] = 0;
      }
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  /// One `row col value` line per nonzero entry.
  template <class Printer>
  std::string to_text(Printer&& print) const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) os << r << ' ' << c << ' ' << print(v) << '\n';
    return os.str();
  }

 private:
  static int checked(int dim) {
    if (dim < 0) throw std::invalid_argument("negative matrix dimension");
    return dim;
  }
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") outside " + shape());
  }
  void check_same_shape(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch: " + shape() + " vs " + o.shape());
  }
  static std::vector<Entry> merge_rows(const std::vector<Entry>& a, const std::vector<Entry>& b,
                                       bool subtract) {
    if (b.empty()) return a;
    std::vector<Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, subtract ? T(-b[j].second) : b[j].second);
        ++j;
      } else {
        T v = a[i].second;
        if (subtract) v -= b[j].second; else v += b[j].second;
        if (!qgw::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

/// Result of fraction-free Gauss-Jordan elimination on a square matrix A:
/// A * adjugate == determinant * I.
struct AdjugateResult {
  SparseMatrix<LaurentPoly> adjugate;
  LaurentPoly determinant;
};

/// Bareiss determinant over Z[q,q^-1]. Every intermediate division is exact;
/// an inexact one throws std::logic_error.
LaurentPoly determinant(const SparseMatrix<LaurentPoly>& a);

/// Fraction-free Gauss-Jordan. Returns nullopt when A is singular.
std::optional<AdjugateResult> adjugate(const SparseMatrix<LaurentPoly>& a);

/// A^{-1} over the fraction field, entry (i,j) = adj_ij / det.
std::optional<SparseMatrix<RationalFunction>> inverse(const SparseMatrix<LaurentPoly>& a);

inline SparseMatrix<RationalFunction> to_rational(const SparseMatrix<LaurentPoly>& a) {
  return a.map([](const LaurentPoly& p) { return RationalFunction(p); });
}

}  // namespace qgw
