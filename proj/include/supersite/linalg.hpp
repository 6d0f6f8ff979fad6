// Exact dense linear algebra over a coefficient Field, plus a small
// keyed-column system used for bounded-degree section computations.

#pragma once

#include "supersite/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace supersite {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row major

// In-place reduced row echelon form; returns the pivot column of each pivot row.
inline std::vector<int> rref(Mat& m, const Field& f) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  (void)f;
  return pivots;
}

// Nullspace basis of the column space interpretation: solutions x of M x = 0.
inline std::vector<Vec> kernel_basis(Mat m, const Field& f, std::size_t cols) {
  std::vector<int> pivots = rref(m, f);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, Scalar::zero(f));
    v[free_c] = Scalar::one(f);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      std::size_t pc = static_cast<std::size_t>(pivots[pr]);
      if (pc < m[pr].size() && free_c < m[pr].size()) v[pc] = -m[pr][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// A linear map into a space indexed by Key, given column by column.
// Supports exact kernel computation, solving, and span membership.
template <typename Key>
class KeyedSystem {
public:
  explicit KeyedSystem(Field f) : field_(f) {}

  void add_column(const std::map<Key, Scalar>& col) { columns_.push_back(col); }
  std::size_t num_columns() const { return columns_.size(); }
  const Field& field() const { return field_; }

  // Basis of { x : sum_j x_j * col_j = 0 }.
  std::vector<Vec> kernel() const {
    auto keys = key_index();
    Mat m = to_matrix(keys);
    return kernel_basis(std::move(m), field_, columns_.size());
  }

  // One solution of sum_j x_j * col_j = target, if any.
  std::optional<Vec> solve(const std::map<Key, Scalar>& target) const {
    std::map<Key, int> keys = key_index();
    for (const auto& [k, v] : target)
      if (!v.is_zero() && !keys.count(k)) return std::nullopt;
    Mat m = to_matrix(keys);
    std::size_t cols = columns_.size();
    for (auto& row : m) row.push_back(Scalar::zero(field_));
    for (const auto& [k, v] : target) m[static_cast<std::size_t>(keys.at(k))][cols] = v;
    std::vector<int> pivots = rref(m, field_);
    // inconsistent iff some pivot lands in the augmented column
    for (int c : pivots)
      if (static_cast<std::size_t>(c) == cols) return std::nullopt;
    Vec x(cols, Scalar::zero(field_));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      x[static_cast<std::size_t>(pivots[pr])] = m[pr][cols];
    return x;
  }

  bool contains(const std::map<Key, Scalar>& target) const { return solve(target).has_value(); }

private:
  std::map<Key, int> key_index() const {
    std::map<Key, int> keys;
    for (const auto& col : columns_)
      for (const auto& [k, v] : col)
        if (!v.is_zero()) keys.emplace(k, 0);
    int i = 0;
    for (auto& [k, idx] : keys) idx = i++;
    return keys;
  }

  Mat to_matrix(const std::map<Key, int>& keys) const {
    Mat m(keys.size(), Vec(columns_.size(), Scalar::zero(field_)));
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& [k, v] : columns_[j]) m[static_cast<std::size_t>(keys.at(k))][j] = v;
    return m;
  }

  Field field_;
  std::vector<std::map<Key, Scalar>> columns_;
};

}  // namespace supersite
