#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "adjspec/rational.hpp"

namespace adjspec {

/// Homogeneous linear system over Q, stored by sparse rows.
class LinearSystem {
 public:
  using Term = std::pair<std::size_t, Rational>;

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  // Duplicate columns are summed; an all-zero row is dropped.
  void add_row(std::vector<Term> terms);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::vector<Term>>& rows() const { return rows_; }

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Term>> rows_;
};

struct NullspaceResult {
  std::size_t rank = 0;
  std::size_t dimension = 0;
  // Canonical basis read off the reduced row echelon form: one vector per
  // free column, in increasing column order, with a 1 at that column.
  std::vector<std::vector<Rational>> basis;
};

/// Fraction-free sparse elimination: rows are scaled to primitive integer
/// vectors and combined by cross-multiplication, then divided by their
/// content. With want_basis=false only the rank is computed.
NullspaceResult solve_nullspace(const LinearSystem& system, bool want_basis = true);

std::size_t rank(const LinearSystem& system);

// Rank of a set of dense rational vectors.
std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors);

/// Dense reduced row echelon form over any exact field (Rational,
/// GaussianRational). Returns the non-zero reduced rows.
template <typename T>
std::vector<std::vector<T>> dense_rref(std::vector<std::vector<T>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows.size(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && rows[pivot][c] == T(0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead_row]);
    const T inv = T(1) / rows[lead_row][c];
    for (auto& x : rows[lead_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][c] == T(0)) continue;
      const T factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[lead_row][k];
    }
    ++lead_row;
  }
  rows.resize(lead_row);
  return rows;
}

}  // namespace adjspec
