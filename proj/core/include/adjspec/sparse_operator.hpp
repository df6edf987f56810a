#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adjspec/rational.hpp"

namespace adjspec {

enum class Symmetry { Hermitian, AntiHermitian, None };

/// Square sparse matrix over Q[i]. Rows are stored as column-sorted entry
/// lists without explicit zeros, so two operators are equal iff their row
/// lists are equal.
class SparseOperator {
 public:
  struct Entry {
    std::size_t col;
    GaussianRational value;
  };
  using Row = std::vector<Entry>;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim) : rows_(dim) {}

  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(std::span<const GaussianRational> values);
  static SparseOperator diagonal(std::span<const Rational> values);

  std::size_t dim() const { return rows_.size(); }
  std::size_t nnz() const;

  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }
  // Zero when absent.
  GaussianRational at(std::size_t r, std::size_t c) const;

  // Adds value to entry (r, c); the entry disappears when it cancels.
  void add(std::size_t r, std::size_t c, const GaussianRational& value);
  // Replaces a whole row; entries are sorted and zeros dropped.
  void set_row(std::size_t r, Row entries);

  Symmetry symmetry() const { return symmetry_; }
  void set_symmetry(Symmetry s) { symmetry_ = s; }

  bool is_hermitian() const;
  bool is_real() const;
  bool is_imaginary() const;
  bool is_zero() const;

  SparseOperator adjoint() const;
  SparseOperator& operator*=(const GaussianRational& scalar);

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(GaussianRational scalar, const SparseOperator& a);
  friend bool operator==(const SparseOperator& a, const SparseOperator& b);

  // Product restricted to selected rows of the result; other rows are left
  // empty. Used when only interior rows of a long product are inspected.
  static SparseOperator multiply_rows(const SparseOperator& a, const SparseOperator& b,
                                      const std::vector<bool>& rows);

  std::vector<GaussianRational> apply(std::span<const GaussianRational> f) const;

 private:
  std::vector<Row> rows_;
  Symmetry symmetry_ = Symmetry::None;
};

// Kronecker product; index (i, j) of the result is i * b.dim() + j.
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);

}  // namespace adjspec
