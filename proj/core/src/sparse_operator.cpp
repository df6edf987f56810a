#include "adjspec/sparse_operator.hpp"

#include <algorithm>

#include "adjspec/errors.hpp"

namespace adjspec {

namespace {

void require_same_dim(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch,
                "operators of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

template <typename Combine>
SparseOperator::Row merge_rows(std::span<const SparseOperator::Entry> x, std::span<const SparseOperator::Entry> y,
                               Combine combine) {
  SparseOperator::Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, combine(x[i].value, GaussianRational{})});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, combine(GaussianRational{}, y[j].value)});
      ++j;
    } else {
      GaussianRational v = combine(x[i].value, y[j].value);
      if (!v.is_zero()) out.push_back({x[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Dense accumulator reused across rows of a product.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t dim) : values_(dim), used_(dim, false) {}

  void add_scaled(const GaussianRational& scale, std::span<const SparseOperator::Entry> row) {
    for (const auto& e : row) {
      if (!used_[e.col]) {
        used_[e.col] = true;
        touched_.push_back(e.col);
        values_[e.col] = scale * e.value;
      } else {
        values_[e.col] += scale * e.value;
      }
    }
  }

  SparseOperator::Row take() {
    std::sort(touched_.begin(), touched_.end());
    SparseOperator::Row out;
    out.reserve(touched_.size());
    for (std::size_t c : touched_) {
      if (!values_[c].is_zero()) out.push_back({c, std::move(values_[c])});
      values_[c] = GaussianRational{};
      used_[c] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<GaussianRational> values_;
  std::vector<bool> used_;
  std::vector<std::size_t> touched_;
};

}  // namespace

SparseOperator SparseOperator::identity(std::size_t dim) {
  SparseOperator op(dim);
  for (std::size_t i = 0; i < dim; ++i) op.rows_[i].push_back({i, GaussianRational(1)});
  op.symmetry_ = Symmetry::Hermitian;
  return op;
}

SparseOperator SparseOperator::diagonal(std::span<const GaussianRational> values) {
  SparseOperator op(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) op.rows_[i].push_back({i, values[i]});
  }
  return op;
}

SparseOperator SparseOperator::diagonal(std::span<const Rational> values) {
  SparseOperator op(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) != 0) op.rows_[i].push_back({i, GaussianRational(values[i])});
  }
  op.symmetry_ = Symmetry::Hermitian;
  return op;
}

std::size_t SparseOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

GaussianRational SparseOperator::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

void SparseOperator::add(std::size_t r, std::size_t c, const GaussianRational& value) {
  if (value.is_zero()) return;
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value.is_zero()) row.erase(it);
  } else {
    row.insert(it, Entry{c, value});
  }
  symmetry_ = Symmetry::None;
}

void SparseOperator::set_row(std::size_t r, Row entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  Row clean;
  clean.reserve(entries.size());
  for (auto& e : entries) {
    if (!clean.empty() && clean.back().col == e.col) {
      clean.back().value += e.value;
      if (clean.back().value.is_zero()) clean.pop_back();
    } else if (!e.value.is_zero()) {
      clean.push_back(std::move(e));
    }
  }
  rows_.at(r) = std::move(clean);
  symmetry_ = Symmetry::None;
}

bool SparseOperator::is_hermitian() const {
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& e : rows_[r]) {
      if (!(at(e.col, r) == e.value.conj())) return false;
    }
  }
  return true;
}

bool SparseOperator::is_real() const {
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (!e.value.is_real()) return false;
    }
  }
  return true;
}

bool SparseOperator::is_imaginary() const {
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (!e.value.is_imaginary()) return false;
    }
  }
  return true;
}

bool SparseOperator::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& e : rows_[r]) out.rows_[e.col].push_back({r, e.value.conj()});
  }
  // Rows were filled in increasing r, so each is already column-sorted.
  if (symmetry_ == Symmetry::Hermitian) out.symmetry_ = Symmetry::Hermitian;
  return out;
}

SparseOperator& SparseOperator::operator*=(const GaussianRational& scalar) {
  if (scalar.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_) {
    for (auto& e : r) e.value *= scalar;
  }
  if (!scalar.is_real()) symmetry_ = Symmetry::None;
  return *this;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b);
  SparseOperator out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    out.rows_[r] = merge_rows(a.row(r), b.row(r),
                              [](const GaussianRational& x, const GaussianRational& y) { return x + y; });
  }
  return out;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b);
  SparseOperator out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    out.rows_[r] = merge_rows(a.row(r), b.row(r),
                              [](const GaussianRational& x, const GaussianRational& y) { return x - y; });
  }
  return out;
}

SparseOperator SparseOperator::multiply_rows(const SparseOperator& a, const SparseOperator& b,
                                             const std::vector<bool>& rows) {
  require_same_dim(a, b);
  SparseOperator out(a.dim());
  RowAccumulator acc(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!rows.empty() && !rows[r]) continue;
    for (const auto& e : a.rows_[r]) acc.add_scaled(e.value, b.rows_[e.col]);
    out.rows_[r] = acc.take();
  }
  return out;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator::multiply_rows(a, b, {});
}

SparseOperator operator*(GaussianRational scalar, const SparseOperator& a) {
  SparseOperator out = a;
  out *= scalar;
  return out;
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) return false;
  // Stored zeros do not count.
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto x = a.row(r);
    const auto y = b.row(r);
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (i < x.size() && x[i].value.is_zero()) {
        ++i;
      } else if (j < y.size() && y[j].value.is_zero()) {
        ++j;
      } else if (i == x.size() || j == y.size() || x[i].col != y[j].col || !(x[i].value == y[j].value)) {
        return false;
      } else {
        ++i;
        ++j;
      }
    }
  }
  return true;
}

std::vector<GaussianRational> SparseOperator::apply(std::span<const GaussianRational> f) const {
  if (f.size() != dim()) {
    throw Error(Errc::DimensionMismatch,
                "vector of length " + std::to_string(f.size()) + " for operator of dimension " + std::to_string(dim()));
  }
  std::vector<GaussianRational> out(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& e : rows_[r]) {
      if (!f[e.col].is_zero()) out[r] += e.value * f[e.col];
    }
  }
  return out;
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  const std::size_t nb = b.dim();
  SparseOperator out(a.dim() * nb);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < nb; ++k) {
      SparseOperator::Row row;
      for (const auto& ea : a.row(i)) {
        for (const auto& eb : b.row(k)) row.push_back({ea.col * nb + eb.col, ea.value * eb.value});
      }
      out.set_row(i * nb + k, std::move(row));
    }
  }
  return out;
}

}  // namespace adjspec
