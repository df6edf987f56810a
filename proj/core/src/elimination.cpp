#include "adjspec/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "adjspec/errors.hpp"

namespace adjspec {

namespace {

using IntTerm = std::pair<std::size_t, Integer>;
using IntRow = std::vector<IntTerm>;

// Divide by the content and make the leading coefficient positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = sgn(row.front().second) < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& term : row) mpz_divexact(term.second.get_mpz_t(), term.second.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const std::vector<LinearSystem::Term>& terms) {
  Integer lcm = 1;
  for (const auto& [col, v] : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow row;
  row.reserve(terms.size());
  for (const auto& [col, v] : terms) {
    Integer scaled = lcm / v.get_den();
    scaled *= v.get_num();
    row.emplace_back(col, std::move(scaled));
  }
  make_primitive(row);
  return row;
}

Integer coefficient_at(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const IntTerm& t, std::size_t c) { return t.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return 0;
}

// target := a * target - b * pivot, where a/b is the reduced ratio of the
// pivot and target coefficients at column col; the entry at col cancels.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t col) {
  const Integer p = coefficient_at(pivot, col);
  const Integer t = coefficient_at(target, col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), t.get_mpz_t());
  const Integer a = p / g;
  const Integer b = t / g;

  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, a * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      v = a * target[i].second;
      v -= b * pivot[j].second;
      if (sgn(v) != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

struct Echelon {
  std::vector<IntRow> rows;                 // leading column of rows[k] is its pivot
  std::vector<std::ptrdiff_t> pivot_of_col;  // -1 for free columns
};

Echelon echelonize(const LinearSystem& system) {
  std::vector<IntRow> pending;
  pending.reserve(system.row_count());
  for (const auto& terms : system.rows()) pending.push_back(to_integer_row(terms));
  // Short rows first: singletons fix unknowns outright and keep fill-in low.
  std::stable_sort(pending.begin(), pending.end(),
                   [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  Echelon e;
  e.pivot_of_col.assign(system.unknowns(), -1);
  for (IntRow& row : pending) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const std::ptrdiff_t p = e.pivot_of_col[lead];
      if (p < 0) {
        e.pivot_of_col[lead] = static_cast<std::ptrdiff_t>(e.rows.size());
        e.rows.push_back(std::move(row));
        break;
      }
      eliminate(row, e.rows[static_cast<std::size_t>(p)], lead);
    }
  }
  return e;
}

}  // namespace

void LinearSystem::add_row(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> clean;
  clean.reserve(terms.size());
  for (auto& t : terms) {
    t.second.canonicalize();
    if (t.first >= unknowns_) {
      throw Error(Errc::DimensionMismatch, "column " + std::to_string(t.first) + " outside system of " +
                                               std::to_string(unknowns_) + " unknowns");
    }
    if (!clean.empty() && clean.back().first == t.first) {
      clean.back().second += t.second;
    } else {
      clean.push_back(std::move(t));
    }
  }
  std::erase_if(clean, [](const Term& t) { return sgn(t.second) == 0; });
  if (!clean.empty()) rows_.push_back(std::move(clean));
}

NullspaceResult solve_nullspace(const LinearSystem& system, bool want_basis) {
  Echelon e = echelonize(system);
  NullspaceResult result;
  result.rank = e.rows.size();
  result.dimension = system.unknowns() - result.rank;
  if (!want_basis || result.dimension == 0) return result;

  // Back substitution to reduced form, highest pivot first: every row with a
  // larger pivot is already reduced and carries only free columns besides
  // its own pivot, so eliminating creates no new pivot-column entries.
  std::vector<std::size_t> order(e.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return e.rows[a].front().first > e.rows[b].front().first; });
  for (std::size_t k : order) {
    IntRow& row = e.rows[k];
    std::size_t pos = 1;
    while (pos < row.size()) {
      const std::size_t col = row[pos].first;
      const std::ptrdiff_t p = e.pivot_of_col[col];
      if (p < 0) {
        ++pos;
        continue;
      }
      eliminate(row, e.rows[static_cast<std::size_t>(p)], col);
      // Entries before col are unchanged in column set; restart scan just past the pivot.
      pos = 1;
      while (pos < row.size() && row[pos].first < col) ++pos;
    }
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < system.unknowns(); ++c) {
    if (e.pivot_of_col[c] < 0) free_cols.push_back(c);
  }
  std::vector<std::ptrdiff_t> free_slot(system.unknowns(), -1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) free_slot[free_cols[k]] = static_cast<std::ptrdiff_t>(k);

  result.basis.assign(free_cols.size(), std::vector<Rational>(system.unknowns(), Rational(0)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) result.basis[k][free_cols[k]] = 1;
  for (const IntRow& row : e.rows) {
    const std::size_t pivot_col = row.front().first;
    const Integer& lead = row.front().second;
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto slot = free_slot[row[t].first];
      Rational value(-row[t].second, lead);
      value.canonicalize();
      result.basis[static_cast<std::size_t>(slot)][pivot_col] = std::move(value);
    }
  }
  return result;
}

std::size_t rank(const LinearSystem& system) { return solve_nullspace(system, false).rank; }

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  LinearSystem system(vectors.front().size());
  for (const auto& v : vectors) {
    std::vector<LinearSystem::Term> terms;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) != 0) terms.emplace_back(c, v[c]);
    }
    system.add_row(std::move(terms));
  }
  return rank(system);
}

}  // namespace adjspec
