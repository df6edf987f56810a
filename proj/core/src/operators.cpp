#include "adjspec/operators.hpp"

#include <algorithm>

#include "adjspec/elimination.hpp"
#include "adjspec/errors.hpp"

namespace adjspec {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::H: return "H";
    case OperatorKind::K: return "K";
    case OperatorKind::L: return "L";
    case OperatorKind::U: return "U";
    case OperatorKind::A: return "A";
    case OperatorKind::APrime: return "A'";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

SparseOperator multiplication(std::span<const Rational> phi) { return SparseOperator::diagonal(phi); }

namespace {

SparseOperator assemble_k_or_l(const DirectedGraph& g, std::span<const Rational> phi, bool want_k) {
  SparseOperator op(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    SparseOperator::Row row;
    for (std::size_t y : g.neighbors(x)) {
      Rational d = phi[y] - phi[x];
      if (want_k) {
        row.push_back({y, GaussianRational(Rational(0), std::move(d))});
      } else {
        row.push_back({y, GaussianRational(Rational(-(d * d)))});
      }
    }
    op.set_row(x, std::move(row));
  }
  op.set_symmetry(Symmetry::Hermitian);
  return op;
}

}  // namespace

SparseOperator assemble(const DirectedGraph& g, OperatorKind which, std::span<const Rational> phi) {
  const bool needs_phi = which != OperatorKind::H && which != OperatorKind::U;
  if (needs_phi && phi.size() != g.size()) {
    throw Error(Errc::MissingPhi, "operator " + to_string(which) + " needs a value of Phi at every vertex");
  }
  switch (which) {
    case OperatorKind::H: {
      SparseOperator op(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) {
        SparseOperator::Row row;
        for (std::size_t y : g.neighbors(x)) row.push_back({y, GaussianRational(1)});
        op.set_row(x, std::move(row));
      }
      op.set_symmetry(Symmetry::Hermitian);
      return op;
    }
    case OperatorKind::U: {
      SparseOperator op(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) {
        SparseOperator::Row row;
        for (std::size_t y : g.fathers(x)) row.push_back({y, GaussianRational(1)});
        op.set_row(x, std::move(row));
      }
      return op;
    }
    case OperatorKind::K: return assemble_k_or_l(g, phi, true);
    case OperatorKind::L: return assemble_k_or_l(g, phi, false);
    case OperatorKind::A: {
      SparseOperator k = assemble_k_or_l(g, phi, true);
      SparseOperator l = assemble_k_or_l(g, phi, false);
      SparseOperator a = multiplication(phi) * k - GaussianRational(Rational(0), Rational(1, 2)) * l;
      a.set_symmetry(Symmetry::Hermitian);
      return a;
    }
    case OperatorKind::APrime: {
      SparseOperator l = assemble_k_or_l(g, phi, false);
      SparseOperator m = multiplication(phi);
      SparseOperator a = GaussianRational(Rational(1, 2)) * (m * l + l * m);
      a.set_symmetry(Symmetry::Hermitian);
      return a;
    }
  }
  return {};
}

SparseOperator assemble(const Window& w, OperatorKind which, const ScalarFunction* phi) {
  if (which == OperatorKind::U && !w.oriented) {
    throw Error(Errc::MissingDirections, "U needs an orientation; this window only carries an undirected graph");
  }
  if (which == OperatorKind::H || which == OperatorKind::U) return assemble(w.graph, which);
  if (phi == nullptr) throw Error(Errc::MissingPhi, "operator " + to_string(which) + " needs Phi");
  const std::vector<Rational> values = phi->values_on(w.graph);
  return assemble(w.graph, which, values);
}

SparseOperator commutator(const SparseOperator& p, const SparseOperator& q) {
  if (p.dim() != q.dim()) {
    throw Error(Errc::DimensionMismatch,
                "commutator of " + std::to_string(p.dim()) + " and " + std::to_string(q.dim()) + " dimensional operators");
  }
  return GaussianRational::i() * (p * q - q * p);
}

bool IdentityReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.verdict == Verdict::Fail; });
}

IdentityCheck compare_on_mask(const DirectedGraph& g, const std::string& name, const SparseOperator& lhs,
                              const SparseOperator& rhs, unsigned radius) {
  if (lhs.dim() != rhs.dim() || lhs.dim() != g.size()) {
    throw Error(Errc::DimensionMismatch, "identity " + name + " compares operators of different size");
  }
  const auto mask = interior_mask(g, radius);
  IdentityCheck check;
  check.name = name;
  check.radius = radius;
  Rational best = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!mask[x]) continue;
    auto a = lhs.row(x);
    auto b = rhs.row(x);
    std::size_t i = 0, j = 0;
    auto record = [&](std::size_t col, const GaussianRational& value) {
      if (!mask[col] || value.is_zero()) return;
      if (check.nonzero_entries++ == 0) check.location.emplace(g.id(x), g.id(col));
      Rational n2 = value.norm2();
      if (n2 > best) {
        best = n2;
        check.max_residual = value;
      }
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        record(a[i].col, a[i].value);
        ++i;
      } else if (i == a.size() || b[j].col < a[i].col) {
        record(b[j].col, -b[j].value);
        ++j;
      } else {
        record(a[i].col, a[i].value - b[j].value);
        ++i;
        ++j;
      }
    }
  }
  check.verdict = check.nonzero_entries == 0 ? Verdict::Pass : Verdict::Fail;
  return check;
}

namespace {

// Product of a chain of operators, computed only on the rows in mask.
SparseOperator chain(const std::vector<bool>& rows, std::initializer_list<const SparseOperator*> factors) {
  auto it = factors.begin();
  SparseOperator acc = SparseOperator::multiply_rows(**it, **(it + 1), rows);
  for (it += 2; it != factors.end(); ++it) acc = SparseOperator::multiply_rows(acc, **it, rows);
  return acc;
}

IdentityCheck skipped(std::string name, unsigned radius, std::string reason) {
  IdentityCheck c;
  c.name = std::move(name);
  c.radius = radius;
  c.verdict = Verdict::Skipped;
  c.reason = std::move(reason);
  return c;
}

}  // namespace

IdentityReport verify_identities(const Window& w, const ScalarFunction& phi) {
  const DirectedGraph& g = w.graph;
  const std::vector<Rational> values = phi.values_on(g);
  IdentityReport report;
  const AdaptednessReport adaptedness = verify_adapted(g, phi, kAdaptedRadius);
  report.semi_adapted = adaptedness.semi_adapted();
  report.adapted = adaptedness.adapted();
  report.oriented = w.oriented;
  report.position_function = w.oriented && is_position_function(g, values);
  if (!report.semi_adapted && !report.position_function) {
    const auto& v = adaptedness.semi.violations.front();
    throw Error(Errc::NotSemiAdapted, "semi-adapted condition fails at (" + v.x + ", " + v.y + ") with sum " +
                                          to_string(v.value));
  }

  const SparseOperator h = assemble(g, OperatorKind::H);
  const SparseOperator k = assemble(g, OperatorKind::K, values);
  const SparseOperator l = assemble(g, OperatorKind::L, values);
  const SparseOperator a = assemble(g, OperatorKind::A, values);
  const SparseOperator a2 = assemble(g, OperatorKind::APrime, values);
  const SparseOperator zero(g.size());
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half(Rational(1, 2));
  const auto r2 = interior_mask(g, 2);
  const auto r3 = interior_mask(g, 3);

  const std::string not_semi = "Phi is not semi-adapted on interior(2)";
  const std::string not_adapted = "Phi is not adapted on interior(2)";

  auto masked_commutator = [&](const SparseOperator& p, const SparseOperator& q, const std::vector<bool>& rows) {
    return i * (SparseOperator::multiply_rows(p, q, rows) - SparseOperator::multiply_rows(q, p, rows));
  };

  if (report.semi_adapted) {
    report.checks.push_back(compare_on_mask(g, "[H,K]=0", masked_commutator(h, k, r2), zero, 2));
  } else {
    report.checks.push_back(skipped("[H,K]=0", 2, not_semi));
  }
  if (report.adapted) {
    report.checks.push_back(compare_on_mask(g, "[K,L]=0", masked_commutator(k, l, r2), zero, 2));
  } else {
    report.checks.push_back(skipped("[K,L]=0", 2, not_adapted));
  }
  if (report.position_function) {
    report.checks.push_back(compare_on_mask(g, "L=-H", l, GaussianRational(-1) * h, 0));
  } else {
    report.checks.push_back(skipped("L=-H", 0, "Phi is not a position function"));
  }

  if (report.semi_adapted) {
    report.checks.push_back(
        compare_on_mask(g, "i[H,A]=K^2", masked_commutator(h, a, r3), SparseOperator::multiply_rows(k, k, r3), 3));
  } else {
    report.checks.push_back(skipped("i[H,A]=K^2", 3, not_semi));
  }

  const SparseOperator k2a = i * (chain(r3, {&k, &k, &a}) - chain(r3, {&a, &k, &k}));
  const SparseOperator klk = chain(r3, {&k, &l, &k});
  const SparseOperator sym = half * (chain(r3, {&k, &k, &l}) + chain(r3, {&l, &k, &k}));
  report.checks.push_back(compare_on_mask(g, "i[K^2,A]=KLK+(K^2L+LK^2)/2", k2a, klk + sym, 3));
  if (report.adapted) {
    report.checks.push_back(compare_on_mask(g, "i[K^2,A]=2KLK", k2a, GaussianRational(2) * klk, 3));
    report.checks.push_back(compare_on_mask(g, "i[K,A']=L^2", masked_commutator(k, a2, r3),
                                            SparseOperator::multiply_rows(l, l, r3), 3));
  } else {
    report.checks.push_back(skipped("i[K^2,A]=2KLK", 3, not_adapted));
    report.checks.push_back(skipped("i[K,A']=L^2", 3, not_adapted));
  }

  if (w.oriented) {
    const SparseOperator u = assemble(g, OperatorKind::U);
    const SparseOperator us = u.adjoint();
    report.checks.push_back(compare_on_mask(g, "H=U+U*", h, u + us, 1));
    if (report.position_function) {
      report.checks.push_back(compare_on_mask(g, "K=-i(U-U*)", k, -i * (u - us), 1));
    } else {
      report.checks.push_back(skipped("K=-i(U-U*)", 1, "Phi is not a position function"));
    }
    report.checks.push_back(compare_on_mask(g, "UU*=U*U", SparseOperator::multiply_rows(u, us, r2),
                                            SparseOperator::multiply_rows(us, u, r2), 2));
  } else {
    const std::string reason = "the window carries no orientation";
    report.checks.push_back(skipped("H=U+U*", 1, reason));
    report.checks.push_back(skipped("K=-i(U-U*)", 1, reason));
    report.checks.push_back(skipped("UU*=U*U", 2, reason));
  }
  return report;
}

Rational schur_bound(const SparseOperator& op) {
  std::vector<Rational> col_sums(op.dim(), Rational(0));
  Rational best = 0;
  for (std::size_t r = 0; r < op.dim(); ++r) {
    Rational row_sum = 0;
    for (const auto& e : op.row(r)) {
      Rational m = abs(e.value.re()) + abs(e.value.im());
      row_sum += m;
      col_sums[e.col] += m;
    }
    if (row_sum > best) best = row_sum;
  }
  for (const auto& c : col_sums) {
    if (c > best) best = c;
  }
  return best;
}

OperatorKernel exact_nullspace(const SparseOperator& op, const std::vector<std::size_t>& constraint_rows) {
  const std::size_t n = op.dim();
  bool real = true, imaginary = true;
  for (std::size_t r : constraint_rows) {
    if (r >= n) throw Error(Errc::DimensionMismatch, "constraint row " + std::to_string(r) + " outside operator");
    for (const auto& e : op.row(r)) {
      real = real && e.value.is_real();
      imaginary = imaginary && e.value.is_imaginary();
    }
  }

  OperatorKernel kernel;
  if (real || imaginary) {
    LinearSystem system(n);
    for (std::size_t r : constraint_rows) {
      std::vector<LinearSystem::Term> terms;
      for (const auto& e : op.row(r)) terms.emplace_back(e.col, real ? e.value.re() : e.value.im());
      system.add_row(std::move(terms));
    }
    NullspaceResult ns = solve_nullspace(system);
    kernel.dimension = ns.dimension;
    for (auto& v : ns.basis) kernel.basis.emplace_back(v.begin(), v.end());
    return kernel;
  }

  // (Re + i Im)(u + i v) = (Re u - Im v) + i (Im u + Re v)
  LinearSystem system(2 * n);
  for (std::size_t r : constraint_rows) {
    std::vector<LinearSystem::Term> re_row, im_row;
    for (const auto& e : op.row(r)) {
      if (sgn(e.value.re()) != 0) {
        re_row.emplace_back(e.col, e.value.re());
        im_row.emplace_back(n + e.col, e.value.re());
      }
      if (sgn(e.value.im()) != 0) {
        re_row.emplace_back(n + e.col, -e.value.im());
        im_row.emplace_back(e.col, e.value.im());
      }
    }
    system.add_row(std::move(re_row));
    system.add_row(std::move(im_row));
  }
  NullspaceResult ns = solve_nullspace(system);
  std::vector<std::vector<GaussianRational>> vectors;
  for (const auto& uv : ns.basis) {
    std::vector<GaussianRational> w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = GaussianRational(uv[c], uv[n + c]);
    vectors.push_back(std::move(w));
  }
  kernel.basis = dense_rref(std::move(vectors));
  kernel.dimension = kernel.basis.size();
  return kernel;
}

}  // namespace adjspec
