#include "adjspec/kernel.hpp"

#include <algorithm>

#include "adjspec/elimination.hpp"
#include "adjspec/errors.hpp"

namespace adjspec {

std::string to_string(KernelMode mode) {
  switch (mode) {
    case KernelMode::Structural: return "structural";
    case KernelMode::NumericH: return "numericH";
    case KernelMode::NumericK: return "numericK";
    case KernelMode::CompactProbe: return "compactProbe";
  }
  return "?";
}

std::string to_string(SymmetryRelation r) {
  switch (r) {
    case SymmetryRelation::Equal: return "equal";
    case SymmetryRelation::KernelStrictlyInside: return "kernel_strictly_inside_antisymmetric";
    case SymmetryRelation::AntisymmetricStrictlyInside: return "antisymmetric_strictly_inside_kernel";
    case SymmetryRelation::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

KernelReport build_and_solve(const Window& w, KernelMode mode, std::span<const Rational> phi,
                             std::optional<unsigned> margin, bool want_basis) {
  const DirectedGraph& g = w.graph;
  const std::size_t n = g.size();
  KernelReport report;
  report.mode = mode;
  report.margin = margin;

  std::vector<std::ptrdiff_t> column(n, -1);
  std::vector<std::size_t> variables;
  std::vector<std::size_t> constrained;
  if (margin) {
    if (*margin == 0) throw Error(Errc::BadParams, "support margin must be at least 1");
    const auto support = interior_mask(g, *margin);
    for (std::size_t v = 0; v < n; ++v) {
      if (support[v]) {
        column[v] = static_cast<std::ptrdiff_t>(variables.size());
        variables.push_back(v);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      auto nb = g.neighbors(x);
      if (std::any_of(nb.begin(), nb.end(), [&](std::size_t y) { return support[y]; })) constrained.push_back(x);
    }
  } else {
    report.radius = 1;
    for (std::size_t v = 0; v < n; ++v) {
      column[v] = static_cast<std::ptrdiff_t>(v);
      variables.push_back(v);
    }
    constrained = interior_indices(g, report.radius);
  }

  LinearSystem system(variables.size());
  auto add = [&](std::span<const std::size_t> ys, auto&& coeff) {
    std::vector<LinearSystem::Term> terms;
    for (std::size_t y : ys) {
      if (column[y] >= 0) terms.emplace_back(static_cast<std::size_t>(column[y]), coeff(y));
    }
    system.add_row(std::move(terms));
  };
  const auto one = [](std::size_t) { return Rational(1); };
  for (std::size_t x : constrained) {
    switch (mode) {
      case KernelMode::Structural:
      case KernelMode::CompactProbe:
        add(g.fathers(x), one);
        add(g.sons(x), one);
        break;
      case KernelMode::NumericH:
        add(g.neighbors(x), one);
        break;
      case KernelMode::NumericK:
        add(g.neighbors(x), [&](std::size_t y) { return Rational(phi[y] - phi[x]); });
        break;
    }
  }
  report.unknowns = variables.size();
  report.constraint_vertices = constrained.size();
  report.equations = system.row_count();

  NullspaceResult ns = solve_nullspace(system, want_basis);
  report.dimension = ns.dimension;
  for (const auto& v : ns.basis) {
    std::vector<Rational> full(n, Rational(0));
    for (std::size_t c = 0; c < variables.size(); ++c) full[variables[c]] = v[c];
    report.basis.push_back(std::move(full));
  }
  return report;
}

}  // namespace

KernelReport structural_kernel_basis(const Window& w, std::optional<unsigned> margin, bool want_basis) {
  return build_and_solve(w, KernelMode::Structural, {}, margin, want_basis);
}

KernelReport ker_H_basis(const Window& w, std::optional<unsigned> margin, bool want_basis) {
  return build_and_solve(w, KernelMode::NumericH, {}, margin, want_basis);
}

KernelReport ker_K_basis(const Window& w, const ScalarFunction& phi, std::optional<unsigned> margin, bool want_basis) {
  std::vector<Rational> values;
  try {
    values = phi.values_on(w.graph);
  } catch (const Error& e) {
    throw Error(Errc::MissingPhi, e.what());
  }
  return build_and_solve(w, KernelMode::NumericK, values, margin, want_basis);
}

bool span_contains(const std::vector<std::vector<Rational>>& outer, const std::vector<std::vector<Rational>>& inner) {
  if (inner.empty()) return true;
  std::vector<std::vector<Rational>> both = outer;
  both.insert(both.end(), inner.begin(), inner.end());
  return rank_of(outer) == rank_of(both);
}

CompactProbeResult compact_support_probe(const std::function<Window(unsigned)>& generate,
                                         const std::vector<unsigned>& sizes, unsigned margin) {
  if (margin == 0) throw Error(Errc::BadParams, "compact support probe needs margin >= 1");
  CompactProbeResult result;
  result.margin = margin;
  bool all_zero = true;
  for (unsigned size : sizes) {
    const Window w = generate(size);
    KernelReport r = build_and_solve(w, KernelMode::CompactProbe, {}, margin, false);
    result.steps.push_back({size, w.graph.size(), r.unknowns, r.equations, r.dimension});
    all_zero = all_zero && r.dimension == 0;
  }
  result.label = all_zero ? "evidence_of_injectivity" : "compact_kernel_found";
  return result;
}

SymmetryKernelResult symmetry_kernel_check(const Window& w, const std::map<VertexId, VertexId>& tau) {
  const DirectedGraph& g = w.graph;
  const std::size_t n = g.size();
  std::vector<std::size_t> t(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = tau.find(g.id(v));
    if (it == tau.end()) throw Error(Errc::NotAutomorphism, "tau is undefined at " + g.id(v));
    auto image = g.find(it->second);
    if (!image) throw Error(Errc::NotAutomorphism, "tau maps " + g.id(v) + " outside the window");
    t[v] = *image;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (t[t[v]] != v) throw Error(Errc::NotAutomorphism, "tau is not an involution at " + g.id(v));
    if (g.is_boundary(v) != g.is_boundary(t[v])) {
      throw Error(Errc::NotAutomorphism, "tau does not preserve the boundary at " + g.id(v));
    }
  }
  for (const auto& [u, v] : g.arc_indices()) {
    if (!g.adjacent(t[u], t[v])) {
      throw Error(Errc::NotAutomorphism, "tau breaks the edge (" + g.id(u) + ", " + g.id(v) + ")");
    }
  }

  SymmetryKernelResult result;
  const KernelReport kernel = structural_kernel_basis(w);
  std::vector<std::vector<Rational>> anti;
  for (std::size_t v = 0; v < n; ++v) {
    if (t[v] <= v) continue;
    std::vector<Rational> f(n, Rational(0));
    f[v] = 1;
    f[t[v]] = -1;
    anti.push_back(std::move(f));
  }
  result.kernel_dimension = kernel.dimension;
  result.antisymmetric_dimension = anti.size();
  std::vector<std::vector<Rational>> both = kernel.basis;
  both.insert(both.end(), anti.begin(), anti.end());
  result.sum_dimension = rank_of(both);

  const bool kernel_in_anti = result.sum_dimension == result.antisymmetric_dimension;
  const bool anti_in_kernel = result.sum_dimension == result.kernel_dimension;
  if (kernel_in_anti && anti_in_kernel) {
    result.relation = SymmetryRelation::Equal;
  } else if (kernel_in_anti) {
    result.relation = SymmetryRelation::KernelStrictlyInside;
  } else if (anti_in_kernel) {
    result.relation = SymmetryRelation::AntisymmetricStrictlyInside;
  } else {
    result.relation = SymmetryRelation::Incomparable;
  }

  if (!anti_in_kernel) {
    for (const auto& f : anti) {
      if (!span_contains(kernel.basis, {f})) {
        result.antisymmetric_outside_kernel = f;
        break;
      }
    }
  }
  if (!kernel_in_anti) {
    for (const auto& f : kernel.basis) {
      bool antisymmetric = true;
      for (std::size_t v = 0; v < n && antisymmetric; ++v) antisymmetric = f[t[v]] == -f[v];
      if (!antisymmetric) {
        result.kernel_not_antisymmetric = f;
        break;
      }
    }
  }
  return result;
}

}  // namespace adjspec
