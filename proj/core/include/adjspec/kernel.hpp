#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjspec/graph.hpp"
#include "adjspec/rational.hpp"
#include "adjspec/structure.hpp"

namespace adjspec {

enum class KernelMode { Structural, NumericH, NumericK, CompactProbe };
std::string to_string(KernelMode mode);

/// Unknowns are the window vertices, or only the support vertices when a
/// support margin is set: then every vector is supported at distance
/// >= margin from the boundary, and every vertex with a neighbour in the
/// support contributes its constraints (such constraints are exact even at
/// the boundary because the missing neighbours lie outside the support).
/// Without a margin the constraints come from interior(radius) only.
struct KernelReport {
  KernelMode mode = KernelMode::Structural;
  std::size_t dimension = 0;
  // Full-length vectors over the window vertices, in canonical echelon form.
  std::vector<std::vector<Rational>> basis;
  unsigned radius = 1;
  std::optional<unsigned> margin;
  std::size_t unknowns = 0;
  std::size_t constraint_vertices = 0;
  std::size_t equations = 0;
};

// f summed over the fathers of x and over the sons of x both vanish.
KernelReport structural_kernel_basis(const Window& w, std::optional<unsigned> margin = std::nullopt,
                                     bool want_basis = true);
KernelReport ker_H_basis(const Window& w, std::optional<unsigned> margin = std::nullopt, bool want_basis = true);
// Throws MissingPhi when phi lacks a vertex.
KernelReport ker_K_basis(const Window& w, const ScalarFunction& phi, std::optional<unsigned> margin = std::nullopt,
                         bool want_basis = true);

// True when every vector of `inner` lies in the span of `outer` (exact).
bool span_contains(const std::vector<std::vector<Rational>>& outer, const std::vector<std::vector<Rational>>& inner);

struct CompactProbeStep {
  unsigned size = 0;
  std::size_t vertices = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dimension = 0;
};

struct CompactProbeResult {
  unsigned margin = 1;
  std::vector<CompactProbeStep> steps;
  // "evidence_of_injectivity" when every step has dimension 0, otherwise
  // "compact_kernel_found". Never a claim of injectivity.
  std::string label;
};

/// Structural system restricted to compactly supported vectors, for a
/// ladder of window sizes. Throws BadParams for margin 0.
CompactProbeResult compact_support_probe(const std::function<Window(unsigned)>& generate,
                                         const std::vector<unsigned>& sizes, unsigned margin);

enum class SymmetryRelation { Equal, KernelStrictlyInside, AntisymmetricStrictlyInside, Incomparable };
std::string to_string(SymmetryRelation r);

struct SymmetryKernelResult {
  SymmetryRelation relation = SymmetryRelation::Equal;
  std::size_t kernel_dimension = 0;
  std::size_t antisymmetric_dimension = 0;
  std::size_t sum_dimension = 0;
  // An antisymmetric vector outside the kernel, and a kernel vector that is
  // not antisymmetric, when they exist.
  std::optional<std::vector<Rational>> antisymmetric_outside_kernel;
  std::optional<std::vector<Rational>> kernel_not_antisymmetric;
};

/// Compares the structural kernel of the whole window with {f : f o tau = -f}.
/// tau must be an involutive automorphism of the undirected graph that
/// preserves the boundary; throws NotAutomorphism otherwise.
SymmetryKernelResult symmetry_kernel_check(const Window& w, const std::map<VertexId, VertexId>& tau);

}  // namespace adjspec
