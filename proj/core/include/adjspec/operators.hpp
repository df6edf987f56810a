#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjspec/graph.hpp"
#include "adjspec/sparse_operator.hpp"
#include "adjspec/structure.hpp"

namespace adjspec {

enum class OperatorKind { H, K, L, U, A, APrime };

std::string to_string(OperatorKind kind);

/// H(x,y) = 1, K(x,y) = i(Φ(y)-Φ(x)), L(x,y) = -(Φ(y)-Φ(x))^2 for y ~ x;
/// U(x,y) = 1 for y < x; A = ΦK - (i/2)L; A' = (ΦL + LΦ)/2.
/// Throws MissingPhi when Φ is needed and absent, MissingDirections for U
/// on a window whose arcs are not a real orientation.
SparseOperator assemble(const Window& w, OperatorKind which, const ScalarFunction* phi = nullptr);
SparseOperator assemble(const DirectedGraph& g, OperatorKind which, std::span<const Rational> phi = {});

// Multiplication by Φ.
SparseOperator multiplication(std::span<const Rational> phi);

// i(PQ - QP). Throws DimensionMismatch.
SparseOperator commutator(const SparseOperator& p, const SparseOperator& q);

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct IdentityCheck {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  unsigned radius = 0;
  // Largest residual entry by modulus inside the mask, zero on success.
  GaussianRational max_residual;
  std::size_t nonzero_entries = 0;
  // Row and column of the first non-zero residual entry in row-major order.
  std::optional<std::pair<VertexId, VertexId>> location;
  std::string reason;  // why it was skipped
};

struct IdentityReport {
  bool semi_adapted = false;
  bool adapted = false;
  bool position_function = false;
  bool oriented = true;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;  // no Fail verdicts
};

/// Exact operator identities on window interiors. Identities that need
/// (semi-)adaptedness are skipped with a reason when it fails; U identities
/// need a real orientation, and K = -i(U - U*), L = -H need Φ to be a
/// position function. Throws NotSemiAdapted when Φ is neither semi-adapted
/// nor a position function, since then nothing of substance can be checked.
IdentityReport verify_identities(const Window& w, const ScalarFunction& phi);

// Compares two operators on rows and columns inside mask.
IdentityCheck compare_on_mask(const DirectedGraph& g, const std::string& name, const SparseOperator& lhs,
                              const SparseOperator& rhs, unsigned radius);

/// max(max row sum, max column sum) of |a(x,y)|. Exact for real or purely
/// imaginary entries; a mixed entry contributes |re| + |im|, which still
/// bounds its modulus, so the result stays an upper bound on the norm.
Rational schur_bound(const SparseOperator& op);

struct OperatorKernel {
  std::size_t dimension = 0;
  // Canonical reduced echelon basis of the kernel.
  std::vector<std::vector<GaussianRational>> basis;
};

/// Exact kernel of the rows of op selected by constraint_rows (vertex
/// indices). Real and purely imaginary operators stay over Q; mixed ones are
/// solved through the real 2n-dimensional embedding.
OperatorKernel exact_nullspace(const SparseOperator& op, const std::vector<std::size_t>& constraint_rows);

}  // namespace adjspec
