#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjspec/graph.hpp"
#include "adjspec/sparse_operator.hpp"
#include "adjspec/structure.hpp"

namespace adjspec {

/// A generated window together with its canonical Φ.
struct Family {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  Window window;
  ScalarFunction phi;
  // Φ increases by exactly 1 along every arc.
  bool position = false;

  // D-products only: the D set and, per product vertex (graph index order),
  // the factor vertex index in each coordinate.
  std::vector<std::vector<int>> d;
  std::vector<std::vector<std::size_t>> coordinates;

  std::string descriptor() const;  // e.g. "lattice(n=2,W=5)"
};

inline constexpr std::size_t kDefaultMaxVertices = 20000;

// SPECTRA_MAX_VERTICES when set, otherwise the default cap. Throws BadParams
// on a malformed value.
std::size_t max_vertices_from_env();

// [-W, W]^n with arcs x < x + e_j; Φ(x) = sum of coordinates. Ids are plain
// integers for n = 1 and "(x1,...,xn)" otherwise.
Family gen_lattice(unsigned n, unsigned width);

// Vertices of [-W, W]^2 with x1 < x2, arcs inherited from the lattice.
Family gen_half_plane(unsigned width);

// Z x Z_2 with rungs. Undirected: the stored arcs only fix a representative
// orientation, so the window is marked as not oriented. Φ(n,s) = n.
Family gen_ladder_rungs(unsigned width);

// Z x Z_2 with generators (+-1, 1), (+-1, -1), directed by n; Φ(n,s) = n.
Family gen_ladder_alt(unsigned width);

/// x ~ y iff for some d in D, x_j ~ y_j where d_j = 1 and x_j = y_j where
/// d_j = 0. An arc points along the first active coordinate of its d.
/// Φ_c(x) = sum_j c_j Φ_j(x_j). Ids are "(a|b|...)".
/// Throws BadD (empty D, a non 0/1 entry, or the zero tuple), ArityMismatch.
Family d_product(const std::vector<Family>& factors, const std::vector<std::vector<int>>& d,
                 const std::vector<Rational>& c);

struct TensorCheckResult {
  bool equal = true;
  std::size_t rows_checked = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<VertexId, VertexId>> first_mismatch;
};

/// Compares the directly assembled H of a D-product with the sum over d of
/// Kronecker products of factor adjacency matrices and identities, on
/// interior(1) rows.
TensorCheckResult tensor_assembly_check(const Family& product, const std::vector<Family>& factors);

/// N-element subsets of the base window; alpha < beta when beta arises from
/// alpha by moving one element x to a son y of x not in alpha. Ids are
/// "{a,b,...}" with elements in base vertex order. A subset is on the
/// boundary when it contains a base boundary vertex. Φ(alpha) is the sum of
/// the base Φ. Throws BadParams, ResourceCap (more than max_vertices subsets).
Family gen_fock_layer(const Family& base, unsigned n, std::size_t max_vertices = kDefaultMaxVertices);

// -2 times the adjacency matrix of a Fock layer.
SparseOperator xy_block(const Family& layer);

// (n,s) -> (n,1-s) for the two ladder families. Throws BadParams otherwise.
std::map<VertexId, VertexId> vertical_flip(const Family& ladder);

/// For Fock layers over a lattice: the witness translated so that the
/// smallest coordinates of the two supports are 0, with the counts
/// recomputed at the translated pair. Lattice windows are translation
/// invariant away from the boundary, so this picks the canonical
/// representative of the witness's translation class. nullopt when the
/// translate is not in interior(1) or no longer violates uniformity.
std::optional<UniformityWitness> canonical_lattice_witness(const Family& layer, const UniformityWitness& w);

}  // namespace adjspec
