#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "adjspec/elimination.hpp"
#include "adjspec/graph.hpp"
#include "adjspec/rational.hpp"

namespace adjspec {

/// Exact rational vertex function (a candidate Φ).
class ScalarFunction {
 public:
  ScalarFunction() = default;

  static ScalarFunction constant(const DirectedGraph& g, const Rational& value);
  // values[v] is the value at vertex index v.
  static ScalarFunction from_values(const DirectedGraph& g, std::span<const Rational> values);

  void set(VertexId v, Rational value) { values_[std::move(v)] = std::move(value); }
  bool contains(std::string_view v) const { return values_.find(v) != values_.end(); }
  // Throws MissingValue.
  const Rational& at(std::string_view v) const;
  std::size_t size() const { return values_.size(); }
  const std::map<VertexId, Rational, std::less<>>& entries() const { return values_; }

  // Values in the graph's index order. Throws MissingValue naming the first
  // vertex without a value.
  std::vector<Rational> values_on(const DirectedGraph& g) const;

 private:
  std::map<VertexId, Rational, std::less<>> values_;
};

// max over arcs of |Φ(x) - Φ(y)|; zero for a graph without arcs.
Rational lipschitz_constant(const DirectedGraph& g, std::span<const Rational> phi);

// Φ(son) = Φ(father) + 1 on every arc (integrality is implied up to a
// constant on each component, so it is not required).
bool is_position_function(const DirectedGraph& g, std::span<const Rational> phi);

struct UnivocityResult {
  bool univoque = false;
  // Positive case: Φ with value 0 at the anchor of each component (by
  // default the component's first vertex in index order).
  ScalarFunction phi;
  std::vector<VertexId> anchors;
  // Negative case: closed path with positive index.
  Path witness;
  long witness_index = 0;
};

/// Anchored BFS. A conflict between the tree value and an arc yields the
/// closed path through the two tree branches and that arc. The given anchor,
/// if any, replaces the default anchor of its component.
UnivocityResult synthesize_position_function(const Window& w, std::optional<std::string_view> anchor = std::nullopt);

struct UniformityWitness {
  VertexId x;
  VertexId y;
  std::size_t common_fathers = 0;
  std::size_t common_sons = 0;
};

struct UniformityResult {
  bool uniform = true;
  std::optional<UniformityWitness> witness;
  std::size_t pairs_checked = 0;
  unsigned radius = 1;
};

inline constexpr unsigned kUniformityRadius = 1;
inline constexpr unsigned kAdaptedRadius = 2;

/// Pairs of interior(radius) vertices at distance <= 2, x before y in index
/// order; the first violating pair is returned.
UniformityResult check_uniformity(const DirectedGraph& g, unsigned radius = kUniformityRadius);
UniformityResult check_uniformity(const Window& w);

UniformityWitness uniformity_counts(const DirectedGraph& g, std::size_t x, std::size_t y);

struct AdmissibilityResult {
  bool admissible = false;
  UnivocityResult univocity;
  UniformityResult uniformity;
};

AdmissibilityResult check_admissible(const Window& w);

/// Admissibility of the underlying undirected graph over all orientations.
/// An odd-degree vertex in interior(1) rules out every orientation at once
/// (uniformity at x = y needs as many fathers as sons); otherwise all
/// 2^arcs orientations are tried when arcs <= arc_cap.
struct OrientationSearchResult {
  bool admissible = false;
  bool exhausted = false;  // false when the arc cap stopped the search
  std::optional<VertexId> odd_degree_vertex;
  std::size_t orientations_tried = 0;
  std::optional<DirectedGraph> orientation;  // a passing one, if found
};

OrientationSearchResult check_admissible_any_orientation(const Window& w, std::size_t arc_cap = 24,
                                                         bool parity_shortcut = true);

struct PairViolation {
  VertexId x;
  VertexId y;
  Rational value;
};

struct ConditionReport {
  bool evaluated = false;
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<PairViolation> violations;
};

struct AdaptednessReport {
  Rational lipschitz{0};
  unsigned radius = kAdaptedRadius;
  ConditionReport semi;
  ConditionReport full;

  bool semi_adapted() const { return semi.pass; }
  bool adapted() const { return semi.pass && full.evaluated && full.pass; }
};

// Sum over common neighbours z of [2Φ(z) - Φ(x) - Φ(y)].
Rational semi_sum(const DirectedGraph& g, std::span<const Rational> phi, std::size_t x, std::size_t y);
// Sum over common neighbours z of [Φ(z)-Φ(x)][Φ(z)-Φ(y)][2Φ(z)-Φ(x)-Φ(y)].
Rational full_sum(const DirectedGraph& g, std::span<const Rational> phi, std::size_t x, std::size_t y);

AdaptednessReport verify_semi_adapted(const DirectedGraph& g, const ScalarFunction& phi,
                                      unsigned radius = kAdaptedRadius);
AdaptednessReport verify_adapted(const DirectedGraph& g, const ScalarFunction& phi,
                                 unsigned radius = kAdaptedRadius);

// Interior pairs (x <= y in index order) at distance <= 2.
std::vector<std::pair<std::size_t, std::size_t>> local_pairs(const DirectedGraph& g, const std::vector<bool>& mask);

/// (odd values, even values). Throws NotPositionFunction.
std::pair<std::vector<VertexId>, std::vector<VertexId>> bipartition(const DirectedGraph& g,
                                                                    const ScalarFunction& phi);

// Exact mean over Z. Throws EmptySet, MissingValue.
Rational neighborhood_mean(const ScalarFunction& phi, const std::vector<VertexId>& z);

/// The semi-adapted condition as a linear system in the unknown values
/// Φ(v), one row per local pair in interior(radius).
LinearSystem semi_adapted_system(const DirectedGraph& g, unsigned radius);

}  // namespace adjspec
