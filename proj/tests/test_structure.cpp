#include <gtest/gtest.h>

#include <random>

#include "adjspec/errors.hpp"
#include "adjspec/families.hpp"
#include "adjspec/structure.hpp"
#include "test_support.hpp"

using namespace adjspec;
using adjspec::testing::line_window;
using adjspec::testing::random_graph;
using adjspec::testing::support_id;

namespace {

ScalarFunction function_of(const DirectedGraph& g, const std::function<Rational(const VertexId&)>& f) {
  ScalarFunction phi;
  for (const auto& v : g.vertices()) phi.set(v, f(v));
  return phi;
}

ScalarFunction line_function(const Window& w, const std::function<Rational(long)>& f) {
  return function_of(w.graph, [&](const VertexId& v) { return f(std::stol(v)); });
}

Window four_cycle() {
  return {DirectedGraph::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}), 0};
}

}  // namespace

TEST(PositionFunction, LineIsAnchored) {
  const Window w = line_window(-4, 4);
  const UnivocityResult r = synthesize_position_function(w);
  ASSERT_TRUE(r.univoque);
  ASSERT_EQ(r.anchors.size(), 1u);
  const long anchor = std::stol(r.anchors.front());
  for (long n = -4; n <= 4; ++n) EXPECT_EQ(r.phi.at(std::to_string(n)), Rational(n - anchor));
}

TEST(PositionFunction, DirectedFourCycleGivesIndexTwoWitness) {
  const UnivocityResult r = synthesize_position_function(four_cycle());
  ASSERT_FALSE(r.univoque);
  EXPECT_EQ(r.witness_index, 2);
  EXPECT_EQ(r.witness.front(), r.witness.back());
  EXPECT_EQ(path_index(four_cycle().graph, r.witness), 2);
  EXPECT_EQ(r.witness, (Path{"a", "b", "c", "d", "a"}));
}

TEST(PositionFunction, FockLayerAgreesWithSupportSum) {
  const Family layer = gen_fock_layer(gen_lattice(1, 5), 2);
  const UnivocityResult r = synthesize_position_function(layer.window);
  ASSERT_TRUE(r.univoque);
  std::optional<Rational> offset;
  for (const auto& v : layer.window.graph.vertices()) {
    const Rational d = r.phi.at(v) - layer.phi.at(v);
    if (!offset) offset = d;
    EXPECT_EQ(d, *offset) << v;
  }
}

TEST(PositionFunction, UniqueUpToConstantAcrossAnchors) {
  for (const Family& f : {gen_lattice(2, 3), gen_ladder_alt(3), gen_half_plane(3)}) {
    const auto& g = f.window.graph;
    const UnivocityResult first = synthesize_position_function(f.window);
    for (std::size_t v = 0; v < g.size(); v += 5) {
      const UnivocityResult other = synthesize_position_function(f.window, g.id(v));
      ASSERT_TRUE(other.univoque);
      EXPECT_EQ(other.phi.at(g.id(v)), 0);
      const Rational shift = other.phi.at(g.id(0)) - first.phi.at(g.id(0));
      for (const auto& x : g.vertices()) EXPECT_EQ(other.phi.at(x) - first.phi.at(x), shift);
    }
  }
}

TEST(PositionFunction, UnivoqueIffFundamentalCyclesHaveIndexZero) {
  std::mt19937 rng(29);
  int univoque_seen = 0, not_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, 7, trial % 2 ? 0.25 : 0.4);
    // Spanning forest by DFS; every non-tree edge closes a fundamental cycle.
    std::vector<std::size_t> parent(g.size(), kUnreachable), depth(g.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    for (std::size_t root = 0; root < g.size(); ++root) {
      if (parent[root] != kUnreachable) continue;
      parent[root] = root;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : g.neighbors(u)) {
          if (parent[v] == kUnreachable) {
            parent[v] = u;
            depth[v] = depth[u] + 1;
            stack.push_back(v);
          }
        }
      }
    }
    for (const auto& [u, v] : g.arc_indices()) {
      if (parent[v] != u && parent[u] != v) extra.emplace_back(u, v);
    }
    bool all_zero = true;
    for (const auto& [u, v] : extra) {
      std::vector<std::size_t> a{u}, b{v};
      while (a.back() != b.back()) {
        if (depth[a.back()] >= depth[b.back()]) {
          a.push_back(parent[a.back()]);
        } else {
          b.push_back(parent[b.back()]);
        }
      }
      // v -> ... -> lca <- ... <- u, closed by the edge u - v
      std::vector<std::size_t> cycle(b.begin(), b.end());
      cycle.insert(cycle.end(), a.rbegin() + 1, a.rend());
      cycle.push_back(v);
      all_zero = all_zero && path_index(g, cycle) == 0;
    }
    const bool univoque = synthesize_position_function({g, 0}).univoque;
    EXPECT_EQ(univoque, all_zero);
    (univoque ? univoque_seen : not_seen)++;
  }
  EXPECT_GT(univoque_seen, 10);
  EXPECT_GT(not_seen, 10);
}

TEST(PositionFunction, EmptyGraphIsAnError) {
  EXPECT_THROW(synthesize_position_function({DirectedGraph::build({}, {}), 0}), Error);
}

TEST(Uniformity, LinePasses) {
  const auto r = check_uniformity(line_window(-5, 5));
  EXPECT_TRUE(r.uniform);
  EXPECT_GT(r.pairs_checked, 0u);
}

TEST(Uniformity, FockLayerOverPlaneWitness) {
  const Family layer = gen_fock_layer(gen_lattice(2, 4), 2);
  const UniformityResult r = check_uniformity(layer.window);
  ASSERT_FALSE(r.uniform);
  EXPECT_EQ(r.witness->common_fathers, 2u);
  EXPECT_EQ(r.witness->common_sons, 0u);
  const auto canon = canonical_lattice_witness(layer, *r.witness);
  ASSERT_TRUE(canon);
  EXPECT_EQ(canon->x, support_id(std::vector<std::string>{"(1,0)", "(1,1)"}));
  EXPECT_EQ(canon->y, support_id(std::vector<std::string>{"(0,1)", "(1,1)"}));
  EXPECT_EQ(canon->common_fathers, 2u);
  EXPECT_EQ(canon->common_sons, 0u);
}

TEST(Uniformity, LadderWithRungsFailsForEveryOrientation) {
  // 2 x 3 window: columns -1, 0, 1 with the outer columns on the boundary.
  std::vector<VertexId> v;
  std::vector<Arc> arcs;
  std::vector<VertexId> boundary;
  for (int n = -1; n <= 1; ++n) {
    for (int s = 0; s < 2; ++s) {
      const std::string id = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
      v.push_back(id);
      if (n != 0) boundary.push_back(id);
      if (n < 1) arcs.emplace_back(id, "(" + std::to_string(n + 1) + "," + std::to_string(s) + ")");
    }
    arcs.emplace_back("(" + std::to_string(n) + ",0)", "(" + std::to_string(n) + ",1)");
  }
  Window w{DirectedGraph::build(v, arcs, boundary), 0, false};
  const auto exhaustive = check_admissible_any_orientation(w, 24, false);
  EXPECT_TRUE(exhaustive.exhausted);
  EXPECT_FALSE(exhaustive.admissible);
  EXPECT_EQ(exhaustive.orientations_tried, 128u);
  const auto shortcut = check_admissible_any_orientation(w);
  EXPECT_FALSE(shortcut.admissible);
  ASSERT_TRUE(shortcut.odd_degree_vertex);
  EXPECT_EQ(w.graph.degree(w.graph.index_of(*shortcut.odd_degree_vertex)), 3u);

  const Family ladder = gen_ladder_rungs(5);
  EXPECT_FALSE(check_admissible_any_orientation(ladder.window).admissible);
}

TEST(Uniformity, ExhaustiveSearchFindsAnOrientationWhenOneExists) {
  // A path with mixed arc directions: only the two consistent orientations are admissible.
  const auto g = DirectedGraph::build({"0", "1", "2", "3", "4", "5"},
                                      {{"0", "1"}, {"2", "1"}, {"2", "3"}, {"4", "3"}, {"4", "5"}}, {"0", "5"});
  Window w{g, 0, false};
  EXPECT_FALSE(check_admissible(w).admissible);
  const auto r = check_admissible_any_orientation(w);
  EXPECT_TRUE(r.admissible);
  ASSERT_TRUE(r.orientation);
  EXPECT_TRUE(check_admissible({*r.orientation, 0}).admissible);
}

TEST(Admissible, Families) {
  for (unsigned n = 1; n <= 3; ++n) EXPECT_TRUE(check_admissible(gen_lattice(n, 3).window).admissible) << n;
  for (unsigned n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_admissible(gen_fock_layer(gen_lattice(1, 5), n).window).admissible) << n;
  }
  const auto plane = check_admissible(gen_fock_layer(gen_lattice(2, 4), 2).window);
  EXPECT_FALSE(plane.admissible);
  EXPECT_TRUE(plane.univocity.univoque);
  EXPECT_FALSE(plane.uniformity.uniform);
}

TEST(SemiAdapted, ConstantAndLinearPass) {
  const Window w = line_window(-6, 6);
  EXPECT_TRUE(verify_semi_adapted(w.graph, ScalarFunction::constant(w.graph, Rational(7))).semi_adapted());
  EXPECT_TRUE(verify_semi_adapted(w.graph, line_function(w, [](long x) { return Rational(x); })).semi_adapted());
  std::mt19937 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_graph(rng, 8, 0.4);
    EXPECT_TRUE(verify_adapted(g, ScalarFunction::constant(g, Rational(trial, 3))).adapted());
  }
}

TEST(SemiAdapted, SquareFailsWithSumFourAtEveryDiagonalPair) {
  const Window w = line_window(-6, 6);
  const auto r = verify_semi_adapted(w.graph, line_function(w, [](long x) { return Rational(x * x); }));
  EXPECT_FALSE(r.semi_adapted());
  std::size_t diagonal = 0;
  for (const auto& v : r.semi.violations) {
    if (v.x != v.y) continue;
    ++diagonal;
    // sum over N(x) of [2 Phi(z) - 2 Phi(x)] = 2 ((x-1)^2 + (x+1)^2 - 2x^2) = 4
    EXPECT_EQ(v.value, 4) << v.x;
  }
  EXPECT_EQ(diagonal, interior_indices(w.graph, 2).size());
  // x and x + 2 share x + 1: 2(x+1)^2 - x^2 - (x+2)^2 = -2.
  for (const auto& v : r.semi.violations) {
    if (std::abs(std::stol(v.x) - std::stol(v.y)) == 2) {
      EXPECT_EQ(v.value, -2) << v.x << " " << v.y;
    }
  }
}

TEST(SemiAdapted, LipschitzConstant) {
  const Window w = line_window(-3, 3);
  const auto r = verify_semi_adapted(w.graph, line_function(w, [](long x) { return Rational(x * x); }));
  EXPECT_EQ(r.lipschitz, 5);
}

TEST(Adapted, PositionFunctionsOnAdmissibleWindows) {
  for (const Family& f : {gen_lattice(1, 5), gen_lattice(2, 4), gen_half_plane(5), gen_ladder_alt(5),
                          gen_fock_layer(gen_lattice(1, 6), 3)}) {
    ASSERT_TRUE(f.position) << f.descriptor();
    EXPECT_TRUE(verify_adapted(f.window.graph, f.phi).adapted()) << f.descriptor();
  }
}

TEST(Adapted, FourCycleFailsSemiAtBottomVertex) {
  const Window w = four_cycle();
  ScalarFunction phi;
  phi.set("a", 0);
  phi.set("b", 1);
  phi.set("c", 2);
  phi.set("d", 1);
  const auto r = verify_adapted(w.graph, phi);
  EXPECT_FALSE(r.adapted());
  bool found = false;
  for (const auto& v : r.semi.violations) {
    if (v.x == "a" && v.y == "a") {
      EXPECT_EQ(v.value, 4);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Adapted, LadderWithRungs) {
  const Family f = gen_ladder_rungs(5);
  EXPECT_FALSE(f.position);
  const auto r = verify_adapted(f.window.graph, f.phi);
  EXPECT_TRUE(r.semi_adapted());
  EXPECT_TRUE(r.adapted());
}

TEST(Adapted, SemiSumMatchesDirectEvaluation) {
  // Oracle written straight from the definition with explicit neighbour sets.
  std::mt19937 rng(13);
  const auto g = random_graph(rng, 9, 0.45);
  std::vector<Rational> phi(g.size());
  for (auto& q : phi) q = Rational(std::uniform_int_distribution<int>(-5, 5)(rng));
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      Rational semi = 0, full = 0;
      for (std::size_t z = 0; z < g.size(); ++z) {
        if (!g.adjacent(x, z) || !g.adjacent(y, z)) continue;
        semi += 2 * phi[z] - phi[x] - phi[y];
        full += (phi[z] - phi[x]) * (phi[z] - phi[y]) * (2 * phi[z] - phi[x] - phi[y]);
      }
      EXPECT_EQ(semi_sum(g, phi, x, y), semi);
      EXPECT_EQ(full_sum(g, phi, x, y), full);
    }
  }
}

TEST(Adapted, MissingValue) {
  const Window w = line_window(-2, 2);
  ScalarFunction phi;
  phi.set("0", 1);
  try {
    verify_semi_adapted(w.graph, phi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MissingValue);
  }
}

TEST(Bipartition, LineAndFockLayer) {
  const Window w = line_window(-4, 4);
  const auto [odd, even] = bipartition(w.graph, line_function(w, [](long x) { return Rational(x); }));
  for (const auto& v : odd) EXPECT_NE(std::stol(v) % 2, 0);
  for (const auto& v : even) EXPECT_EQ(std::stol(v) % 2, 0);
  EXPECT_EQ(odd.size() + even.size(), 9u);

  const Family layer = gen_fock_layer(gen_lattice(1, 4), 2);
  const auto& g = layer.window.graph;
  const auto parts = bipartition(g, layer.phi);
  std::set<VertexId> odd_set(parts.first.begin(), parts.first.end());
  for (const auto& [u, v] : g.arc_indices()) EXPECT_NE(odd_set.count(g.id(u)), odd_set.count(g.id(v)));
  for (const auto& v : parts.first) EXPECT_NE(mpz_odd_p(layer.phi.at(v).get_num_mpz_t()), 0);
}

TEST(Bipartition, RejectsNonPositionFunction) {
  const Window w = line_window(-4, 4);
  try {
    bipartition(w.graph, line_function(w, [](long x) { return Rational(2 * x); }));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPositionFunction);
  }
}

TEST(NeighborhoodMean, Examples) {
  const Window w = line_window(-4, 4);
  const auto phi = line_function(w, [](long x) { return Rational(x); });
  EXPECT_EQ(neighborhood_mean(phi, {"3"}), 3);
  EXPECT_EQ(neighborhood_mean(phi, {"-1", "1"}), 0);
  try {
    neighborhood_mean(phi, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySet);
  }
}

TEST(NeighborhoodMean, SemiConditionIsEqualityOfMeans) {
  const Family f = gen_lattice(2, 4);
  const auto& g = f.window.graph;
  for (const auto& [x, y] : local_pairs(g, interior_mask(g, 2))) {
    std::vector<VertexId> common;
    for (auto z : g.neighbors(x)) {
      if (g.adjacent(z, y)) common.push_back(g.id(z));
    }
    if (common.empty()) continue;
    EXPECT_EQ(neighborhood_mean(f.phi, {g.id(x), g.id(y)}), neighborhood_mean(f.phi, common));
  }
}

TEST(Rigidity, SemiSystemOnSmallGraphsIsConstants) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto g = adjspec::testing::path_graph(n);
    const NullspaceResult ns = solve_nullspace(semi_adapted_system(g, 0));
    EXPECT_EQ(ns.dimension, 1u) << n;
    for (const auto& q : ns.basis.front()) EXPECT_EQ(q, ns.basis.front().front());
  }
  // Two components: one constant per component.
  const auto two = DirectedGraph::build({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}, {"x", "y"}});
  EXPECT_EQ(solve_nullspace(semi_adapted_system(two, 0)).dimension, 2u);
}
