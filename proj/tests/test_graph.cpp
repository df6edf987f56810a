#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "adjspec/errors.hpp"
#include "adjspec/families.hpp"
#include "adjspec/graph.hpp"
#include "test_support.hpp"

using namespace adjspec;
using adjspec::testing::line_window;
using adjspec::testing::random_graph;
using adjspec::testing::support_id;

namespace {

Errc build_error(const std::vector<VertexId>& v, const std::vector<Arc>& arcs) {
  try {
    DirectedGraph::build(v, arcs);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build succeeded";
  return Errc::ParseError;
}

}  // namespace

TEST(BuildGraph, TwoVertexChain) {
  const auto g = DirectedGraph::build({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_TRUE(g.precedes(g.index_of("a"), g.index_of("b")));
  EXPECT_FALSE(g.precedes(g.index_of("b"), g.index_of("a")));
}

TEST(BuildGraph, RejectsInvalidArcs) {
  EXPECT_EQ(build_error({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Errc::SymmetricArcPair);
  EXPECT_EQ(build_error({"a"}, {{"a", "a"}}), Errc::LoopArc);
  EXPECT_EQ(build_error({"a", "b"}, {{"a", "b"}, {"a", "b"}}), Errc::DuplicateArc);
  EXPECT_EQ(build_error({"a"}, {{"a", "c"}}), Errc::UnknownVertex);
  EXPECT_EQ(build_error({"a", "a"}, {}), Errc::DuplicateVertex);
}

TEST(BuildGraph, ErrorNamesOffendingArc) {
  try {
    DirectedGraph::build({"p", "q"}, {{"p", "q"}, {"q", "p"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("q"), std::string::npos);
  }
}

TEST(NeighborSplit, Line) {
  const auto w = line_window(-3, 3);
  const auto s = neighbor_split(w.graph, "0");
  EXPECT_EQ(s.fathers, std::vector<VertexId>{"-1"});
  EXPECT_EQ(s.sons, std::vector<VertexId>{"1"});
  EXPECT_THROW(neighbor_split(w.graph, "9"), Error);
}

TEST(NeighborSplit, FathersAndSonsPartitionNeighbours) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(rng, 9, 0.4);
    for (std::size_t v = 0; v < g.size(); ++v) {
      std::set<std::size_t> f(g.fathers(v).begin(), g.fathers(v).end());
      std::set<std::size_t> s(g.sons(v).begin(), g.sons(v).end());
      std::set<std::size_t> n(g.neighbors(v).begin(), g.neighbors(v).end());
      std::set<std::size_t> both;
      std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::inserter(both, both.end()));
      EXPECT_TRUE(both.empty());
      std::set<std::size_t> uni = f;
      uni.insert(s.begin(), s.end());
      EXPECT_EQ(uni, n);
    }
  }
}

TEST(NeighborSplit, FockFathersCountComponentsOfSupport) {
  const Family layer = gen_fock_layer(gen_lattice(1, 6), 3);
  const auto& g = layer.window.graph;
  for (std::size_t v : interior_indices(g, 1)) {
    // components of the support = number of maximal runs of consecutive integers
    std::string id = g.id(v);
    std::vector<long> xs;
    std::size_t pos = 1;
    while (pos < id.size() - 1) {
      std::size_t end = id.find(',', pos);
      if (end == std::string::npos) end = id.size() - 1;
      xs.push_back(std::stol(id.substr(pos, end - pos)));
      pos = end + 1;
    }
    std::sort(xs.begin(), xs.end());
    std::size_t runs = 1;
    for (std::size_t k = 1; k < xs.size(); ++k) runs += xs[k] != xs[k - 1] + 1;
    EXPECT_EQ(g.fathers(v).size(), runs) << id;
    EXPECT_EQ(g.sons(v).size(), runs) << id;
  }
}

TEST(NeighborSplit, FockFathersMatchDefinitionByEnumeration) {
  const Family layer = gen_fock_layer(gen_lattice(1, 7), 4);
  const auto& g = layer.window.graph;
  const VertexId alpha = support_id({0, 1, 2, 5});
  // beta < alpha iff beta \ {x} = alpha \ {x+1} for some x in beta, x+1 in alpha
  std::set<std::vector<long>> expected;
  std::vector<long> a = {0, 1, 2, 5};
  for (long lo = -7; lo <= 7; ++lo) {
    for (long b1 = lo + 1; b1 <= 7; ++b1) {
      for (long b2 = b1 + 1; b2 <= 7; ++b2) {
        for (long b3 = b2 + 1; b3 <= 7; ++b3) {
          std::vector<long> beta = {lo, b1, b2, b3};
          for (long x : beta) {
            if (std::count(a.begin(), a.end(), x + 1) == 0) continue;
            std::vector<long> rb, ra;
            for (long t : beta) if (t != x) rb.push_back(t);
            for (long t : a) if (t != x + 1) ra.push_back(t);
            if (rb == ra) expected.insert(beta);
          }
        }
      }
    }
  }
  std::set<VertexId> want;
  for (const auto& b : expected) want.insert(support_id(b));
  const auto split = neighbor_split(g, alpha);
  EXPECT_EQ(std::set<VertexId>(split.fathers.begin(), split.fathers.end()), want);
  EXPECT_EQ(want, (std::set<VertexId>{support_id({-1, 1, 2, 5}), support_id({0, 1, 2, 4})}));
}

TEST(PathIndex, Examples) {
  const auto w = line_window(-3, 3);
  EXPECT_EQ(path_index(w.graph, Path{"0", "1", "2"}), 2);
  EXPECT_EQ(path_index(w.graph, Path{"0", "1", "0"}), 0);
  EXPECT_EQ(path_index(w.graph, Path{"2", "1", "0", "-1"}), -3);
  try {
    path_index(w.graph, Path{"0", "2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidPath);
  }
}

TEST(PathIndex, AdditiveUnderJuxtaposition) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 8, 0.5);
    auto walk = [&](std::size_t start, std::size_t steps) {
      std::vector<std::size_t> p{start};
      for (std::size_t s = 0; s < steps; ++s) {
        auto nb = g.neighbors(p.back());
        if (nb.empty()) break;
        p.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
      }
      return p;
    };
    auto direct = [&](const std::vector<std::size_t>& p) {
      long idx = 0;
      for (std::size_t j = 1; j < p.size(); ++j) idx += g.precedes(p[j - 1], p[j]) ? 1 : -1;
      return idx;
    };
    const auto p = walk(0, 6);
    const auto q = walk(p.back(), 5);
    std::vector<std::size_t> pq = p;
    pq.insert(pq.end(), q.begin() + 1, q.end());
    EXPECT_EQ(path_index(g, pq), path_index(g, p) + path_index(g, q));
    EXPECT_EQ(path_index(g, pq), direct(pq));
  }
}

TEST(Distance, LineMetricDegreeAndComponents) {
  const auto w = line_window(-5, 5);
  EXPECT_EQ(distance(w.graph, "-2", "3"), 5u);
  EXPECT_EQ(distance(w.graph, "1", "1"), 0u);
  const Family ladder = gen_ladder_alt(4);
  EXPECT_EQ(degree(ladder.window.graph, "(0,0)"), 4u);
  EXPECT_EQ(degree(ladder.window.graph, "(0,1)"), 4u);

  const auto two = DirectedGraph::build({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}, {"x", "y"}});
  EXPECT_EQ(connected_components(two).size(), 2u);
  try {
    distance(two, "a", "y");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Disconnected);
  }
}

TEST(Distance, IsAMetricOnComponents) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(rng, 10, 0.3);
    std::vector<std::vector<std::size_t>> d;
    for (std::size_t v = 0; v < g.size(); ++v) d.push_back(bfs_distances(g, v));
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_EQ(d[a][a], 0u);
      for (std::size_t b = 0; b < g.size(); ++b) {
        EXPECT_EQ(d[a][b], d[b][a]);
        if (d[a][b] == kUnreachable) continue;
        for (std::size_t c = 0; c < g.size(); ++c) {
          if (d[b][c] == kUnreachable) continue;
          EXPECT_LE(d[a][c], d[a][b] + d[b][c]);
        }
      }
    }
  }
}

TEST(Interior, LineWindow) {
  Window w = line_window(-5, 5);
  w.interior_radius = 2;
  std::vector<VertexId> want;
  for (long n = -3; n <= 3; ++n) want.push_back(std::to_string(n));
  auto got = interior(w);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  w.interior_radius = 0;
  EXPECT_EQ(interior(w).size(), 11u);
}

TEST(Interior, FockLayerMatchesBfsOracle) {
  const Family layer = gen_fock_layer(gen_lattice(1, 4), 2);
  Window w = layer.window;
  w.interior_radius = 1;
  const auto& g = w.graph;
  // Oracle: plain BFS from every boundary vertex, written independently.
  std::vector<std::size_t> best(g.size(), kUnreachable);
  for (std::size_t b : g.boundary()) {
    std::vector<std::size_t> dist(g.size(), kUnreachable);
    std::deque<std::size_t> q{b};
    dist[b] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
    for (std::size_t v = 0; v < g.size(); ++v) best[v] = std::min(best[v], dist[v]);
  }
  std::set<VertexId> oracle, supports;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (best[v] >= 1) oracle.insert(g.id(v));
  }
  for (long a = -3; a <= 3; ++a) {
    for (long b = a + 1; b <= 3; ++b) supports.insert(support_id({a, b}));
  }
  const auto got = interior(w);
  EXPECT_EQ(std::set<VertexId>(got.begin(), got.end()), oracle);
  EXPECT_EQ(oracle, supports);
}
