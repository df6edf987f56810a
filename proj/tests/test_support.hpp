#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adjspec/graph.hpp"
#include "adjspec/rational.hpp"
#include "adjspec/sparse_operator.hpp"

namespace adjspec::testing {

// Directed line on [lo, hi] with arcs n < n+1; the two ends are boundary.
inline Window line_window(long lo, long hi, bool with_boundary = true) {
  std::vector<VertexId> v;
  std::vector<Arc> arcs;
  for (long n = lo; n <= hi; ++n) {
    v.push_back(std::to_string(n));
    if (n < hi) arcs.emplace_back(std::to_string(n), std::to_string(n + 1));
  }
  std::vector<VertexId> boundary;
  if (with_boundary) boundary = {std::to_string(lo), std::to_string(hi)};
  return {DirectedGraph::build(v, arcs, boundary), 0};
}

// Path graph 0 < 1 < ... < n-1 without boundary.
inline DirectedGraph path_graph(std::size_t n) { return line_window(0, static_cast<long>(n) - 1, false).graph; }

// Random simple directed graph on n vertices "v0".."v{n-1}" with each
// unordered pair joined with probability p in a random direction.
inline DirectedGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::vector<VertexId> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back("v" + std::to_string(k));
  std::bernoulli_distribution edge(p), flip(0.5);
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!edge(rng)) continue;
      if (flip(rng)) {
        arcs.emplace_back(v[a], v[b]);
      } else {
        arcs.emplace_back(v[b], v[a]);
      }
    }
  }
  return DirectedGraph::build(v, arcs);
}

// Fock layer id of a set of base vertex ids: elements in string order.
inline VertexId support_id(std::vector<std::string> elements) {
  std::sort(elements.begin(), elements.end());
  std::string s = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) s += (k ? "," : "") + elements[k];
  return s + "}";
}

inline VertexId support_id(const std::vector<long>& elements) {
  std::vector<std::string> s;
  for (long x : elements) s.push_back(std::to_string(x));
  return support_id(s);
}

// Dense copy of an operator for element-wise oracles.
inline std::vector<std::vector<GaussianRational>> to_dense(const SparseOperator& op) {
  std::vector<std::vector<GaussianRational>> m(op.dim(), std::vector<GaussianRational>(op.dim()));
  for (std::size_t r = 0; r < op.dim(); ++r) {
    for (const auto& e : op.row(r)) m[r][e.col] = e.value;
  }
  return m;
}

}  // namespace adjspec::testing
