#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adjspec {

// Vertex identifiers are opaque strings. Inside a graph every vertex also has
// a dense index; indices follow lexicographic order of the identifiers, which
// fixes the row/column order of every operator and the scan order of every
// check.
using VertexId = std::string;

// (father, son): the father precedes the son, u < v.
using Arc = std::pair<VertexId, VertexId>;

using Path = std::vector<VertexId>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Simple directed graph: no loops, no multi-arcs, never both u<v and v<u.
///
/// A finite graph may be a window cut out of an infinite one. Vertices whose
/// neighbourhood was truncated by the cut carry a boundary flag. Instances are
/// immutable and cheap to copy (the adjacency data is shared).
class DirectedGraph {
 public:
  DirectedGraph();

  /// Validates and builds. Throws Error with LoopArc, DuplicateArc,
  /// SymmetricArcPair, UnknownVertex or DuplicateVertex naming the offender.
  static DirectedGraph build(std::vector<VertexId> vertices, const std::vector<Arc>& arcs,
                             const std::vector<VertexId>& boundary = {});

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::size_t arc_count() const;

  const std::vector<VertexId>& vertices() const;
  const VertexId& id(std::size_t v) const;
  std::optional<std::size_t> find(std::string_view id) const;
  // Throws UnknownVertex.
  std::size_t index_of(std::string_view id) const;

  std::span<const std::size_t> fathers(std::size_t v) const;
  std::span<const std::size_t> sons(std::size_t v) const;
  std::span<const std::size_t> neighbors(std::size_t v) const;

  bool precedes(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  bool is_boundary(std::size_t v) const;
  bool has_boundary() const;
  std::vector<std::size_t> boundary() const;

  // All arcs as (father, son) index pairs, ordered by father then son.
  std::vector<std::pair<std::size_t, std::size_t>> arc_indices() const;

 private:
  struct Data;
  explicit DirectedGraph(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

struct NeighborSplit {
  std::vector<VertexId> fathers;
  std::vector<VertexId> sons;
};

NeighborSplit neighbor_split(const DirectedGraph& g, std::string_view x);

/// #forward steps minus #backward steps. Throws InvalidPath if two
/// consecutive vertices are not adjacent, UnknownVertex for foreign ids.
long path_index(const DirectedGraph& g, const Path& path);
long path_index(const DirectedGraph& g, std::span<const std::size_t> path);

// Undirected BFS distances from one source; kUnreachable across components.
std::vector<std::size_t> bfs_distances(const DirectedGraph& g, std::size_t source);

// Throws Disconnected when x and y lie in different components.
std::size_t distance(const DirectedGraph& g, std::string_view x, std::string_view y);

std::vector<std::vector<VertexId>> connected_components(const DirectedGraph& g);
std::vector<std::vector<std::size_t>> component_indices(const DirectedGraph& g);

std::size_t degree(const DirectedGraph& g, std::string_view x);

struct Window {
  DirectedGraph graph;
  unsigned interior_radius = 0;
  // False when the arcs are only a representative orientation of an
  // undirected graph; admissibility then has to consider every orientation.
  bool oriented = true;
};

// Distance from each vertex to the nearest boundary vertex (kUnreachable when
// none is reachable).
std::vector<std::size_t> boundary_distances(const DirectedGraph& g);

// Sorted indices of vertices at distance >= radius from every boundary vertex.
std::vector<std::size_t> interior_indices(const DirectedGraph& g, unsigned radius);
std::vector<bool> interior_mask(const DirectedGraph& g, unsigned radius);

std::vector<VertexId> interior(const Window& w);

}  // namespace adjspec
