#include "adjspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "adjspec/errors.hpp"

namespace adjspec {

struct DirectedGraph::Data {
  std::vector<VertexId> ids;
  std::unordered_map<std::string_view, std::size_t> index;
  std::vector<std::vector<std::size_t>> fathers;
  std::vector<std::vector<std::size_t>> sons;
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<bool> boundary;
  std::size_t arc_count = 0;
  std::size_t max_degree = 0;
};

DirectedGraph::DirectedGraph() : data_(std::make_shared<Data>()) {}

DirectedGraph::DirectedGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

namespace {

std::string describe(const Arc& arc) { return "(" + arc.first + ", " + arc.second + ")"; }

}  // namespace

DirectedGraph DirectedGraph::build(std::vector<VertexId> vertices, const std::vector<Arc>& arcs,
                                   const std::vector<VertexId>& boundary) {
  auto data = std::make_shared<Data>();
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw Error(Errc::DuplicateVertex, "vertex \"" + *dup + "\" declared twice");
  }
  data->ids = std::move(vertices);
  const std::size_t n = data->ids.size();
  data->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data->index.emplace(data->ids[i], i);

  auto lookup = [&](const VertexId& v, const Arc& arc) {
    auto it = data->index.find(v);
    if (it == data->index.end()) {
      throw Error(Errc::UnknownVertex, "arc " + describe(arc) + " references undeclared vertex \"" + v + "\"");
    }
    return it->second;
  };

  data->fathers.resize(n);
  data->sons.resize(n);
  for (const Arc& arc : arcs) {
    const std::size_t u = lookup(arc.first, arc);
    const std::size_t v = lookup(arc.second, arc);
    if (u == v) throw Error(Errc::LoopArc, "arc " + describe(arc) + " is a loop");
    data->sons[u].push_back(v);
    data->fathers[v].push_back(u);
  }

  data->neighbors.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& f = data->fathers[v];
    auto& s = data->sons[v];
    std::sort(f.begin(), f.end());
    std::sort(s.begin(), s.end());
    if (auto dup = std::adjacent_find(s.begin(), s.end()); dup != s.end()) {
      throw Error(Errc::DuplicateArc, "arc " + describe({data->ids[v], data->ids[*dup]}) + " listed twice");
    }
    std::vector<std::size_t> common;
    std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(common));
    if (!common.empty()) {
      const std::size_t w = common.front();
      throw Error(Errc::SymmetricArcPair, "arcs " + describe({data->ids[v], data->ids[w]}) + " and " +
                                              describe({data->ids[w], data->ids[v]}) + " both present");
    }
    auto& nb = data->neighbors[v];
    nb.reserve(f.size() + s.size());
    std::merge(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(nb));
    data->arc_count += s.size();
    data->max_degree = std::max(data->max_degree, nb.size());
  }

  data->boundary.assign(n, false);
  for (const VertexId& b : boundary) {
    auto it = data->index.find(b);
    if (it == data->index.end()) {
      throw Error(Errc::UnknownVertex, "boundary vertex \"" + b + "\" is not declared");
    }
    data->boundary[it->second] = true;
  }
  return DirectedGraph(std::move(data));
}

std::size_t DirectedGraph::size() const { return data_->ids.size(); }
std::size_t DirectedGraph::arc_count() const { return data_->arc_count; }
const std::vector<VertexId>& DirectedGraph::vertices() const { return data_->ids; }
const VertexId& DirectedGraph::id(std::size_t v) const { return data_->ids.at(v); }

std::optional<std::size_t> DirectedGraph::find(std::string_view id) const {
  auto it = data_->index.find(id);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t DirectedGraph::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw Error(Errc::UnknownVertex, "vertex \"" + std::string(id) + "\" is not in the graph");
  return *found;
}

std::span<const std::size_t> DirectedGraph::fathers(std::size_t v) const { return data_->fathers[v]; }
std::span<const std::size_t> DirectedGraph::sons(std::size_t v) const { return data_->sons[v]; }
std::span<const std::size_t> DirectedGraph::neighbors(std::size_t v) const { return data_->neighbors[v]; }

bool DirectedGraph::precedes(std::size_t u, std::size_t v) const {
  const auto& s = data_->sons[u];
  return std::binary_search(s.begin(), s.end(), v);
}

bool DirectedGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = data_->neighbors[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t DirectedGraph::max_degree() const { return data_->max_degree; }
bool DirectedGraph::is_boundary(std::size_t v) const { return data_->boundary[v]; }

bool DirectedGraph::has_boundary() const {
  return std::find(data_->boundary.begin(), data_->boundary.end(), true) != data_->boundary.end();
}

std::vector<std::size_t> DirectedGraph::boundary() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (data_->boundary[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DirectedGraph::arc_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(arc_count());
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : data_->sons[u]) out.emplace_back(u, v);
  }
  return out;
}

NeighborSplit neighbor_split(const DirectedGraph& g, std::string_view x) {
  const std::size_t v = g.index_of(x);
  NeighborSplit split;
  for (std::size_t f : g.fathers(v)) split.fathers.push_back(g.id(f));
  for (std::size_t s : g.sons(v)) split.sons.push_back(g.id(s));
  return split;
}

long path_index(const DirectedGraph& g, std::span<const std::size_t> path) {
  long index = 0;
  for (std::size_t j = 1; j < path.size(); ++j) {
    const std::size_t a = path[j - 1];
    const std::size_t b = path[j];
    if (g.precedes(a, b)) {
      ++index;
    } else if (g.precedes(b, a)) {
      --index;
    } else {
      throw Error(Errc::InvalidPath, "step " + g.id(a) + " -> " + g.id(b) + " is not an edge");
    }
  }
  return index;
}

long path_index(const DirectedGraph& g, const Path& path) {
  std::vector<std::size_t> indices;
  indices.reserve(path.size());
  for (const VertexId& v : path) indices.push_back(g.index_of(v));
  return path_index(g, indices);
}

std::vector<std::size_t> bfs_distances(const DirectedGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const DirectedGraph& g, std::string_view x, std::string_view y) {
  const std::size_t a = g.index_of(x);
  const std::size_t b = g.index_of(y);
  const std::size_t d = bfs_distances(g, a)[b];
  if (d == kUnreachable) {
    throw Error(Errc::Disconnected, std::string(x) + " and " + std::string(y) + " lie in different components");
  }
  return d;
}

std::vector<std::vector<std::size_t>> component_indices(const DirectedGraph& g) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<std::vector<VertexId>> connected_components(const DirectedGraph& g) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& comp : component_indices(g)) {
    auto& ids = out.emplace_back();
    for (std::size_t v : comp) ids.push_back(g.id(v));
  }
  return out;
}

std::size_t degree(const DirectedGraph& g, std::string_view x) { return g.degree(g.index_of(x)); }

std::vector<std::size_t> boundary_distances(const DirectedGraph& g) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<std::size_t> queue;
  for (std::size_t b : g.boundary()) {
    dist[b] = 0;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<bool> interior_mask(const DirectedGraph& g, unsigned radius) {
  std::vector<bool> mask(g.size(), true);
  if (radius == 0) return mask;
  const auto dist = boundary_distances(g);
  for (std::size_t v = 0; v < g.size(); ++v) mask[v] = dist[v] >= radius;
  return mask;
}

std::vector<std::size_t> interior_indices(const DirectedGraph& g, unsigned radius) {
  const auto mask = interior_mask(g, radius);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> interior(const Window& w) {
  std::vector<VertexId> out;
  for (std::size_t v : interior_indices(w.graph, w.interior_radius)) out.push_back(w.graph.id(v));
  return out;
}

}  // namespace adjspec
