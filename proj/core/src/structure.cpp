#include "adjspec/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "adjspec/errors.hpp"

namespace adjspec {

namespace {

// Calls fn(z) for every common neighbour of x and y (both spans sorted).
template <typename Fn>
void for_common(std::span<const std::size_t> a, std::span<const std::size_t> b, Fn&& fn) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

std::size_t count_common(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t n = 0;
  for_common(a, b, [&](std::size_t) { ++n; });
  return n;
}

}  // namespace

ScalarFunction ScalarFunction::constant(const DirectedGraph& g, const Rational& value) {
  ScalarFunction f;
  for (const auto& v : g.vertices()) f.set(v, value);
  return f;
}

ScalarFunction ScalarFunction::from_values(const DirectedGraph& g, std::span<const Rational> values) {
  if (values.size() != g.size()) {
    throw Error(Errc::DimensionMismatch, std::to_string(values.size()) + " values for " +
                                             std::to_string(g.size()) + " vertices");
  }
  ScalarFunction f;
  for (std::size_t v = 0; v < g.size(); ++v) f.set(g.id(v), values[v]);
  return f;
}

const Rational& ScalarFunction::at(std::string_view v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw Error(Errc::MissingValue, "no value at vertex " + std::string(v));
  return it->second;
}

std::vector<Rational> ScalarFunction::values_on(const DirectedGraph& g) const {
  std::vector<Rational> out;
  out.reserve(g.size());
  for (const auto& v : g.vertices()) out.push_back(at(v));
  return out;
}

Rational lipschitz_constant(const DirectedGraph& g, std::span<const Rational> phi) {
  Rational c = 0;
  for (const auto& [u, v] : g.arc_indices()) {
    Rational d = abs(Rational(phi[v] - phi[u]));
    if (d > c) c = d;
  }
  return c;
}

bool is_position_function(const DirectedGraph& g, std::span<const Rational> phi) {
  for (const auto& [u, v] : g.arc_indices()) {
    if (phi[v] - phi[u] != 1) return false;
  }
  return true;
}

UnivocityResult synthesize_position_function(const Window& w, std::optional<std::string_view> anchor) {
  const DirectedGraph& g = w.graph;
  if (g.empty()) throw Error(Errc::EmptyGraph, "cannot synthesize a position function on an empty graph");

  const std::size_t n = g.size();
  std::vector<long> value(n, 0);
  std::vector<std::size_t> parent(n, kUnreachable);
  std::vector<std::size_t> depth(n, 0);
  UnivocityResult result;

  std::vector<std::size_t> roots;
  if (anchor) roots.push_back(g.index_of(*anchor));
  for (std::size_t v = 0; v < n; ++v) roots.push_back(v);
  for (std::size_t root : roots) {
    if (parent[root] != kUnreachable) continue;
    parent[root] = root;
    result.anchors.push_back(g.id(root));
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : g.neighbors(u)) {
        const long expected = value[u] + (g.precedes(u, v) ? 1 : -1);
        if (parent[v] == kUnreachable) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          value[v] = expected;
          queue.push_back(v);
          continue;
        }
        if (value[v] == expected) continue;

        // Closed path: lca -> ... -> u -> v -> ... -> lca along tree edges.
        std::vector<std::size_t> up_u{u}, up_v{v};
        std::size_t a = u, b = v;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
        while (a != b) {
          up_u.push_back(a = parent[a]);
          up_v.push_back(b = parent[b]);
        }
        std::vector<std::size_t> cycle(up_u.rbegin(), up_u.rend());
        cycle.insert(cycle.end(), up_v.begin(), up_v.end());
        long index = path_index(g, cycle);
        if (index < 0) {
          std::reverse(cycle.begin(), cycle.end());
          index = -index;
        }
        result.univoque = false;
        result.witness_index = index;
        for (std::size_t k : cycle) result.witness.push_back(g.id(k));
        result.anchors.clear();
        return result;
      }
    }
  }

  result.univoque = true;
  for (std::size_t v = 0; v < n; ++v) result.phi.set(g.id(v), Rational(value[v]));
  return result;
}

UniformityWitness uniformity_counts(const DirectedGraph& g, std::size_t x, std::size_t y) {
  return {g.id(x), g.id(y), count_common(g.fathers(x), g.fathers(y)), count_common(g.sons(x), g.sons(y))};
}

std::vector<std::pair<std::size_t, std::size_t>> local_pairs(const DirectedGraph& g, const std::vector<bool>& mask) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> near;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!mask[x]) continue;
    near.clear();
    near.push_back(x);
    for (std::size_t z : g.neighbors(x)) {
      near.push_back(z);
      for (std::size_t y : g.neighbors(z)) near.push_back(y);
    }
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    for (std::size_t y : near) {
      if (y >= x && mask[y]) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

UniformityResult check_uniformity(const DirectedGraph& g, unsigned radius) {
  UniformityResult result;
  result.radius = radius;
  for (const auto& [x, y] : local_pairs(g, interior_mask(g, radius))) {
    ++result.pairs_checked;
    UniformityWitness counts = uniformity_counts(g, x, y);
    if (counts.common_fathers != counts.common_sons) {
      result.uniform = false;
      result.witness = std::move(counts);
      return result;
    }
  }
  return result;
}

UniformityResult check_uniformity(const Window& w) {
  return check_uniformity(w.graph, std::max(w.interior_radius, kUniformityRadius));
}

AdmissibilityResult check_admissible(const Window& w) {
  AdmissibilityResult result;
  result.univocity = synthesize_position_function(w);
  result.uniformity = check_uniformity(w);
  result.admissible = result.univocity.univoque && result.uniformity.uniform;
  return result;
}

OrientationSearchResult check_admissible_any_orientation(const Window& w, std::size_t arc_cap,
                                                         bool parity_shortcut) {
  const DirectedGraph& g = w.graph;
  OrientationSearchResult result;
  const auto mask = interior_mask(g, std::max(w.interior_radius, kUniformityRadius));

  if (parity_shortcut) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (mask[v] && g.degree(v) % 2 == 1) {
        result.odd_degree_vertex = g.id(v);
        result.exhausted = true;
        return result;
      }
    }
  }

  const auto edges = g.arc_indices();
  if (edges.size() > arc_cap) return result;

  // incident[v] = (neighbour, edge id, +1 if v is the stored father).
  struct Incidence {
    std::size_t other;
    std::size_t edge;
    int sign;
  };
  std::vector<std::vector<Incidence>> incident(g.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back({edges[e].second, e, +1});
    incident[edges[e].second].push_back({edges[e].first, e, -1});
  }
  auto edge_between = [&](std::size_t a, std::size_t b) -> std::pair<std::size_t, int> {
    for (const auto& inc : incident[a]) {
      if (inc.other == b) return {inc.edge, inc.sign};
    }
    return {kUnreachable, 0};
  };

  // For each local pair: the common neighbours as (edge to x, sign, edge to y, sign).
  struct Common {
    std::size_t ex;
    int sx;
    std::size_t ey;
    int sy;
  };
  std::vector<std::vector<Common>> pair_commons;
  for (const auto& [x, y] : local_pairs(g, mask)) {
    std::vector<Common> commons;
    for_common(g.neighbors(x), g.neighbors(y), [&](std::size_t z) {
      auto [ex, sx] = edge_between(z, x);
      auto [ey, sy] = edge_between(z, y);
      commons.push_back({ex, sx, ey, sy});
    });
    if (!commons.empty()) pair_commons.push_back(std::move(commons));
  }

  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<long> value(g.size());
  std::vector<char> seen(g.size());
  std::vector<std::size_t> queue;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ++result.orientations_tried;
    // z < x along edge e with stored sign s (s=+1: z stored father) unless flipped.
    auto z_before = [&](std::size_t e, int s) { return ((bits >> e) & 1U) ? s < 0 : s > 0; };

    bool ok = true;
    for (const auto& commons : pair_commons) {
      long balance = 0;
      for (const auto& c : commons) {
        const bool father_x = z_before(c.ex, c.sx);
        const bool father_y = z_before(c.ey, c.sy);
        if (father_x && father_y) ++balance;
        if (!father_x && !father_y) --balance;
      }
      if (balance != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t root = 0; root < g.size() && ok; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      value[root] = 0;
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size() && ok; ++head) {
        const std::size_t u = queue[head];
        for (const auto& inc : incident[u]) {
          // u before other iff stored sign +1 and not flipped, or -1 and flipped.
          const bool u_first = ((bits >> inc.edge) & 1U) ? inc.sign < 0 : inc.sign > 0;
          const long expected = value[u] + (u_first ? 1 : -1);
          if (!seen[inc.other]) {
            seen[inc.other] = 1;
            value[inc.other] = expected;
            queue.push_back(inc.other);
          } else if (value[inc.other] != expected) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;

    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if ((bits >> e) & 1U) std::swap(a, b);
      arcs.emplace_back(g.id(a), g.id(b));
    }
    std::vector<VertexId> boundary;
    for (std::size_t v : g.boundary()) boundary.push_back(g.id(v));
    result.admissible = true;
    result.exhausted = true;
    result.orientation = DirectedGraph::build(g.vertices(), arcs, boundary);
    return result;
  }
  result.exhausted = true;
  return result;
}

Rational semi_sum(const DirectedGraph& g, std::span<const Rational> phi, std::size_t x, std::size_t y) {
  Rational sum = 0;
  const Rational base = phi[x] + phi[y];
  for_common(g.neighbors(x), g.neighbors(y), [&](std::size_t z) {
    sum += 2 * phi[z];
    sum -= base;
  });
  return sum;
}

Rational full_sum(const DirectedGraph& g, std::span<const Rational> phi, std::size_t x, std::size_t y) {
  Rational sum = 0;
  for_common(g.neighbors(x), g.neighbors(y), [&](std::size_t z) {
    Rational a = phi[z] - phi[x];
    Rational b = phi[z] - phi[y];
    sum += a * b * (a + b);
  });
  return sum;
}

namespace {

AdaptednessReport evaluate(const DirectedGraph& g, const ScalarFunction& phi, unsigned radius, bool with_full) {
  const std::vector<Rational> values = phi.values_on(g);
  AdaptednessReport report;
  report.radius = radius;
  report.lipschitz = lipschitz_constant(g, values);
  report.semi.evaluated = true;
  report.full.evaluated = with_full;

  for (const auto& [x, y] : local_pairs(g, interior_mask(g, radius))) {
    ++report.semi.pairs_checked;
    Rational s = semi_sum(g, values, x, y);
    if (sgn(s) != 0) report.semi.violations.push_back({g.id(x), g.id(y), std::move(s)});
    if (!with_full) continue;
    ++report.full.pairs_checked;
    Rational f = full_sum(g, values, x, y);
    if (sgn(f) != 0) report.full.violations.push_back({g.id(x), g.id(y), std::move(f)});
  }
  report.semi.pass = report.semi.violations.empty();
  report.full.pass = report.full.violations.empty();
  return report;
}

}  // namespace

AdaptednessReport verify_semi_adapted(const DirectedGraph& g, const ScalarFunction& phi, unsigned radius) {
  return evaluate(g, phi, radius, false);
}

AdaptednessReport verify_adapted(const DirectedGraph& g, const ScalarFunction& phi, unsigned radius) {
  return evaluate(g, phi, radius, true);
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> bipartition(const DirectedGraph& g,
                                                                    const ScalarFunction& phi) {
  const std::vector<Rational> values = phi.values_on(g);
  for (const auto& [u, v] : g.arc_indices()) {
    if (values[v] - values[u] != 1) {
      throw Error(Errc::NotPositionFunction, "arc (" + g.id(u) + ", " + g.id(v) + ") has increment " +
                                                 to_string(Rational(values[v] - values[u])));
    }
  }
  std::pair<std::vector<VertexId>, std::vector<VertexId>> parts;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (values[v].get_den() != 1) {
      throw Error(Errc::NotPositionFunction, "non-integer value at " + g.id(v));
    }
    const bool odd = mpz_odd_p(values[v].get_num_mpz_t()) != 0;
    (odd ? parts.first : parts.second).push_back(g.id(v));
  }
  return parts;
}

Rational neighborhood_mean(const ScalarFunction& phi, const std::vector<VertexId>& z) {
  if (z.empty()) throw Error(Errc::EmptySet, "mean over an empty vertex set");
  Rational sum = 0;
  for (const auto& v : z) sum += phi.at(v);
  return sum / Rational(static_cast<long>(z.size()));
}

LinearSystem semi_adapted_system(const DirectedGraph& g, unsigned radius) {
  LinearSystem system(g.size());
  for (const auto& [x, y] : local_pairs(g, interior_mask(g, radius))) {
    std::vector<LinearSystem::Term> terms;
    long common = 0;
    for_common(g.neighbors(x), g.neighbors(y), [&](std::size_t z) {
      terms.emplace_back(z, Rational(2));
      ++common;
    });
    if (common == 0) continue;
    terms.emplace_back(x, Rational(-common));
    terms.emplace_back(y, Rational(-common));
    system.add_row(std::move(terms));
  }
  return system;
}

}  // namespace adjspec
