#include "adjspec/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "adjspec/errors.hpp"
#include "adjspec/operators.hpp"

namespace adjspec {

namespace {

std::string tuple_id(const std::vector<long>& x) {
  if (x.size() == 1) return std::to_string(x[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(x[j]);
  }
  return s + ")";
}

// Inverse of tuple_id; nullopt when the text is not a tuple of integers.
std::optional<std::vector<long>> parse_tuple(std::string_view s) {
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
  }
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string part(s.substr(start, end - start));
    char* stop = nullptr;
    if (part.empty()) return std::nullopt;
    const long v = std::strtol(part.c_str(), &stop, 10);
    if (*stop != '\0') return std::nullopt;
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadParams, what);
}

Family finish(std::string name, std::vector<std::pair<std::string, std::string>> params, std::vector<VertexId> vertices,
              const std::vector<Arc>& arcs, const std::vector<VertexId>& boundary,
              const std::map<VertexId, Rational>& phi, bool oriented) {
  Family f;
  f.name = std::move(name);
  f.params = std::move(params);
  f.window.graph = DirectedGraph::build(std::move(vertices), arcs, boundary);
  f.window.oriented = oriented;
  for (const auto& [v, value] : phi) f.phi.set(v, value);
  f.position = oriented && is_position_function(f.window.graph, f.phi.values_on(f.window.graph));
  return f;
}

// Enumerates [-W, W]^n in lexicographic coordinate order.
void for_each_point(unsigned n, long w, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> x(n, -w);
  while (true) {
    fn(x);
    std::size_t j = n;
    while (j > 0 && x[j - 1] == w) x[--j] = -w;
    if (j == 0) return;
    ++x[j - 1];
  }
}

}  // namespace

std::string Family::descriptor() const {
  std::string s = name + "(";
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) s += ',';
    s += params[k].first + "=" + params[k].second;
  }
  return s + ")";
}

std::size_t max_vertices_from_env() {
  const char* text = std::getenv("SPECTRA_MAX_VERTICES");
  if (text == nullptr || *text == '\0') return kDefaultMaxVertices;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0) throw Error(Errc::BadParams, std::string("bad SPECTRA_MAX_VERTICES value: ") + text);
  return static_cast<std::size_t>(v);
}

Family gen_lattice(unsigned n, unsigned width) {
  require(n >= 1, "lattice dimension must be at least 1");
  require(width >= 1, "lattice half-width must be at least 1");
  const long w = width;
  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  for_each_point(n, w, [&](const std::vector<long>& x) {
    const VertexId id = tuple_id(x);
    vertices.push_back(id);
    phi[id] = std::accumulate(x.begin(), x.end(), 0L);
    bool on_face = false;
    for (std::size_t j = 0; j < n; ++j) {
      on_face = on_face || x[j] == w || x[j] == -w;
      if (x[j] < w) {
        std::vector<long> y = x;
        ++y[j];
        arcs.emplace_back(id, tuple_id(y));
      }
    }
    if (on_face) boundary.push_back(id);
  });
  return finish("lattice", {{"n", std::to_string(n)}, {"W", std::to_string(width)}}, std::move(vertices), arcs,
                boundary, phi, true);
}

Family gen_half_plane(unsigned width) {
  require(width >= 2, "half-plane half-width must be at least 2");
  const long w = width;
  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  for_each_point(2, w, [&](const std::vector<long>& x) {
    if (x[0] >= x[1]) return;
    const VertexId id = tuple_id(x);
    vertices.push_back(id);
    phi[id] = x[0] + x[1];
    if (x[0] == -w || x[0] == w || x[1] == -w || x[1] == w) boundary.push_back(id);
    if (x[0] + 1 < x[1]) arcs.emplace_back(id, tuple_id({x[0] + 1, x[1]}));
    if (x[1] < w) arcs.emplace_back(id, tuple_id({x[0], x[1] + 1}));
  });
  return finish("halfPlane", {{"W", std::to_string(width)}}, std::move(vertices), arcs, boundary, phi, true);
}

Family gen_ladder_rungs(unsigned width) {
  require(width >= 2, "ladder half-width must be at least 2");
  const long w = width;
  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  for (long n = -w; n <= w; ++n) {
    for (long s = 0; s < 2; ++s) {
      const VertexId id = tuple_id({n, s});
      vertices.push_back(id);
      phi[id] = n;
      if (n == -w || n == w) boundary.push_back(id);
      if (n < w) arcs.emplace_back(id, tuple_id({n + 1, s}));
    }
    arcs.emplace_back(tuple_id({n, 0}), tuple_id({n, 1}));
  }
  return finish("ladderRungs", {{"W", std::to_string(width)}}, std::move(vertices), arcs, boundary, phi, false);
}

Family gen_ladder_alt(unsigned width) {
  require(width >= 2, "ladder half-width must be at least 2");
  const long w = width;
  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  for (long n = -w; n <= w; ++n) {
    for (long s = 0; s < 2; ++s) {
      const VertexId id = tuple_id({n, s});
      vertices.push_back(id);
      phi[id] = n;
      if (n == -w || n == w) boundary.push_back(id);
      if (n < w) {
        arcs.emplace_back(id, tuple_id({n + 1, 0}));
        arcs.emplace_back(id, tuple_id({n + 1, 1}));
      }
    }
  }
  return finish("ladderAlt", {{"W", std::to_string(width)}}, std::move(vertices), arcs, boundary, phi, true);
}

Family d_product(const std::vector<Family>& factors, const std::vector<std::vector<int>>& d,
                 const std::vector<Rational>& c) {
  const std::size_t k = factors.size();
  if (k == 0) throw Error(Errc::ArityMismatch, "a D-product needs at least one factor");
  if (c.size() != k) {
    throw Error(Errc::ArityMismatch, std::to_string(c.size()) + " coefficients for " + std::to_string(k) + " factors");
  }
  if (d.empty()) throw Error(Errc::BadD, "D is empty");
  for (const auto& t : d) {
    if (t.size() != k) {
      throw Error(Errc::ArityMismatch, "D tuple of length " + std::to_string(t.size()) + " for " + std::to_string(k) +
                                           " factors");
    }
    if (std::any_of(t.begin(), t.end(), [](int v) { return v != 0 && v != 1; })) {
      throw Error(Errc::BadD, "D tuples must have 0/1 entries");
    }
    if (std::all_of(t.begin(), t.end(), [](int v) { return v == 0; })) {
      throw Error(Errc::BadD, "D contains the all-zeros tuple");
    }
  }

  std::vector<const DirectedGraph*> g;
  std::vector<std::vector<Rational>> phis;
  std::size_t total = 1;
  for (const auto& f : factors) {
    g.push_back(&f.window.graph);
    phis.push_back(f.phi.values_on(f.window.graph));
    total *= f.window.graph.size();
  }
  require(total > 0, "a D-product factor is empty");
  if (total > max_vertices_from_env()) {
    throw Error(Errc::ResourceCap, "D-product would have " + std::to_string(total) + " vertices");
  }

  auto id_of = [&](const std::vector<std::size_t>& x) {
    std::string s = "(";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += '|';
      s += g[j]->id(x[j]);
    }
    return s + ")";
  };

  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  std::map<VertexId, std::vector<std::size_t>> coords;
  std::vector<std::size_t> x(k, 0);
  for (std::size_t count = 0; count < total; ++count) {
    const VertexId id = id_of(x);
    vertices.push_back(id);
    coords[id] = x;
    Rational value = 0;
    bool on_boundary = false;
    for (std::size_t j = 0; j < k; ++j) {
      value += c[j] * phis[j][x[j]];
      on_boundary = on_boundary || g[j]->is_boundary(x[j]);
    }
    phi[id] = value;
    if (on_boundary) boundary.push_back(id);

    for (const auto& t : d) {
      const std::size_t lead = static_cast<std::size_t>(std::find(t.begin(), t.end(), 1) - t.begin());
      // Choices per coordinate: sons along the leading one, any neighbour on
      // the other active ones, fixed elsewhere.
      std::vector<std::vector<std::size_t>> choices(k);
      bool possible = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (!t[j]) {
          choices[j] = {x[j]};
        } else {
          auto span = j == lead ? g[j]->sons(x[j]) : g[j]->neighbors(x[j]);
          choices[j].assign(span.begin(), span.end());
        }
        possible = possible && !choices[j].empty();
      }
      if (!possible) continue;
      std::vector<std::size_t> pick(k, 0), y(k);
      while (true) {
        for (std::size_t j = 0; j < k; ++j) y[j] = choices[j][pick[j]];
        arcs.emplace_back(id, id_of(y));
        std::size_t j = k;
        while (j > 0 && pick[j - 1] + 1 == choices[j - 1].size()) pick[--j] = 0;
        if (j == 0) break;
        ++pick[j - 1];
      }
    }

    std::size_t j = k;
    while (j > 0 && x[j - 1] + 1 == g[j - 1]->size()) x[--j] = 0;
    if (j > 0) ++x[j - 1];
  }

  std::string dtext, ctext;
  for (const auto& t : d) {
    if (!dtext.empty()) dtext += ';';
    for (int v : t) dtext += static_cast<char>('0' + v);
  }
  for (const auto& v : c) {
    if (!ctext.empty()) ctext += ';';
    ctext += to_string(v);
  }
  std::vector<std::pair<std::string, std::string>> params;
  for (std::size_t j = 0; j < k; ++j) params.emplace_back("factor" + std::to_string(j + 1), factors[j].descriptor());
  params.emplace_back("D", dtext);
  params.emplace_back("c", ctext);

  const bool oriented = std::all_of(factors.begin(), factors.end(), [](const Family& f) { return f.window.oriented; });
  Family f = finish("dProduct", std::move(params), std::move(vertices), arcs, boundary, phi, oriented);
  f.d = d;
  for (const auto& v : f.window.graph.vertices()) f.coordinates.push_back(coords[v]);
  return f;
}

TensorCheckResult tensor_assembly_check(const Family& product, const std::vector<Family>& factors) {
  if (product.coordinates.size() != product.window.graph.size() || product.d.empty()) {
    throw Error(Errc::BadParams, "tensor assembly check needs a D-product");
  }
  const std::size_t k = factors.size();
  if (product.d.front().size() != k) throw Error(Errc::ArityMismatch, "factor count differs from the D tuples");

  SparseOperator rhs;
  for (const auto& t : product.d) {
    SparseOperator term;
    for (std::size_t j = 0; j < k; ++j) {
      const DirectedGraph& gj = factors[j].window.graph;
      SparseOperator m = t[j] ? assemble(gj, OperatorKind::H) : SparseOperator::identity(gj.size());
      term = j == 0 ? std::move(m) : kron(term, m);
    }
    rhs = rhs.dim() == 0 ? std::move(term) : rhs + term;
  }

  // Mixed-radix position of each product vertex in the Kronecker ordering.
  const DirectedGraph& g = product.window.graph;
  std::vector<std::size_t> flat(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) idx = idx * factors[j].window.graph.size() + product.coordinates[v][j];
    flat[v] = idx;
  }
  if (rhs.dim() != g.size()) throw Error(Errc::DimensionMismatch, "factors do not match the product size");

  const SparseOperator h = assemble(g, OperatorKind::H);
  TensorCheckResult result;
  for (std::size_t x : interior_indices(g, 1)) {
    ++result.rows_checked;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (h.at(x, y) == rhs.at(flat[x], flat[y])) continue;
      ++result.mismatches;
      if (!result.first_mismatch) result.first_mismatch.emplace(g.id(x), g.id(y));
    }
  }
  result.equal = result.mismatches == 0;
  return result;
}

Family gen_fock_layer(const Family& base, unsigned n, std::size_t max_vertices) {
  const DirectedGraph& bg = base.window.graph;
  require(n >= 1, "Fock layer needs N >= 1");
  require(base.window.oriented, "Fock layer needs a directed base graph");
  require(n <= bg.size(), "base window has fewer than N vertices");

  // C(|base|, N) with early exit once above the cap.
  Integer count = 1;
  for (unsigned j = 0; j < n; ++j) {
    count *= static_cast<unsigned long>(bg.size() - j);
    count /= static_cast<unsigned long>(j + 1);
  }
  if (count > static_cast<unsigned long>(max_vertices)) {
    throw Error(Errc::ResourceCap, "Fock layer would have " + count.get_str() + " vertices, above the cap of " +
                                       std::to_string(max_vertices));
  }

  const std::vector<Rational> base_phi = base.phi.values_on(bg);
  auto id_of = [&](const std::vector<std::size_t>& alpha) {
    std::string s = "{";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (j) s += ',';
      s += bg.id(alpha[j]);
    }
    return s + "}";
  };

  std::vector<VertexId> vertices, boundary;
  std::vector<Arc> arcs;
  std::map<VertexId, Rational> phi;
  std::vector<std::size_t> alpha(n);
  std::iota(alpha.begin(), alpha.end(), 0);
  const std::size_t m = bg.size();
  std::vector<std::size_t> beta;
  while (true) {
    const VertexId id = id_of(alpha);
    vertices.push_back(id);
    Rational value = 0;
    bool on_boundary = false;
    for (std::size_t x : alpha) {
      value += base_phi[x];
      on_boundary = on_boundary || bg.is_boundary(x);
    }
    phi[id] = value;
    if (on_boundary) boundary.push_back(id);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t y : bg.sons(alpha[j])) {
        if (std::binary_search(alpha.begin(), alpha.end(), y)) continue;
        beta = alpha;
        beta[j] = y;
        std::sort(beta.begin(), beta.end());
        arcs.emplace_back(id, id_of(beta));
      }
    }

    std::size_t j = n;
    while (j > 0 && alpha[j - 1] == m - n + (j - 1)) --j;
    if (j == 0) break;
    ++alpha[j - 1];
    for (std::size_t t = j; t < n; ++t) alpha[t] = alpha[t - 1] + 1;
  }
  return finish("fockLayer", {{"base", base.descriptor()}, {"N", std::to_string(n)}}, std::move(vertices), arcs,
                boundary, phi, true);
}

SparseOperator xy_block(const Family& layer) {
  SparseOperator h = GaussianRational(-2) * assemble(layer.window.graph, OperatorKind::H);
  h.set_symmetry(Symmetry::Hermitian);
  return h;
}

std::map<VertexId, VertexId> vertical_flip(const Family& ladder) {
  if (ladder.name != "ladderRungs" && ladder.name != "ladderAlt") {
    throw Error(Errc::BadParams, "vertical flip is defined for the ladder families only");
  }
  std::map<VertexId, VertexId> tau;
  for (const auto& v : ladder.window.graph.vertices()) {
    auto x = parse_tuple(v);
    if (!x || x->size() != 2) throw Error(Errc::BadParams, "unexpected ladder vertex " + v);
    tau[v] = tuple_id({(*x)[0], 1 - (*x)[1]});
  }
  return tau;
}

namespace {

// Elements of "{a,b,...}" where elements may themselves contain commas
// inside parentheses.
std::optional<std::vector<std::string>> split_support(std::string_view s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace

std::optional<UniformityWitness> canonical_lattice_witness(const Family& layer, const UniformityWitness& w) {
  if (layer.name != "fockLayer" || layer.params.empty() || layer.params.front().second.rfind("lattice(", 0) != 0) {
    return std::nullopt;
  }
  const auto a = split_support(w.x);
  const auto b = split_support(w.y);
  if (!a || !b) return std::nullopt;

  std::vector<std::vector<long>> pa, pb;
  for (const auto& e : *a) {
    auto t = parse_tuple(e);
    if (!t) return std::nullopt;
    pa.push_back(*t);
  }
  for (const auto& e : *b) {
    auto t = parse_tuple(e);
    if (!t) return std::nullopt;
    pb.push_back(*t);
  }
  const std::size_t dim = pa.front().size();
  std::vector<long> low(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    low[j] = pa.front()[j];
    for (const auto* set : {&pa, &pb}) {
      for (const auto& p : *set) low[j] = std::min(low[j], p[j]);
    }
  }
  auto translate = [&](std::vector<std::vector<long>> set) {
    std::vector<std::string> ids;
    for (auto& p : set) {
      for (std::size_t j = 0; j < dim; ++j) p[j] -= low[j];
      ids.push_back(tuple_id(p));
    }
    std::sort(ids.begin(), ids.end());
    std::string s = "{";
    for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + ids[k];
    return s + "}";
  };

  const DirectedGraph& g = layer.window.graph;
  const auto x = g.find(translate(pa));
  const auto y = g.find(translate(pb));
  if (!x || !y || g.is_boundary(*x) || g.is_boundary(*y)) return std::nullopt;
  UniformityWitness out = uniformity_counts(g, *x, *y);
  if (out.common_fathers == out.common_sons) return std::nullopt;
  return out;
}

}  // namespace adjspec
