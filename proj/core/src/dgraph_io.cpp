#include "adjspec/dgraph_io.hpp"

#include <iterator>

#include "adjspec/errors.hpp"

namespace adjspec {

namespace {

using nlohmann::json;

VertexId label(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(Errc::ParseError, "vertex labels must be strings or integers, got " + v.dump());
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw Error(Errc::ParseError, std::string("missing field \"") + name + "\"");
  return *it;
}

const json& array_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw Error(Errc::ParseError, std::string("field \"") + name + "\" must be an array");
  return v;
}

}  // namespace

GraphFile parse_dgraph(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(Errc::ParseError, "input is not valid JSON");
  if (!doc.is_object()) throw Error(Errc::ParseError, "top level must be an object");
  const json& format = field(doc, "format");
  if (format != "dgraph-v1") throw Error(Errc::ParseError, "unsupported format " + format.dump());

  std::vector<VertexId> vertices;
  for (const auto& v : array_field(doc, "vertices")) vertices.push_back(label(v));
  std::vector<Arc> arcs;
  for (const auto& a : array_field(doc, "arcs")) {
    if (!a.is_array() || a.size() != 2) throw Error(Errc::ParseError, "arc must be a [father, son] pair: " + a.dump());
    arcs.emplace_back(label(a[0]), label(a[1]));
  }
  std::vector<VertexId> boundary;
  if (doc.contains("boundary")) {
    for (const auto& v : array_field(doc, "boundary")) boundary.push_back(label(v));
  }

  GraphFile out;
  out.window.graph = DirectedGraph::build(std::move(vertices), arcs, boundary);
  if (doc.contains("oriented")) {
    if (!doc["oriented"].is_boolean()) throw Error(Errc::ParseError, "\"oriented\" must be a boolean");
    out.window.oriented = doc["oriented"].get<bool>();
  }
  if (doc.contains("phi")) {
    const json& phi = doc["phi"];
    if (!phi.is_object()) throw Error(Errc::ParseError, "\"phi\" must be an object");
    ScalarFunction f;
    for (auto it = phi.begin(); it != phi.end(); ++it) {
      if (!out.window.graph.find(it.key())) throw Error(Errc::UnknownVertex, "phi names unknown vertex " + it.key());
      const json& value = it.value();
      if (value.is_string()) {
        f.set(it.key(), parse_rational(value.get<std::string>()));
      } else if (value.is_number_integer()) {
        f.set(it.key(), Rational(value.get<long>()));
      } else {
        throw Error(Errc::ParseError, "phi values must be rational strings or integers");
      }
    }
    out.phi = std::move(f);
  }
  return out;
}

GraphFile read_dgraph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_dgraph(text);
}

json to_dgraph_json(const Window& w, const ScalarFunction* phi) {
  const DirectedGraph& g = w.graph;
  json doc = json::object();
  doc["format"] = "dgraph-v1";
  doc["vertices"] = g.vertices();
  json arcs = json::array();
  for (const auto& [u, v] : g.arc_indices()) arcs.push_back({g.id(u), g.id(v)});
  doc["arcs"] = std::move(arcs);
  json boundary = json::array();
  for (std::size_t v : g.boundary()) boundary.push_back(g.id(v));
  doc["boundary"] = std::move(boundary);
  if (!w.oriented) doc["oriented"] = false;
  if (phi != nullptr) {
    json values = json::object();
    for (const auto& v : g.vertices()) values[v] = to_string(phi->at(v));
    doc["phi"] = std::move(values);
  }
  return doc;
}

std::string write_dgraph(const Window& w, const ScalarFunction* phi) { return to_dgraph_json(w, phi).dump(2) + "\n"; }

}  // namespace adjspec
