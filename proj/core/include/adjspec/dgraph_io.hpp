#pragma once

#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "adjspec/graph.hpp"
#include "adjspec/structure.hpp"

namespace adjspec {

/// dgraph-v1:
///   {"format":"dgraph-v1", "vertices":[...], "arcs":[[father,son],...],
///    "boundary":[...], "phi":{"v":"p/q",...}, "oriented":false}
/// "boundary", "phi" and "oriented" are optional. Vertex labels may be
/// strings or integers; integers are read as their decimal text.
struct GraphFile {
  Window window;
  std::optional<ScalarFunction> phi;
};

// Throws ParseError for malformed JSON or schema violations, and the graph
// validation errors of DirectedGraph::build.
GraphFile parse_dgraph(const std::string& text);
GraphFile read_dgraph(std::istream& in);

nlohmann::json to_dgraph_json(const Window& w, const ScalarFunction* phi = nullptr);
// Two-space indented, trailing newline.
std::string write_dgraph(const Window& w, const ScalarFunction* phi = nullptr);

}  // namespace adjspec
