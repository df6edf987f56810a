#include "adjspec/report.hpp"

#include <cmath>
#include <cstdio>

namespace adjspec {

using nlohmann::json;

namespace {

// Enough violations to locate a problem without bloating the report.
constexpr std::size_t kMaxListedViolations = 20;

json condition_json(const ConditionReport& c) {
  json out = {{"pass", c.pass}, {"pairs_checked", c.pairs_checked}};
  if (!c.evaluated) {
    out = {{"evaluated", false}};
    return out;
  }
  if (!c.pass) {
    const auto& first = c.violations.front();
    out["witness"] = {{"x", first.x}, {"y", first.y}, {"sum", rational_json(first.value)}};
    out["violation_count"] = c.violations.size();
    json list = json::array();
    for (std::size_t k = 0; k < c.violations.size() && k < kMaxListedViolations; ++k) {
      const auto& v = c.violations[k];
      list.push_back({{"x", v.x}, {"y", v.y}, {"sum", rational_json(v.value)}});
    }
    out["violations"] = std::move(list);
  }
  return out;
}

}  // namespace

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json rational_json(const Rational& q) { return to_string(q); }

json complex_json(const GaussianRational& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json to_json(const UnivocityResult& r) {
  json out = {{"pass", r.univoque}};
  if (r.univoque) {
    out["anchors"] = r.anchors;
  } else {
    out["witness"] = {{"closed_path", r.witness}, {"index", r.witness_index}};
  }
  return out;
}

json to_json(const UniformityResult& r) {
  json out = {{"pass", r.uniform}, {"pairs_checked", r.pairs_checked}, {"radius", r.radius}};
  if (r.witness) {
    out["witness"] = {{"x", r.witness->x},
                      {"y", r.witness->y},
                      {"common_fathers", r.witness->common_fathers},
                      {"common_sons", r.witness->common_sons}};
  }
  return out;
}

json to_json(const AdmissibilityResult& r) {
  return {{"admissible", r.admissible}, {"univocity", to_json(r.univocity)}, {"uniformity", to_json(r.uniformity)}};
}

json to_json(const OrientationSearchResult& r) {
  json out = {{"admissible", r.admissible}, {"exhausted", r.exhausted}, {"orientations_tried", r.orientations_tried}};
  if (r.odd_degree_vertex) {
    out["witness"] = {{"odd_degree_vertex", *r.odd_degree_vertex},
                      {"reason", "an odd-degree vertex cannot have as many fathers as sons"}};
  } else if (!r.admissible) {
    out["witness"] = {{"reason", r.exhausted ? "no orientation is univoque and uniform"
                                             : "arc count above the exhaustive search cap; undecided"}};
  }
  return out;
}

json to_json(const AdaptednessReport& r) {
  json out = {{"lipschitz", rational_json(r.lipschitz)},
              {"radius", r.radius},
              {"semi", condition_json(r.semi)},
              {"full", condition_json(r.full)},
              {"semi_adapted", r.semi_adapted()},
              {"adapted", r.adapted()}};
  return out;
}

json to_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item = {{"identity", c.name}, {"verdict", to_string(c.verdict)}, {"radius", c.radius}};
    switch (c.verdict) {
      case Verdict::Pass:
        item["residual"] = "0";
        break;
      case Verdict::Fail:
        item["residual"] = decimal(std::sqrt(c.max_residual.norm2().get_d()));
        item["witness"] = {{"x", c.location->first},
                           {"y", c.location->second},
                           {"max_entry", complex_json(c.max_residual)},
                           {"nonzero_entries", c.nonzero_entries}};
        break;
      case Verdict::Skipped:
        item["reason"] = c.reason;
        break;
    }
    checks.push_back(std::move(item));
  }
  return {{"semi_adapted", r.semi_adapted},
          {"adapted", r.adapted},
          {"position_function", r.position_function},
          {"oriented", r.oriented},
          {"checks", std::move(checks)}};
}

json to_json(const KernelReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(vector_json(v));
  json out = {{"mode", to_string(r.mode)},
              {"dimension", r.dimension},
              {"basis", std::move(basis)},
              {"unknowns", r.unknowns},
              {"constraint_vertices", r.constraint_vertices},
              {"equations", r.equations}};
  if (r.margin) {
    out["support_margin"] = *r.margin;
  } else {
    out["radius"] = r.radius;
  }
  return out;
}

json to_json(const CompactProbeResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"size", s.size},
                     {"vertices", s.vertices},
                     {"unknowns", s.unknowns},
                     {"equations", s.equations},
                     {"dimension", s.dimension}});
  }
  return {{"margin", r.margin}, {"steps", std::move(steps)}, {"label", r.label}};
}

json to_json(const SymmetryKernelResult& r, const DirectedGraph& g) {
  auto support = [&](const std::vector<Rational>& f) {
    json out = json::object();
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (sgn(f[v]) != 0) out[g.id(v)] = to_string(f[v]);
    }
    return out;
  };
  json out = {{"relation", to_string(r.relation)},
              {"kernel_dimension", r.kernel_dimension},
              {"antisymmetric_dimension", r.antisymmetric_dimension},
              {"sum_dimension", r.sum_dimension}};
  if (r.antisymmetric_outside_kernel) out["antisymmetric_outside_kernel"] = support(*r.antisymmetric_outside_kernel);
  if (r.kernel_not_antisymmetric) out["kernel_not_antisymmetric"] = support(*r.kernel_not_antisymmetric);
  return out;
}

json to_json(const TensorCheckResult& r) {
  json out = {{"pass", r.equal}, {"rows_checked", r.rows_checked}};
  if (!r.equal) {
    out["witness"] = {{"x", r.first_mismatch->first}, {"y", r.first_mismatch->second}, {"mismatches", r.mismatches}};
  }
  return out;
}

json spectrum_summary_json(const SpectrumResult& s) {
  json out = {{"count", s.eigenvalues.size()}, {"zero_multiplicity", s.zero_multiplicity},
              {"zero_tolerance", decimal(s.tolerance)}};
  if (!s.eigenvalues.empty()) {
    out["min"] = decimal(s.eigenvalues.front());
    out["max"] = decimal(s.eigenvalues.back());
  }
  return out;
}

bool has_witness(const json& doc) {
  if (doc.is_object()) {
    if (doc.contains("witness")) return true;
    for (const auto& [key, value] : doc.items()) {
      if (has_witness(value)) return true;
    }
  } else if (doc.is_array()) {
    for (const auto& value : doc) {
      if (has_witness(value)) return true;
    }
  }
  return false;
}

}  // namespace adjspec
