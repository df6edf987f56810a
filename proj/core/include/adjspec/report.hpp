#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "adjspec/families.hpp"
#include "adjspec/kernel.hpp"
#include "adjspec/numeric.hpp"
#include "adjspec/operators.hpp"
#include "adjspec/structure.hpp"

namespace adjspec {

// JSON fragments for the analysis report. Exact values are strings ("3",
// "-1/2"); complex values are {"re":..., "im":...}. A failed verdict always
// carries a "witness" member and a passing one never does.

nlohmann::json rational_json(const Rational& q);
nlohmann::json complex_json(const GaussianRational& z);
nlohmann::json vector_json(const std::vector<Rational>& v);

nlohmann::json to_json(const UnivocityResult& r);
nlohmann::json to_json(const UniformityResult& r);
nlohmann::json to_json(const AdmissibilityResult& r);
nlohmann::json to_json(const OrientationSearchResult& r);
nlohmann::json to_json(const AdaptednessReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const KernelReport& r);
nlohmann::json to_json(const CompactProbeResult& r);
nlohmann::json to_json(const SymmetryKernelResult& r, const DirectedGraph& g);
nlohmann::json to_json(const TensorCheckResult& r);
nlohmann::json spectrum_summary_json(const SpectrumResult& s);

// Decimal text with 17 significant digits.
std::string decimal(double v);

// Recursively true when some object in the document has a "witness" key.
bool has_witness(const nlohmann::json& doc);

}  // namespace adjspec
