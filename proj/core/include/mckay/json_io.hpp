#pragma once

#include <nlohmann/json.hpp>

#include "mckay/algebra.hpp"
#include "mckay/chen_ruan.hpp"
#include "mckay/fan.hpp"
#include "mckay/isocheck.hpp"
#include "mckay/quantum.hpp"
#include "mckay/toric_ring.hpp"

namespace mckay {

using nlohmann::json;

/// {"order": N, "coeffs": ["p/q", ...]} at the smallest order containing the
/// value, or at MCKAY_CYCLO_ORDER when that variable is set and compatible.
json to_json(const CycloNumber& c);
/// Accepts the object form, a literal string such as "-2+6*i", or an integer.
CycloNumber cyclo_from_json(const json& j);

json to_json(const Fan& f);
Fan fan_from_json(const json& j);
/// {"rays": [[...], ...]}
std::vector<IntVector> recipe_from_json(const json& j);

/// {"generators": [...], "targets": [...], "matrix": [[cyclo, ...], ...]};
/// "targets" may be omitted and filled in by the caller.
GeneratorMap map_from_json(const json& j);
json to_json(const GeneratorMap& g);

json to_json(const Vec& v, const GradedAlgebra& a);
json to_json(const GradedAlgebra& a);
json to_json(const Sector& s);
json to_json(const CRBettiTable& t);
json to_json(const ChainConfig& c);
json to_json(const QuantumCoefficient& c, const ChainConfig& cfg);
json to_json(const IsoReport& r, const GradedAlgebra& dst);
json to_json(const IsometryReport& r, const GradedAlgebra& src);
json to_json(const ScanResult& r);

/// Presentation, basis and curve data of a resolution.
json cohomology_json(const ToricCohomology& tc);

}  // namespace mckay
