#pragma once

#include <nlohmann/json.hpp>

#include "diskarg/blaschke.hpp"
#include "diskarg/measures.hpp"

namespace diskarg {

/// {"zeros": [[re, im], ...], "tail": {"kind": "none|geometric|power", "param": x, "count": n}}
nlohmann::json to_json(const ZeroSequence& zs);
ZeroSequence zeros_from_json(const nlohmann::json& j);

/// {"atoms": [[theta, mass], ...], "cdf": {"breakpoints": [...], "values": [...]}}
nlohmann::json to_json(const BoundaryMeasure& m);
BoundaryMeasure measure_from_json(const nlohmann::json& j);

/// {"C": .., "p": .., "Cprime": .., "zeros": {...}, "boundary": {...}}
nlohmann::json to_json(const BoundedFunctionSpec& spec);
BoundedFunctionSpec spec_from_json(const nlohmann::json& j);

}  // namespace diskarg
