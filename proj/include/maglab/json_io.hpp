#pragma once

#include <json.hpp>

#include "maglab/classifier.hpp"
#include "maglab/closed_form.hpp"
#include "maglab/frenet.hpp"

// JSON schemas for configs and reports. Frenet reports carry a `theory`
// block with the formula-predicted values next to the estimates.

namespace maglab {

nlohmann::json to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const nlohmann::json& j);

// include_per_node controls the per-node curvature arrays and frames.
nlohmann::json to_json(const FrenetReport& report, double residual, bool include_per_node = true);

nlohmann::json to_json(const Classification& c, const std::string& profile);

}  // namespace maglab
