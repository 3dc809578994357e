#pragma once

#include "torus.hpp"

#include <json.hpp>

namespace torusmaps {

// {"type": "3.4.6.4", "hnf": [[a,0],[b,d]]}, rows outermost
nlohmann::json map_to_json(const ToroidalMap& X);
ToroidalMap map_from_json(const nlohmann::json& j);  // throws std::invalid_argument

nlohmann::json mat_to_json(const Mat2& M);
Mat2 mat_from_json(const nlohmann::json& j);

// cell geometry with rationals rendered as "p/q" strings
nlohmann::json tiling_to_json(const PeriodicTiling& t);

}  // namespace torusmaps
