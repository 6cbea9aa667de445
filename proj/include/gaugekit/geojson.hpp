#ifndef GAUGEKIT_GEOJSON_HPP
#define GAUGEKIT_GEOJSON_HPP

#include <string>

#include <json.hpp>

#include "gaugekit/polytope.hpp"
#include "gaugekit/verify.hpp"

namespace gaugekit {

// Geometry JSON: {"dim": d, "vrep": [[..],..], "hrep": [{"a": [..], "b": r}, ..]}.
// At least one representation must be present; vrep is hulled on load.
// Errors name the offending field.
Polytope polytope_from_json(const nlohmann::json& j, const std::string& where);
Polytope load_polytope(const std::string& path);

nlohmann::json polytope_to_json(const Polytope& p);

// IEEE doubles serialize natively except +inf, which becomes the string
// "inf" for parser portability.
nlohmann::json json_number(double v);

nlohmann::json report_to_json(const VerifyReport& rep);

}  // namespace gaugekit

#endif  // GAUGEKIT_GEOJSON_HPP
