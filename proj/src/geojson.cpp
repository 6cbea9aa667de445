#include "gaugekit/geojson.hpp"

#include <fstream>

namespace gaugekit {

using nlohmann::json;

namespace {

Vec vec_from_json(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(ErrorCode::InvalidInput, where + ": expected an array of " + std::to_string(dim) + " numbers");
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number())
      fail(ErrorCode::InvalidInput, where + "[" + std::to_string(i) + "]: expected a number");
    v[i] = j[i].get<double>();
  }
  return v;
}

}  // namespace

json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Polytope polytope_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, where + ": expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(ErrorCode::InvalidInput, where + ".dim: expected an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 3) fail(ErrorCode::InvalidInput, where + ".dim: must be 1, 2 or 3");

  const bool has_v = j.contains("vrep");
  const bool has_h = j.contains("hrep");
  if (!has_v && !has_h)
    fail(ErrorCode::InvalidInput, where + ": needs at least one of 'vrep' or 'hrep'");

  if (has_v) {
    const auto& jv = j["vrep"];
    if (!jv.is_array()) fail(ErrorCode::InvalidInput, where + ".vrep: expected an array");
    if (jv.empty()) return Polytope::empty(dim);
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < jv.size(); ++i)
      pts.push_back(vec_from_json(jv[i], dim, where + ".vrep[" + std::to_string(i) + "]"));
    Polytope p = Polytope::from_points(dim, pts);  // hull taken on load
    if (has_h && p.full_dim()) {
      // On-demand audit that both representations agree.
      const auto& jh = j["hrep"];
      for (std::size_t i = 0; i < jh.size(); ++i) {
        const std::string hw = where + ".hrep[" + std::to_string(i) + "]";
        if (!jh[i].is_object() || !jh[i].contains("a") || !jh[i].contains("b"))
          fail(ErrorCode::InvalidInput, hw + ": expected {\"a\": [..], \"b\": r}");
        const Vec a = vec_from_json(jh[i]["a"], dim, hw + ".a");
        const double b = jh[i]["b"].get<double>();
        const double len = norm(a);
        for (const auto& v : p.vertices())
          if (dot(a, v) > b + 1e-9 * (1.0 + std::abs(b)) * std::max(1.0, len))
            fail(ErrorCode::InvalidInput, hw + ": inconsistent with vrep");
      }
    }
    return p;
  }

  const auto& jh = j["hrep"];
  if (!jh.is_array() || jh.empty())
    fail(ErrorCode::InvalidInput, where + ".hrep: expected a nonempty array");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < jh.size(); ++i) {
    const std::string hw = where + ".hrep[" + std::to_string(i) + "]";
    if (!jh[i].is_object() || !jh[i].contains("a") || !jh[i].contains("b"))
      fail(ErrorCode::InvalidInput, hw + ": expected {\"a\": [..], \"b\": r}");
    if (!jh[i]["b"].is_number()) fail(ErrorCode::InvalidInput, hw + ".b: expected a number");
    hs.push_back({vec_from_json(jh[i]["a"], dim, hw + ".a"), jh[i]["b"].get<double>()});
  }
  return Polytope::from_halfspaces(dim, hs);
}

Polytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open geometry file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, "malformed JSON in '" + path + "': " + e.what());
  }
  return polytope_from_json(j, path);
}

json polytope_to_json(const Polytope& p) {
  json j;
  j["dim"] = p.dim();
  json verts = json::array();
  if (!p.is_empty())
    for (const auto& v : p.vertices()) verts.push_back(v);
  j["vrep"] = verts;
  if (!p.is_empty() && p.full_dim()) {
    json hs = json::array();
    for (const auto& h : p.halfspaces()) hs.push_back({{"a", h.a}, {"b", h.b}});
    j["hrep"] = hs;
  }
  if (!p.is_empty()) j["affine_dim"] = p.affine_dim();
  return j;
}

json report_to_json(const VerifyReport& rep) {
  json j;
  j["instance_id"] = rep.instance_id;
  j["seed"] = rep.seed;
  j["hard_failed"] = rep.hard_failed();
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"tolerance", c.tolerance},
                      {"status", c.status}});
  j["checks"] = checks;
  return j;
}

}  // namespace gaugekit
