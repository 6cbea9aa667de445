#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaugekit/ballops.hpp"
#include "gaugekit/geojson.hpp"
#include "gaugekit/svg.hpp"
#include "gaugekit/verify.hpp"

namespace py = pybind11;
using namespace gaugekit;

namespace {

py::dict radii_dict(const RadiiResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["method"] = to_string(r.method);
  d["accuracy"] = r.accuracy;
  if (r.witness_center) d["center"] = *r.witness_center;
  return d;
}

Polytope poly_from_vertices(const std::vector<Vec>& pts) {
  if (pts.empty()) fail(ErrorCode::EmptyInput, "no points given");
  return Polytope::from_points(static_cast<int>(pts[0].size()), pts);
}

}  // namespace

PYBIND11_MODULE(_gaugekit, m) {
  m.doc() = "Containment-based size measures of convex polytopes with respect to a gauge body";

  py::register_exception<Error>(m, "GaugekitError");

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&poly_from_vertices), py::arg("vertices"))
      .def_static("empty", &Polytope::empty, py::arg("dim"))
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("affine_dim", &Polytope::affine_dim)
      .def_property_readonly("is_empty", &Polytope::is_empty)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               return p.is_empty() ? std::vector<Vec>{} : p.vertices();
                             })
      .def("support", &Polytope::support, py::arg("direction"))
      .def("contains", &Polytope::contains, py::arg("point"), py::arg("tol") = 1e-9)
      .def("__repr__", [](const Polytope& p) {
        if (p.is_empty()) return std::string("Polytope(empty, dim=") + std::to_string(p.dim()) + ")";
        return "Polytope(dim=" + std::to_string(p.dim()) +
               ", affine_dim=" + std::to_string(p.affine_dim()) +
               ", vertices=" + std::to_string(p.vertices().size()) + ")";
      });

  py::class_<GaugeBody>(m, "GaugeBody")
      .def(py::init([](const std::vector<Vec>& pts) { return GaugeBody(poly_from_vertices(pts)); }),
           py::arg("vertices"))
      .def(py::init<Polytope>(), py::arg("body"))
      .def_property_readonly("body", &GaugeBody::body)
      .def_property_readonly("dim", &GaugeBody::dim)
      .def("gamma", &GaugeBody::gamma, py::arg("point"));

  m.def("convex_hull", &poly_from_vertices, py::arg("points"));
  m.def("minkowski_sum", &minkowski_sum);
  m.def("scale", &scale);
  m.def("translate", &translate);

  m.def("circumradius",
        [](const Polytope& k, const GaugeBody& c) { return radii_dict(circumradius(k, c)); });
  m.def("inradius",
        [](const Polytope& k, const GaugeBody& c) { return radii_dict(inradius(k, c)); });
  m.def("circumcenter_set", &circumcenter_set);
  m.def("incenter_set", &incenter_set);
  m.def("diameter", &diameter);
  m.def("width", &width);

  m.def("ball_intersect", &ball_intersect, py::arg("set"), py::arg("gauge"), py::arg("lam"));
  m.def("ball_hull", &ball_hull, py::arg("set"), py::arg("gauge"), py::arg("lam"));

  m.def(
      "successive_radius",
      [](const Polytope& k, const GaugeBody& c, const std::string& name, bool force_search) {
        const Quantity q = parse_quantity(name);
        return radii_dict(successive_radius(
            k, c, q, force_search ? RadiusPolicy::ForceSearch : RadiusPolicy::Auto));
      },
      py::arg("set"), py::arg("gauge"), py::arg("quantity"), py::arg("force_search") = false);

  m.def("full_profile", [](const Polytope& k, const GaugeBody& c) {
    const Profile prof = full_profile(k, c);
    py::dict out;
    py::list entries;
    for (const auto& e : prof.entries) {
      py::dict row = radii_dict(e.result);
      row["quantity"] = to_string(e.quantity);
      entries.append(row);
    }
    py::list chains;
    for (const auto& ch : prof.chains) {
      py::dict row;
      row["family"] = ch.family;
      row["ok"] = ch.ok;
      row["worst_violation"] = ch.worst_violation;
      chains.append(row);
    }
    out["entries"] = entries;
    out["chains"] = chains;
    return out;
  });

  m.def("run_verify", [](const Polytope& k, const GaugeBody& c, std::uint64_t seed) {
    const VerifyReport rep = run_verify(k, c, seed);
    py::dict out;
    out["instance_id"] = rep.instance_id;
    out["seed"] = rep.seed;
    out["hard_failed"] = rep.hard_failed();
    py::list checks;
    for (const auto& chk : rep.checks) {
      py::dict row;
      row["name"] = chk.name;
      row["lhs"] = chk.lhs;
      row["rhs"] = chk.rhs;
      row["tolerance"] = chk.tolerance;
      row["status"] = chk.status;
      checks.append(row);
    }
    out["checks"] = checks;
    return out;
  }, py::arg("set"), py::arg("gauge"), py::arg("seed") = 0);

  m.def("polytope_to_json", [](const Polytope& p) { return polytope_to_json(p).dump(); });
  m.def("load_polytope", &load_polytope, py::arg("path"));
}
