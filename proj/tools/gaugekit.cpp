#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "gaugekit/ballops.hpp"
#include "gaugekit/geojson.hpp"
#include "gaugekit/svg.hpp"
#include "gaugekit/verify.hpp"

using namespace gaugekit;
using nlohmann::json;

namespace {

struct Io {
  std::string set_path;
  std::string gauge_path;
  std::string out_path;
};

void add_io(CLI::App* cmd, Io& io, bool needs_set = true) {
  if (needs_set)
    cmd->add_option("--set", io.set_path, "geometry JSON for the measured set K")->required();
  cmd->add_option("--gauge", io.gauge_path, "geometry JSON for the gauge body C")->required();
  cmd->add_option("--out", io.out_path, "output file (default: stdout)");
}

void write_out(const Io& io, const std::string& text) {
  if (io.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(io.out_path);
  if (!out) fail(ErrorCode::InvalidInput, "cannot open output file '" + io.out_path + "'");
  out << text;
}

json result_json(const std::string& quantity, double value, const char* method, double accuracy) {
  json j;
  j["quantity"] = quantity;
  j["value"] = json_number(value);
  j["method"] = method;
  j["accuracy"] = json_number(accuracy);
  j["witness"] = json::object();
  return j;
}

json radii_json(const std::string& quantity, const RadiiResult& r) {
  json j = result_json(quantity, r.value, to_string(r.method), r.accuracy);
  if (r.witness_center) j["witness"]["center"] = *r.witness_center;
  if (r.witness_subspace) j["witness"]["subspace"] = r.witness_subspace->basis;
  return j;
}

json set_json(const std::string& quantity, const Polytope& p, double accuracy) {
  json j;
  j["quantity"] = quantity;
  j["set"] = polytope_to_json(p);
  j["method"] = "exact";
  j["accuracy"] = json_number(accuracy);
  return j;
}

struct Inputs {
  Polytope K;
  std::optional<GaugeBody> C;
};

Inputs load(const Io& io, bool needs_set = true) {
  Inputs in;
  if (needs_set) in.K = load_polytope(io.set_path);
  in.C.emplace(load_polytope(io.gauge_path));
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaugekit: containment-based size measures of convex polytopes"};
  app.require_subcommand(1);

  Io io;
  std::vector<double> point;
  std::string flat_path;
  std::string quantity_name;
  std::string what = "bh";
  double lambda = 0.0;
  std::uint64_t seed = 0;
  bool force_search = false;

  auto* c_gamma = app.add_subcommand("gamma", "Minkowski functional gamma_C(x)");
  add_io(c_gamma, io, false);
  c_gamma->add_option("--point", point, "coordinates of x")->required();

  auto* c_dist = app.add_subcommand("dist", "gauge distance from a point to a flat");
  add_io(c_dist, io, false);
  c_dist->add_option("--point", point, "coordinates of y")->required();
  c_dist->add_option("--flat", flat_path, "JSON file {\"point\": [..], \"basis\": [[..],..]}")
      ->required();

  auto* c_circ = app.add_subcommand("circumradius", "R(K,C) with an optimal center");
  add_io(c_circ, io);
  auto* c_inr = app.add_subcommand("inradius", "r(K,C) with an optimal center");
  add_io(c_inr, io);
  auto* c_cc = app.add_subcommand("cc", "circumcenter (Chebyshev) set");
  add_io(c_cc, io);
  auto* c_ic = app.add_subcommand("ic", "incenter set");
  add_io(c_ic, io);
  auto* c_diam = app.add_subcommand("diameter", "gauge diameter D(K,C)");
  add_io(c_diam, io);
  auto* c_width = app.add_subcommand("width", "gauge width w(K,C)");
  add_io(c_width, io);

  auto* c_bi = app.add_subcommand("bi", "ball intersection at radius lambda");
  add_io(c_bi, io);
  c_bi->add_option("--lambda", lambda, "radius")->required();
  auto* c_bh = app.add_subcommand("bh", "ball hull at radius lambda");
  add_io(c_bh, io);
  c_bh->add_option("--lambda", lambda, "radius")->required();

  auto* c_rad = app.add_subcommand("radius", "one successive radius, e.g. R-pi-sup:1");
  add_io(c_rad, io);
  c_rad->add_option("--quantity", quantity_name, "family-mode-position:j")->required();
  c_rad->add_flag("--force-search", force_search, "skip the exact shortcut paths");

  auto* c_prof = app.add_subcommand("profile", "all successive radii plus chain checks");
  add_io(c_prof, io);

  auto* c_verify = app.add_subcommand("verify", "run the identity suite on (K,C)");
  add_io(c_verify, io);
  c_verify->add_option("--seed", seed, "seed for randomized probes");

  auto* c_render = app.add_subcommand("render", "SVG figure of a ball operation (2D)");
  add_io(c_render, io);
  c_render->add_option("--lambda", lambda, "radius (bh/bi only)");
  c_render->add_option("--what", what, "bh | bi | cc | ic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  // Input phase: anything thrown here is a usage/data problem -> exit 1.
  Inputs in;
  json flat_json;
  try {
    const bool needs_set = !(c_gamma->parsed() || c_dist->parsed());
    in = load(io, needs_set);
    if (c_dist->parsed()) {
      std::ifstream f(flat_path);
      if (!f) fail(ErrorCode::InvalidInput, "cannot open flat file '" + flat_path + "'");
      try {
        f >> flat_json;
      } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON in flat file: ") + e.what());
      }
    }
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }

  // Computation phase -> exit 2 on failure, 3 on verify hard-fail.
  try {
    const GaugeBody& C = *in.C;
    json out;

    if (c_gamma->parsed()) {
      out = result_json("gamma", C.gamma(point), "exact", 1e-15);
      out["witness"]["point"] = point;
    } else if (c_dist->parsed()) {
      AffineFlat F;
      F.point = flat_json.at("point").get<Vec>();
      for (const auto& b : flat_json.at("basis")) F.basis.push_back(b.get<Vec>());
      F.basis = orthonormalize(F.basis);
      const auto res = dist_to_flat(C, point, F);
      out = result_json("dist", res.value, "exact", tol::feasibility);
      out["witness"]["nearest"] = res.nearest;
    } else if (c_circ->parsed()) {
      out = radii_json("circumradius", circumradius(in.K, C));
    } else if (c_inr->parsed()) {
      out = radii_json("inradius", inradius(in.K, C));
    } else if (c_cc->parsed()) {
      out = set_json("cc", circumcenter_set(in.K, C), tol::membership);
    } else if (c_ic->parsed()) {
      out = set_json("ic", incenter_set(in.K, C), tol::membership);
    } else if (c_diam->parsed()) {
      out = result_json("diameter", diameter(in.K, C), "exact", tol::feasibility);
    } else if (c_width->parsed()) {
      out = result_json("width", width(in.K, C), "exact", tol::feasibility);
    } else if (c_bi->parsed()) {
      out = set_json("bi", ball_intersect(in.K, C, lambda), tol::membership);
      out["lambda"] = lambda;
    } else if (c_bh->parsed()) {
      out = set_json("bh", ball_hull(in.K, C, lambda), tol::membership);
      out["lambda"] = lambda;
    } else if (c_rad->parsed()) {
      const Quantity q = parse_quantity(quantity_name);
      const auto res = successive_radius(in.K, C, q,
                                         force_search ? RadiusPolicy::ForceSearch : RadiusPolicy::Auto);
      out = radii_json(to_string(q), res);
    } else if (c_prof->parsed()) {
      const Profile prof = full_profile(in.K, C);
      out["quantity"] = "profile";
      json entries = json::array();
      for (const auto& e : prof.entries)
        entries.push_back({{"quantity", to_string(e.quantity)},
                           {"value", json_number(e.result.value)},
                           {"method", to_string(e.result.method)},
                           {"accuracy", json_number(e.result.accuracy)}});
      out["entries"] = entries;
      json chains = json::array();
      for (const auto& c : prof.chains)
        chains.push_back({{"family", c.family},
                          {"nondecreasing", c.nondecreasing},
                          {"ok", c.ok},
                          {"worst_violation", json_number(c.worst_violation)}});
      out["chains"] = chains;
    } else if (c_verify->parsed()) {
      const VerifyReport rep = run_verify(in.K, C, seed);
      write_out(io, report_to_json(rep).dump(2) + "\n");
      std::cerr << report_to_text(rep);
      return rep.hard_failed() ? 3 : 0;
    } else if (c_render->parsed()) {
      SvgFigure fig;
      fig.set = in.K;
      if (what == "bh") {
        fig.result = ball_hull(in.K, C, lambda);
        for (const auto& x : ball_intersect(in.K, C, lambda).vertices())
          fig.translates.push_back(translate(scale(C.body(), lambda), x));
      } else if (what == "bi") {
        fig.result = ball_intersect(in.K, C, lambda);
        for (const auto& v : in.K.vertices())
          fig.translates.push_back(translate(scale(C.body(), -lambda), v));
      } else if (what == "cc") {
        const double R = circumradius(in.K, C).value;
        fig.result = circumcenter_set(in.K, C);
        for (const auto& x : fig.result.vertices())
          fig.translates.push_back(translate(scale(C.body(), R), x));
      } else if (what == "ic") {
        const double r = inradius(in.K, C).value;
        fig.result = incenter_set(in.K, C);
        for (const auto& y : fig.result.vertices())
          fig.translates.push_back(translate(scale(C.body(), r), y));
      } else {
        fail(ErrorCode::InvalidInput, "--what must be one of bh, bi, cc, ic");
      }
      write_out(io, render_svg(fig));
      return 0;
    }

    write_out(io, out.dump(2) + "\n");
    return 0;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
}
