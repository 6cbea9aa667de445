#include "gaugekit/radii.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace gaugekit {

namespace {

using Family = Quantity::Family;
using Mode = Quantity::Mode;
using Position = Quantity::Position;

// --- generic 1D/2D grid + pattern refinement --------------------------------

struct OptResult {
  Vec arg;
  double value = 0.0;
  double resolution = 0.0;
};

bool improves(bool maximize, double cand, double best) {
  return maximize ? cand > best : cand < best;
}

OptResult grid_pattern_opt(const std::function<double(const Vec&)>& f, const Vec& lo,
                           const Vec& hi, int n_per_axis, int rounds, bool maximize) {
  const int q = static_cast<int>(lo.size());
  OptResult best;
  best.value = maximize ? -kInf : kInf;

  // Coarse grid.
  std::vector<int> idx(q, 0);
  const int n = std::max(2, n_per_axis);
  while (true) {
    Vec t(q);
    for (int m = 0; m < q; ++m)
      t[m] = lo[m] + (hi[m] - lo[m]) * static_cast<double>(idx[m]) / (n - 1);
    const double v = f(t);
    if (improves(maximize, v, best.value)) {
      best.value = v;
      best.arg = t;
    }
    int m = 0;
    while (m < q && ++idx[m] == n) idx[m++] = 0;
    if (m == q) break;
  }

  // Compass pattern refinement from the best grid point.
  Vec step(q);
  for (int m = 0; m < q; ++m) step[m] = (hi[m] - lo[m]) / (n - 1);
  Vec x = best.arg;
  for (int round = 0; round < rounds; ++round) {
    bool moved = false;
    for (int m = 0; m < q; ++m) {
      for (double s : {1.0, -1.0}) {
        Vec y = x;
        y[m] = std::clamp(y[m] + s * step[m], lo[m], hi[m]);
        const double v = f(y);
        if (improves(maximize, v, best.value)) {
          best.value = v;
          x = y;
          moved = true;
        }
      }
    }
    if (!moved)
      for (int m = 0; m < q; ++m) step[m] *= 0.5;
  }
  best.arg = x;
  best.resolution = 0.0;
  for (int m = 0; m < q; ++m) best.resolution = std::max(best.resolution, step[m]);
  return best;
}

// Golden-section polish of a 1D objective inside [a, b].
double golden_refine(const std::function<double(double)>& f, double a, double b, int iters,
                     bool maximize, double* arg_out) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    const bool keep_left = maximize ? f1 > f2 : f1 < f2;
    if (keep_left) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  double bx = xm, bv = fm;
  if (improves(maximize, f1, bv)) bv = f1, bx = x1;
  if (improves(maximize, f2, bv)) bv = f2, bx = x2;
  if (arg_out) *arg_out = bx;
  return bv;
}

// --- subspace families -------------------------------------------------------

Vec dir2(double theta) { return {std::cos(theta), std::sin(theta)}; }

std::vector<Vec> fibonacci_hemisphere(int n) {
  std::vector<Vec> dirs;
  dirs.reserve(n);
  const double ga = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double th = ga * i;
    dirs.push_back({r * std::cos(th), r * std::sin(th), z});
  }
  return dirs;
}

Subspace line_subspace(int d, const Vec& u) { return Subspace::span(d, {u}); }

Subspace plane_subspace(const Vec& normal) {
  return Subspace::from_orthonormal(3, orthogonal_complement(3, orthonormalize({normal})));
}

// Optimize g over unit directions (antipodal pairs identified), returning
// the best direction. In 2D the family is the angle grid over [0, pi);
// in 3D a Fibonacci hemisphere plus tangent-plane pattern refinement.
OptResult optimize_direction(int d, const std::function<double(const Vec&)>& g, bool maximize,
                             const SearchParams& params) {
  OptResult best;
  best.value = maximize ? -kInf : kInf;
  if (d == 2) {
    const int n = std::max(8, params.angle_grid);
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
      const double th = M_PI * i / n;
      const double v = g(dir2(th));
      if (improves(maximize, v, best.value)) {
        best.value = v;
        best_i = i;
      }
    }
    const double h = M_PI / n;
    const double th0 = M_PI * best_i / n;
    double th_best = th0;
    const double refined = golden_refine([&](double th) { return g(dir2(th)); }, th0 - h,
                                         th0 + h, 48, maximize, &th_best);
    if (improves(maximize, refined, best.value)) best.value = refined;
    best.arg = dir2(th_best);
    best.resolution = h * std::pow(0.618, 24);
    return best;
  }

  const auto dirs = fibonacci_hemisphere(std::max(16, params.hemisphere_grid));
  Vec ubest = dirs[0];
  for (const auto& u : dirs) {
    const double v = g(u);
    if (improves(maximize, v, best.value)) {
      best.value = v;
      ubest = u;
    }
  }
  // Tangent-plane pattern search around the grid winner.
  auto tangent = orthogonal_complement(3, {ubest});
  double step = 2.0 / std::sqrt(static_cast<double>(dirs.size()));
  Vec x = ubest;
  for (int round = 0; round < params.refine_rounds; ++round) {
    bool moved = false;
    for (const auto& t : tangent) {
      for (double s : {1.0, -1.0}) {
        Vec y = axpy(x, s * step, t);
        const double len = norm(y);
        y = scaled(y, 1.0 / len);
        const double v = g(y);
        if (improves(maximize, v, best.value)) {
          best.value = v;
          x = y;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.6;
    if (step < 1e-9) break;
  }
  best.arg = x;
  best.resolution = step;
  return best;
}

// --- quotient reductions -----------------------------------------------------

// Hull of projected vertices with near-duplicates collapsed; projections
// of 3D bodies otherwise grow sliver facets that poison the LP bases.
Polytope quotient_hull(int k, std::vector<Vec> pts) {
  double scale = 1.0;
  for (const auto& p : pts)
    for (double c : p) scale = std::max(scale, std::abs(c));
  std::vector<Vec> keep;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : keep)
      if (dist(p, q) <= 1e-7 * scale) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(p);
  }
  return Polytope::from_points(k, keep);
}

// R(A, B + L) through the orthogonal quotient along L; exact.
double cylinder_circum_raw(const Polytope& A, const Polytope& B, const Subspace& L) {
  const int d = A.dim();
  const int k = L.dim_sub();
  if (A.is_empty()) return 0.0;
  if (k == 0) return circumradius_raw(A, B);
  if (k >= d) return 0.0;
  const auto W = L.orthogonal_complement();
  const Polytope Aq = quotient_hull(d - k, project_coords(A, W));
  const Polytope Bq = quotient_hull(d - k, project_coords(B, W));
  return circumradius_raw(Aq, Bq);
}

double section_circum_at(const Polytope& K, const Polytope& cover, const Subspace& L,
                         const std::vector<Vec>& W, const Vec& t) {
  Vec x = zero_vec(K.dim());
  for (std::size_t m = 0; m < W.size(); ++m) x = axpy(x, t[m], W[m]);
  const Polytope S = section(K, {x, L.basis});
  if (S.is_empty()) return 0.0;
  return circumradius_raw(S, cover);
}

double section_inrad_at(const Polytope& K, const Polytope& C, const Subspace& L,
                        const std::vector<Vec>& W, const Vec& t) {
  Vec x = zero_vec(K.dim());
  for (std::size_t m = 0; m < W.size(); ++m) x = axpy(x, t[m], W[m]);
  const Polytope S = section(C, {x, L.basis});
  if (S.is_empty()) return kInf;
  // Near-point sections scale without bound; they never attain the inf.
  if (S.diameter_hint() <= 1e-6 * C.scale_hint()) return kInf;
  return inradius_raw(K, S);
}

void offset_box(const Polytope& body, const std::vector<Vec>& W, Vec& lo, Vec& hi) {
  const auto coords = project_coords(body, W);
  lo.assign(W.size(), kInf);
  hi.assign(W.size(), -kInf);
  for (const auto& c : coords)
    for (std::size_t m = 0; m < W.size(); ++m) {
      lo[m] = std::min(lo[m], c[m]);
      hi[m] = std::max(hi[m], c[m]);
    }
}

// max over vertices of A of gamma_B(v); B centered and full-dimensional.
double gamma_vertex_max(const Polytope& A, const Polytope& B) {
  double g = 0.0;
  for (const auto& v : A.vertices()) {
    double gv = 0.0;
    for (const auto& h : B.halfspaces()) gv = std::max(gv, dot(h.a, v) / h.b);
    g = std::max(g, gv);
  }
  return g;
}

}  // namespace

// --- quantity naming ---------------------------------------------------------

std::string to_string(const Quantity& q) {
  std::string s;
  s += q.family == Family::R ? "R" : "r";
  s += q.mode == Mode::pi ? "-pi" : "-sigma";
  s += q.position == Position::sup ? "-sup" : "-inf";
  s += ":" + std::to_string(q.j);
  return s;
}

Quantity parse_quantity(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::InvalidInput, "quantity '" + name + "' is missing ':j'");
  const std::string head = name.substr(0, colon);
  Quantity q;
  std::string rest;
  if (head.rfind("R-", 0) == 0) {
    q.family = Family::R;
    rest = head.substr(2);
  } else if (head.rfind("r-", 0) == 0) {
    q.family = Family::r;
    rest = head.substr(2);
  } else {
    fail(ErrorCode::InvalidInput, "quantity '" + name + "' must start with 'R-' or 'r-'");
  }
  if (rest.rfind("pi-", 0) == 0) {
    q.mode = Mode::pi;
    rest = rest.substr(3);
  } else if (rest.rfind("sigma-", 0) == 0) {
    q.mode = Mode::sigma;
    rest = rest.substr(6);
  } else {
    fail(ErrorCode::InvalidInput, "quantity '" + name + "' has an unknown mode");
  }
  if (rest == "sup")
    q.position = Position::sup;
  else if (rest == "inf")
    q.position = Position::inf;
  else
    fail(ErrorCode::InvalidInput, "quantity '" + name + "' has an unknown position");
  try {
    q.j = std::stoi(name.substr(colon + 1));
  } catch (...) {
    fail(ErrorCode::InvalidInput, "quantity '" + name + "' has a malformed index");
  }
  return q;
}

std::vector<Quantity> all_quantities(int dim) {
  std::vector<Quantity> out;
  for (Family f : {Family::R, Family::r})
    for (Mode m : {Mode::pi, Mode::sigma})
      for (Position p : {Position::sup, Position::inf})
        for (int j = 1; j <= dim; ++j) out.push_back({f, m, p, j});
  return out;
}

SearchParams SearchParams::defaults() {
  SearchParams p;
  if (const char* env = std::getenv("GAUGEKIT_GRID")) {
    const int g = std::atoi(env);
    if (g > 0) {
      p.hemisphere_grid = g;
      p.angle_grid = std::max(16, (g * 720) / 400);
      p.offset_grid = std::max(5, (g * 33) / 400);
    }
  }
  return p;
}

// --- cylinder quantities -----------------------------------------------------

double cylinder_circumradius(const Polytope& K, const GaugeBody& C, const Subspace& L) {
  if (L.dim_ambient != K.dim()) fail(ErrorCode::InvalidInput, "subspace dimension mismatch");
  return cylinder_circum_raw(K, C.body(), L);
}

double cylinder_inradius(const Polytope& K, const GaugeBody& C, const Subspace& L) {
  if (!K.full_dim()) fail(ErrorCode::DegenerateBody, "cylinder inradius needs a full-dimensional K");
  const int d = K.dim();
  const int k = L.dim_sub();
  if (k >= d) return kInf;  // K + L fills the space

  const double dual_R = cylinder_circum_raw(C.body(), K, L);
  const double value = dual_R > 0.0 ? 1.0 / dual_R : kInf;

  // Direct containment LP in the quotient as an internal cross-check.
  double direct;
  if (k == 0) {
    direct = inradius_raw(K, C.body());
  } else {
    const auto W = L.orthogonal_complement();
    const Polytope Kq = quotient_hull(d - k, project_coords(K, W));
    const Polytope Cq = quotient_hull(d - k, project_coords(C.body(), W));
    direct = inradius_raw(Kq, Cq);
  }
  if (std::isfinite(value) &&
      std::abs(direct - value) > 1e-7 * (1.0 + std::abs(value)))
    fail(ErrorCode::NumericalFailure, "cylinder inradius duality cross-check failed");
  return value;
}

// --- section quantities ------------------------------------------------------

double section_circumradius_extremal(const Polytope& K, const GaugeBody& C, const Subspace& L,
                                     const SearchParams& params) {
  const int d = K.dim();
  const int j = L.dim_sub();
  if (j < 1) fail(ErrorCode::InvalidInput, "section subspace must have dimension >= 1");
  if (j >= d) return circumradius_raw(K, C.body());
  const auto W = L.orthogonal_complement();
  Vec lo, hi;
  offset_box(K, W, lo, hi);
  auto f = [&](const Vec& t) { return section_circum_at(K, C.body(), L, W, t); };
  return grid_pattern_opt(f, lo, hi, params.offset_grid, params.refine_rounds, true).value;
}

double section_inradius_extremal(const Polytope& K, const GaugeBody& C, const Subspace& L,
                                 const SearchParams& params) {
  if (!K.full_dim()) fail(ErrorCode::DegenerateBody, "section inradius needs a full-dimensional K");
  const int d = K.dim();
  const int j = L.dim_sub();
  if (j < 1) fail(ErrorCode::InvalidInput, "section subspace must have dimension >= 1");
  if (j >= d) return inradius_raw(K, C.body());
  const auto W = L.orthogonal_complement();
  Vec lo, hi;
  offset_box(C.body(), W, lo, hi);
  auto f = [&](const Vec& t) { return section_inrad_at(K, C.body(), L, W, t); };
  return grid_pattern_opt(f, lo, hi, params.offset_grid, params.refine_rounds, false).value;
}

// --- successive radii ---------------------------------------------------------

double support_ratio_sup(const Polytope& K, const Polytope& C) {
  const Polytope KK = difference_body(K);
  const Polytope CC = difference_body(C);
  return centered_cover_ratio_max(KK, CC);
}

double support_ratio_inf(const Polytope& K, const Polytope& C) {
  const Polytope KK = difference_body(K);
  if (!KK.full_dim()) return 0.0;
  const Polytope CC = difference_body(C);
  return centered_cover_ratio_min(KK, CC);
}

namespace {

// sup or inf over L in G(d, dim_L) of R(A, B + L).
RadiiResult cylinder_family_extremal(const Polytope& A, const Polytope& B, int dim_L,
                                     bool maximize, RadiusPolicy policy,
                                     const SearchParams& params) {
  const int d = A.dim();
  RadiiResult res;
  if (dim_L == 0) {  // j = d collapse
    res.value = circumradius_raw(A, B);
    res.method = RadiusMethod::Exact;
    res.accuracy = tol::feasibility;
    return res;
  }
  if (policy == RadiusPolicy::Auto && dim_L == d - 1) {
    // Hyperplane cylinders reduce to the 1D quotient support ratio.
    res.value = maximize ? support_ratio_sup(A, B) : support_ratio_inf(A, B);
    res.method = RadiusMethod::Exact;
    res.accuracy = tol::feasibility;
    return res;
  }

  auto g = [&](const Vec& u) {
    const Subspace L = dim_L == 1 ? line_subspace(d, u)
                                  : plane_subspace(u);  // dim_L == 2, d == 3
    return cylinder_circum_raw(A, B, L);
  };
  // dim_L == 2 in R^3 is parametrized by the plane normal; dim_L == d-1
  // under ForceSearch lands here too (2D lines / 3D planes).
  const bool by_normal = dim_L == 2;
  OptResult opt = optimize_direction(d, g, maximize, params);
  res.value = opt.value;
  res.method = RadiusMethod::Searched;
  res.accuracy = opt.resolution;
  res.witness_subspace = by_normal ? plane_subspace(opt.arg) : line_subspace(d, opt.arg);
  return res;
}

RadiiResult section_family_extremal(const Polytope& K, const GaugeBody& C, int j, bool outer_max,
                                    bool inner_circum, RadiusPolicy policy,
                                    const SearchParams& params) {
  const int d = K.dim();
  RadiiResult res;
  if (j >= d) {
    res.value = inner_circum ? circumradius_raw(K, C.body()) : inradius_raw(K, C.body());
    res.method = RadiusMethod::Exact;
    res.accuracy = tol::feasibility;
    return res;
  }
  if (policy == RadiusPolicy::Auto && j == 1) {
    const Polytope KK = difference_body(K);
    const Polytope CC = difference_body(C.body());
    res.method = RadiusMethod::Exact;
    res.accuracy = tol::feasibility;
    if (outer_max) {
      // Longest-chord route: R_sigma^1 = r_sigma^1 = sup_{z in K-K} gamma_{C-C}(z).
      res.value = gamma_vertex_max(KK, CC);
    } else {
      // Inverse-chord route: R^sigma_1 = r^sigma_1 = 1 / sup_{z in C-C} gamma_{K-K}(z).
      if (!KK.full_dim()) {
        res.value = inner_circum ? 0.0 : kInf;
      } else {
        res.value = 1.0 / gamma_vertex_max(CC, KK);
      }
    }
    return res;
  }

  auto g = [&](const Vec& u) {
    const Subspace L = j == 1 ? line_subspace(d, u) : plane_subspace(u);
    return inner_circum ? section_circumradius_extremal(K, C, L, params)
                        : section_inradius_extremal(K, C, L, params);
  };
  OptResult opt = optimize_direction(d, g, outer_max, params);
  res.value = opt.value;
  res.method = RadiusMethod::Searched;
  res.accuracy = opt.resolution;
  res.witness_subspace = j == 1 ? line_subspace(d, opt.arg) : plane_subspace(opt.arg);
  return res;
}

}  // namespace

RadiiResult successive_radius(const Polytope& K, const GaugeBody& C, const Quantity& q,
                              RadiusPolicy policy, const SearchParams& params) {
  const int d = K.dim();
  if (d > 3 || d < 1) fail(ErrorCode::UnsupportedDimension, "successive radii need d in {1,2,3}");
  if (q.j < 1 || q.j > d) fail(ErrorCode::InvalidInput, "quantity index j must lie in [1, d]");
  if (K.is_empty()) fail(ErrorCode::EmptySet, "successive radius of the empty set");
  const bool want_sup = q.position == Position::sup;

  if (q.family == Family::R && q.mode == Mode::pi)
    return cylinder_family_extremal(K, C.body(), d - q.j, want_sup, policy, params);

  if (q.family == Family::r && q.mode == Mode::pi) {
    if (!K.full_dim())
      fail(ErrorCode::DegenerateBody, "inradius-type quantities need a full-dimensional K");
    if (policy == RadiusPolicy::Auto && q.j == 1 && want_sup) {
      // The closed form sup_u h_{K-K}(u)/h_{C-C}(u).
      RadiiResult res;
      res.value = support_ratio_sup(K, C.body());
      res.method = RadiusMethod::Exact;
      res.accuracy = tol::feasibility;
      return res;
    }
    // Duality: r_pi^j(K,C) = 1/R^pi_j(C,K), r^pi_j(K,C) = 1/R_pi^j(C,K).
    RadiiResult dual =
        cylinder_family_extremal(C.body(), K, d - q.j, !want_sup, policy, params);
    dual.value = dual.value > 0.0 ? 1.0 / dual.value : kInf;
    dual.witness_center.reset();
    return dual;
  }

  if (q.family == Family::r && !K.full_dim())
    fail(ErrorCode::DegenerateBody, "inradius-type quantities need a full-dimensional K");

  const bool inner_circum = q.family == Family::R;
  return section_family_extremal(K, C, q.j, want_sup, inner_circum, policy, params);
}

Profile full_profile(const Polytope& K, const GaugeBody& C, const SearchParams& params) {
  const int d = K.dim();
  Profile prof;
  for (const auto& q : all_quantities(d))
    prof.entries.push_back({q, successive_radius(K, C, q, RadiusPolicy::Auto, params)});

  for (Family f : {Family::R, Family::r})
    for (Mode m : {Mode::pi, Mode::sigma})
      for (Position p : {Position::sup, Position::inf}) {
        ChainCheck chain;
        chain.family = to_string(Quantity{f, m, p, 1});
        chain.family.resize(chain.family.size() - 2);  // drop ":1"
        chain.nondecreasing = f == Family::R;
        chain.ok = true;
        double prev = chain.nondecreasing ? -kInf : kInf;
        for (int j = 1; j <= d; ++j) {
          double v = 0.0;
          for (const auto& e : prof.entries)
            if (e.quantity.family == f && e.quantity.mode == m && e.quantity.position == p &&
                e.quantity.j == j)
              v = e.result.value;
          const double slack = 5e-3 * std::max({1.0, std::abs(prev), std::abs(v)});
          const double gap = chain.nondecreasing ? prev - v : v - prev;
          if (j > 1 && std::isfinite(gap) && gap > slack) {
            chain.ok = false;
            chain.worst_violation = std::max(chain.worst_violation, gap);
          }
          prev = v;
        }
        prof.chains.push_back(chain);
      }
  return prof;
}

}  // namespace gaugekit
