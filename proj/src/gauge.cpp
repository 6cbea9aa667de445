#include "gaugekit/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/ballops.hpp"
#include "gaugekit/linprog.hpp"

namespace gaugekit {

GaugeBody::GaugeBody(Polytope body) : body_(std::move(body)) {
  if (body_.is_empty()) fail(ErrorCode::InvalidGauge, "gauge body must be nonempty");
  if (!body_.full_dim())
    fail(ErrorCode::InvalidGauge, "gauge body must be full-dimensional");
  const double s = body_.scale_hint();
  for (const auto& h : body_.halfspaces()) {
    if (h.b <= 1e-9 * s)
      fail(ErrorCode::InvalidGauge, "gauge body must contain 0 strictly in its interior");
    unit_hs_.push_back({scaled(h.a, 1.0 / h.b), 1.0});
  }
}

double GaugeBody::gamma(const Vec& x) const {
  double g = 0.0;
  for (const auto& h : unit_hs_) g = std::max(g, dot(h.a, x));
  return g;
}

GaugeBody GaugeBody::reflected() const { return GaugeBody(reflect(body_)); }

// --- raw engines ------------------------------------------------------------

double circumradius_raw(const Polytope& K, const Polytope& cover, Vec* center) {
  if (K.is_empty()) {
    if (center) center->clear();
    return 0.0;
  }
  if (!cover.full_dim())
    fail(ErrorCode::DegenerateBody, "covering body must be full-dimensional");
  const int d = K.dim();
  const Vec kc = K.centroid();
  const Vec cc = cover.centroid();

  // K - kc inside x'' + lambda * (cover - cc):
  //   h_{K-kc}(a_i) <= <a_i, x''> + lambda * b0_i.
  lp::LinearProgram p;
  p.n_vars = d + 1;
  p.objective = zero_vec(d + 1);
  p.objective[d] = -1.0;
  for (const auto& h : cover.halfspaces()) {
    const double hk = K.support(h.a) - dot(h.a, kc);
    const double b0 = h.b - dot(h.a, cc);
    Vec row = scaled(h.a, -1.0);
    row.push_back(-b0);
    p.add(std::move(row), -hk);
  }
  {
    Vec row = zero_vec(d + 1);
    row[d] = -1.0;
    p.add(std::move(row), 0.0);
  }
  auto s = lp::solve(p);
  if (s.status != lp::Status::Optimal)
    fail(ErrorCode::NumericalFailure, "circumradius LP did not reach an optimum");
  const double lam = s.x[d];
  if (center) {
    Vec x(s.x.begin(), s.x.begin() + d);
    *center = sub(add(x, kc), scaled(cc, lam));
  }
  return lam;
}

double inradius_raw(const Polytope& K, const Polytope& inner, Vec* center) {
  if (!K.full_dim()) fail(ErrorCode::DegenerateBody, "inradius needs a full-dimensional body");
  if (inner.is_empty()) fail(ErrorCode::EmptySet, "cannot inscribe the empty set");
  const int d = K.dim();
  const Vec kc = K.centroid();
  const Vec ic = inner.centroid();

  lp::LinearProgram p;
  p.n_vars = d + 1;
  p.objective = zero_vec(d + 1);
  p.objective[d] = 1.0;
  for (const auto& h : K.halfspaces()) {
    const double h0 = inner.support(h.a) - dot(h.a, ic);
    Vec row = h.a;
    row.push_back(h0);
    p.add(std::move(row), h.b - dot(h.a, kc));
  }
  {
    Vec row = zero_vec(d + 1);
    row[d] = -1.0;
    p.add(std::move(row), 0.0);
  }
  auto s = lp::solve(p);
  if (s.status == lp::Status::Unbounded) {
    if (center) center->clear();
    return kInf;  // inner carries no extent that K could pin down
  }
  if (s.status != lp::Status::Optimal)
    fail(ErrorCode::NumericalFailure, "inradius LP did not reach an optimum");
  const double lam = s.x[d];
  if (center) {
    Vec y(s.x.begin(), s.x.begin() + d);
    *center = sub(add(y, kc), scaled(ic, lam));
  }
  return lam;
}

Polytope difference_body(const Polytope& p) { return minkowski_sum(p, reflect(p)); }

double centered_cover_ratio_max(const Polytope& num, const Polytope& cover) {
  double r = 0.0;
  for (const auto& h : cover.halfspaces()) r = std::max(r, num.support(h.a) / h.b);
  return r;
}

double centered_cover_ratio_min(const Polytope& num, const Polytope& cover) {
  double r = kInf;
  for (const auto& h : num.halfspaces()) r = std::min(r, h.b / cover.support(h.a));
  return r;
}

// --- public operations ------------------------------------------------------

FlatDistance dist_to_flat(const GaugeBody& C, const Vec& y, const AffineFlat& F) {
  const int d = C.dim();
  if (static_cast<int>(y.size()) != d || static_cast<int>(F.point.size()) != d)
    fail(ErrorCode::InvalidInput, "dimension mismatch in dist_to_flat");
  for (std::size_t i = 0; i < F.basis.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(dot(F.basis[i], F.basis[j]) - want) > tol::orthonormal)
        fail(ErrorCode::InvalidInput, "flat basis is not orthonormal");
    }

  const int k = F.dim();
  const Vec rel = sub(y, F.point);
  if (k == 0) return {C.gamma(rel), F.point};

  // min lambda s.t. <a_i, rel - B t> <= lambda  (unit-offset normals a_i).
  lp::LinearProgram p;
  p.n_vars = k + 1;
  p.objective = zero_vec(k + 1);
  p.objective[k] = -1.0;
  for (const auto& h : C.unit_halfspaces()) {
    Vec row(k + 1);
    for (int m = 0; m < k; ++m) row[m] = -dot(h.a, F.basis[m]);
    row[k] = -1.0;
    p.add(std::move(row), -dot(h.a, rel));
  }
  {
    Vec row = zero_vec(k + 1);
    row[k] = -1.0;
    p.add(std::move(row), 0.0);
  }
  auto s = lp::solve(p);
  if (s.status != lp::Status::Optimal)
    fail(ErrorCode::NumericalFailure, "dist_to_flat LP did not reach an optimum");
  Vec nearest = F.point;
  for (int m = 0; m < k; ++m) nearest = axpy(nearest, s.x[m], F.basis[m]);
  return {s.x[k], nearest};
}

RadiiResult circumradius(const Polytope& K, const GaugeBody& C) {
  if (K.dim() != C.dim()) fail(ErrorCode::InvalidInput, "dimension mismatch");
  RadiiResult res;
  res.method = RadiusMethod::Exact;
  res.accuracy = tol::feasibility;
  if (K.is_empty()) {
    res.value = 0.0;
    return res;
  }
  Vec center;
  res.value = circumradius_raw(K, C.body(), &center);
  res.witness_center = std::move(center);
  return res;
}

RadiiResult inradius(const Polytope& K, const GaugeBody& C) {
  if (K.dim() != C.dim()) fail(ErrorCode::InvalidInput, "dimension mismatch");
  if (K.is_empty() || !K.full_dim())
    fail(ErrorCode::DegenerateBody, "inradius needs a full-dimensional body (r = 0 otherwise)");
  Vec center;
  const double direct = inradius_raw(K, C.body(), &center);
  const double dual = 1.0 / circumradius_raw(C.body(), K);
  if (std::abs(direct - dual) > 1e-8 * (1.0 + std::abs(direct)))
    fail(ErrorCode::NumericalFailure, "inradius LP disagrees with 1/R(C,K)");
  RadiiResult res;
  res.value = direct;
  res.witness_center = std::move(center);
  res.method = RadiusMethod::Exact;
  res.accuracy = tol::feasibility;
  return res;
}

Polytope circumcenter_set(const Polytope& K, const GaugeBody& C) {
  if (K.is_empty()) fail(ErrorCode::EmptySet, "circumcenter set of the empty set");
  const double R = circumradius_raw(K, C.body());
  return ball_intersection_boundary(K, C.body(), R);
}

Polytope incenter_set(const Polytope& K, const GaugeBody& C) {
  const double r = inradius(K, C).value;
  const double R2 = circumradius_raw(C.body(), K);
  const Polytope ccCK = ball_intersection_boundary(C.body(), K, R2);
  Polytope ic = scale(ccCK, -r);

  const double s = K.scale_hint() + r * C.body().scale_hint();
  for (const auto& y : ic.vertices())
    for (const auto& c : C.body().vertices())
      if (!K.contains(axpy(y, r, c), tol::membership * s))
        fail(ErrorCode::NumericalFailure, "incenter witness fails containment audit");
  return ic;
}

double diameter(const Polytope& K, const GaugeBody& C) {
  if (K.is_empty()) fail(ErrorCode::EmptySet, "diameter of the empty set");
  const Polytope KK = difference_body(K);
  const GaugeBody CC(difference_body(C.body()));
  double g = 0.0;
  for (const auto& v : KK.vertices()) g = std::max(g, CC.gamma(v));
  return 2.0 * g;
}

double width(const Polytope& K, const GaugeBody& C) {
  if (K.is_empty()) fail(ErrorCode::EmptySet, "width of the empty set");
  const Polytope KK = difference_body(K);
  if (!KK.full_dim()) return 0.0;
  const Polytope CC = difference_body(C.body());
  return 2.0 * centered_cover_ratio_min(KK, CC);
}

}  // namespace gaugekit
