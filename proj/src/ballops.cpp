#include "gaugekit/ballops.hpp"

#include <algorithm>
#include <cmath>

namespace gaugekit {

namespace {

bool subset_of(const Polytope& p, const Polytope& q, double tol) {
  if (p.is_empty()) return true;
  if (q.is_empty()) return false;
  for (const auto& v : p.vertices())
    if (!q.contains(v, tol)) return false;
  return true;
}

bool same_set(const Polytope& p, const Polytope& q, double tol) {
  return subset_of(p, q, tol) && subset_of(q, p, tol);
}

}  // namespace

Polytope ball_intersection_raw(const Polytope& K, const Polytope& cover, double lambda,
                               double relax, double degeneracy_tol) {
  if (K.is_empty()) fail(ErrorCode::EmptyInput, "ball intersection of the empty set");
  if (lambda < 0.0) fail(ErrorCode::InvalidInput, "radius must be nonnegative");
  if (!cover.full_dim())
    fail(ErrorCode::DegenerateBody, "ball operations need a full-dimensional body");

  // bi = {y : K subset y + lambda * cover}; one halfspace per cover facet.
  std::vector<Halfspace> hs;
  for (const auto& h : cover.halfspaces())
    hs.push_back({scaled(h.a, -1.0), lambda * h.b - K.support(h.a) + relax});
  return Polytope::from_halfspaces(K.dim(), hs, degeneracy_tol);
}

Polytope ball_intersection_boundary(const Polytope& K, const Polytope& cover, double lambda) {
  const double s = K.scale_hint() + std::max(1.0, lambda) * cover.scale_hint();
  const double deg = 1e-6 * s;
  for (double relax : {1e-11 * s, 1e-9 * s, 1e-7 * s}) {
    Polytope bi = ball_intersection_raw(K, cover, lambda, relax, deg);
    if (!bi.is_empty()) return bi;
  }
  fail(ErrorCode::NumericalFailure, "boundary ball intersection stayed empty through the ladder");
}

Polytope ball_intersect(const Polytope& K, const GaugeBody& C, double lambda) {
  Polytope bi = ball_intersection_raw(K, C.body(), lambda);
  if (!bi.is_empty()) return bi;
  const double R = circumradius_raw(K, C.body());
  const double s = K.scale_hint();
  if (lambda >= R * (1.0 - tol::feasibility) - 1e-12 * s)
    return ball_intersection_boundary(K, C.body(), lambda);
  return bi;  // genuinely below the circumradius
}

Polytope ball_hull(const Polytope& K, const GaugeBody& C, double lambda) {
  Polytope inner = ball_intersect(K, C, lambda);
  if (inner.is_empty())
    fail(ErrorCode::RadiusTooSmall, "ball hull needs lambda >= R(K,C)");
  return ball_intersection_raw(inner, reflect(C.body()), lambda);
}

BallAlgebraReport verify_ball_algebra(const Polytope& K, const GaugeBody& C, double lambda) {
  const double R = circumradius_raw(K, C.body());
  const double s = K.scale_hint() + C.body().scale_hint() * std::max(1.0, lambda);
  if (lambda < R * (1.0 - tol::feasibility) - 1e-12 * s)
    fail(ErrorCode::RadiusTooSmall, "ball algebra needs lambda >= R(K,C)");
  const double tol = tol::membership * s;

  BallAlgebraReport rep;
  rep.lambda = lambda;
  auto record = [&](const std::string& name, bool pass, bool trivial,
                    const std::string& detail) {
    rep.checks.push_back({name, pass, trivial, detail});
  };

  const Polytope bi = ball_intersect(K, C, lambda);
  const Polytope bh = ball_hull(K, C, lambda);

  // (a) set monotonicity against an enlarged body K'.
  {
    const Vec kc = K.centroid();
    Polytope Kp = translate(scale(translate(K, scaled(kc, -1.0)), 1.3), kc);
    const double Rp = circumradius_raw(Kp, C.body());
    const double lam = std::max(lambda, Rp * (1.0 + 1e-9) + 1e-12 * s);
    record("bi_antitone_in_K", subset_of(ball_intersect(Kp, C, lam), ball_intersect(K, C, lam), tol),
           false, "bi(K',C,l) subset bi(K,C,l) for K subset K'");
    record("bh_monotone_in_K", subset_of(ball_hull(K, C, lam), ball_hull(Kp, C, lam), tol), false,
           "bh(K,C,l) subset bh(K',C,l) for K subset K'");
  }

  // (b) monotonicity in the radius.
  {
    const double lam2 = 1.5 * lambda + 0.1 * s;
    record("bi_monotone_in_lambda", subset_of(bi, ball_intersect(K, C, lam2), tol), false,
           "bi(l) subset bi(l') for l <= l'");
    record("bh_antitone_in_lambda", subset_of(ball_hull(K, C, lam2), bh, tol), false,
           "bh(l') subset bh(l) for l <= l'");
  }

  // (c) compositions.
  record("bh_is_bi_bi", same_set(bh, ball_intersection_raw(bi, reflect(C.body()), lambda), tol),
         true, "bh = bi(bi(K,C,l),-C,l) (the implementation route)");
  record("bi_of_bh_recovers_bi", same_set(bi, ball_intersection_raw(bh, C.body(), lambda), tol),
         false, "bi(K,C,l) = bi(bh(K,C,l),C,l)");

  // Idempotence remarks.
  record("bh_idempotent", same_set(bh, ball_hull(bh, C, lambda), tol), false,
         "bh(bh(K,C,l),C,l) = bh(K,C,l)");
  record("bi_is_bh_of_bi",
         same_set(bi, ball_intersection_raw(ball_intersection_raw(bi, reflect(C.body()), lambda),
                                            C.body(), lambda),
                  tol),
         false, "bi(K,C,l) = bh(bi(K,C,l),-C,l)");

  // (d) spread radius: s* = sup gamma_C(x-y) over x,y in K.
  {
    double spread = 0.0;
    for (const auto& x : K.vertices())
      for (const auto& y : K.vertices()) spread = std::max(spread, C.gamma(sub(x, y)));
    bool pass = true;
    if (spread >= R * (1.0 - 1e-9)) {
      const Polytope lhs = ball_hull(K, C, spread);
      const Polytope rhs = ball_intersection_raw(K, reflect(C.body()), spread);
      pass = subset_of(lhs, rhs, tol);
    }
    record("bh_subset_bi_at_spread", pass, false,
           "bh(K,C,s*) subset bi(K,-C,s*) at s* = sup gamma_C(x-y)");
  }

  return rep;
}

}  // namespace gaugekit
