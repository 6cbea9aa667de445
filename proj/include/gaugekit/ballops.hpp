#ifndef GAUGEKIT_BALLOPS_HPP
#define GAUGEKIT_BALLOPS_HPP

#include <string>
#include <vector>

#include "gaugekit/gauge.hpp"

namespace gaugekit {

// bi(K,C,lambda) = intersection over x in K of (x - lambda C)
//                = {y : K subset y + lambda C}.
// Empty when lambda < R(K,C). At the boundary lambda = R(K,C) the set is
// the circumcenter set and is resolved through a relaxation ladder.
Polytope ball_intersect(const Polytope& K, const GaugeBody& C, double lambda);

// bh(K,C,lambda) = intersection of all translates x + lambda C containing
// K, computed as bi(bi(K,C,lambda), -C, lambda). Throws RadiusTooSmall
// when lambda < R(K,C).
Polytope ball_hull(const Polytope& K, const GaugeBody& C, double lambda);

struct BallCheck {
  std::string name;
  bool pass = false;
  bool trivial = false;  // true when the identity holds by construction
  std::string detail;
};

struct BallAlgebraReport {
  double lambda = 0.0;
  std::vector<BallCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Evaluates the ball-operator identities at the given radius:
// set monotonicity in K, monotonicity in lambda, the two bi/bh
// composition formulas, bh idempotence, bi = bh(bi,-C,lambda), and the
// spread-radius inclusion bh(K,C,s) subset bi(K,-C,s) at
// s = sup gamma_C(x - y) over x,y in K. Inclusions are tested by vertex
// membership at tolerance 1e-7 (scaled).
BallAlgebraReport verify_ball_algebra(const Polytope& K, const GaugeBody& C, double lambda);

// --- raw engine -------------------------------------------------------------

// {y : K subset y + lambda * cover} as a halfspace intersection; cover is
// a plain full-dimensional polytope. relax inflates every offset (used
// for boundary-radius enumeration).
Polytope ball_intersection_raw(const Polytope& K, const Polytope& cover, double lambda,
                               double relax = 0.0, double degeneracy_tol = 0.0);

// Boundary-safe variant: enumerates with a relaxation ladder and snaps
// the result onto its detected affine hull (the circumcenter-set path).
Polytope ball_intersection_boundary(const Polytope& K, const Polytope& cover, double lambda);

}  // namespace gaugekit

#endif  // GAUGEKIT_BALLOPS_HPP
