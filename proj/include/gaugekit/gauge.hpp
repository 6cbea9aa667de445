#ifndef GAUGEKIT_GAUGE_HPP
#define GAUGEKIT_GAUGE_HPP

#include <optional>
#include <string>

#include "gaugekit/polytope.hpp"

namespace gaugekit {

// A gauge body C: full-dimensional bounded polytope with 0 strictly in
// its interior. Carries the hrep rescaled to offset 1, so that
// gamma_C(x) = max_i <a_i, x> (clamped at 0).
class GaugeBody {
 public:
  explicit GaugeBody(Polytope body);  // throws InvalidGauge

  const Polytope& body() const { return body_; }
  int dim() const { return body_.dim(); }
  const std::vector<Halfspace>& unit_halfspaces() const { return unit_hs_; }

  double gamma(const Vec& x) const;
  double support(const Vec& u) const { return body_.support(u); }
  GaugeBody reflected() const;

 private:
  Polytope body_;
  std::vector<Halfspace> unit_hs_;  // b == 1 after scaling
};

enum class RadiusMethod { Exact, Searched };

struct RadiiResult {
  double value = 0.0;  // may be +inf
  std::optional<Vec> witness_center;
  std::optional<Subspace> witness_subspace;
  RadiusMethod method = RadiusMethod::Exact;
  double accuracy = 0.0;
};

inline const char* to_string(RadiusMethod m) {
  return m == RadiusMethod::Exact ? "exact" : "searched";
}

// Distance from y to the affine flat F measured by gamma_C, plus the
// nearest point attaining it.
struct FlatDistance {
  double value = 0.0;
  Vec nearest;
};
FlatDistance dist_to_flat(const GaugeBody& C, const Vec& y, const AffineFlat& F);

// R(K,C): smallest lambda with K inside a translate of lambda*C.
// R(empty, C) = 0 by convention.
RadiiResult circumradius(const Polytope& K, const GaugeBody& C);

// r(K,C): largest lambda with a translate of lambda*C inside K. Computed
// by a direct containment LP and cross-checked against 1/R(C,K); throws
// DegenerateBody when K is lower-dimensional.
RadiiResult inradius(const Polytope& K, const GaugeBody& C);

// cc(K,C) = {x : K subset x + R(K,C) C}; affine dimension <= d-1.
Polytope circumcenter_set(const Polytope& K, const GaugeBody& C);

// ic(K,C) = -r(K,C) * cc(C,K); every incenter y satisfies y + r C subset K.
Polytope incenter_set(const Polytope& K, const GaugeBody& C);

// Gauge diameter D(K,C) = 2 sup_{z in K-K} gamma_{C-C}(z) and gauge width
// w(K,C) = 2 inf_u h_{K-K}(u)/h_{C-C}(u); both exact for polytopes.
double diameter(const Polytope& K, const GaugeBody& C);
double width(const Polytope& K, const GaugeBody& C);

// --- raw engines on plain polytopes ----------------------------------------
// The cover body only needs to be full-dimensional; no gauge
// normalization (and no origin assumption) is involved.

// R(K, cover) with an optional witness center.
double circumradius_raw(const Polytope& K, const Polytope& cover, Vec* center = nullptr);

// Largest lambda with a translate of lambda*inner inside K (K full-dim,
// hrep available); +inf when inner is a single point, the value is
// unbounded. inner may be lower-dimensional.
double inradius_raw(const Polytope& K, const Polytope& inner, Vec* center = nullptr);

// Difference body P - P (centered).
Polytope difference_body(const Polytope& p);

// max over facet normals u of cover's hrep of h_num(u)/h_cover(u); equals
// R(num, cover) when both bodies are centered. Used by the exact j=1
// support-ratio paths.
double centered_cover_ratio_max(const Polytope& num, const Polytope& cover);
// min over facet normals u of num's hrep of h_num(u)/h_cover(u); equals
// the largest lambda with lambda*cover inside num for centered bodies.
double centered_cover_ratio_min(const Polytope& num, const Polytope& cover);

}  // namespace gaugekit

#endif  // GAUGEKIT_GAUGE_HPP
