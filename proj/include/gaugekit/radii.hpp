#ifndef GAUGEKIT_RADII_HPP
#define GAUGEKIT_RADII_HPP

#include <string>
#include <vector>

#include "gaugekit/gauge.hpp"

namespace gaugekit {

// One of the eight successive-radius families. "position" encodes where
// the mode symbol sits in the usual notation: sup = subscript (sup over
// the subspace family), inf = superscript (inf over it). The CLI spelling
// is e.g. "R-pi-sup:1".
struct Quantity {
  enum class Family { R, r };
  enum class Mode { pi, sigma };
  enum class Position { sup, inf };

  Family family = Family::R;
  Mode mode = Mode::pi;
  Position position = Position::sup;
  int j = 1;
};

std::string to_string(const Quantity& q);
Quantity parse_quantity(const std::string& name);  // throws InvalidInput
std::vector<Quantity> all_quantities(int dim);     // 8 families x j in 1..d

// Search resolution; overridable through the GAUGEKIT_GRID environment
// variable (an integer that rescales every grid proportionally).
struct SearchParams {
  int angle_grid = 720;       // 2D subspace directions over [0, pi)
  int hemisphere_grid = 400;  // 3D Fibonacci hemisphere points
  int offset_grid = 33;       // per-axis offsets in section searches
  int refine_rounds = 40;     // local refinement steps

  static SearchParams defaults();  // reads GAUGEKIT_GRID once per call
};

// R(K, C + L): cylinder circumradius, exact through the orthogonal
// quotient along L.
double cylinder_circumradius(const Polytope& K, const GaugeBody& C, const Subspace& L);

// r(K + L, C) = 1 / R(C, K + L); cross-checked against the direct
// containment LP in the quotient. +inf when L is all of space.
double cylinder_inradius(const Polytope& K, const GaugeBody& C, const Subspace& L);

// sup over offsets x in Proj(K, L-perp) of R(K cap (x+L), C), with
// R(empty, C) = 0.
double section_circumradius_extremal(const Polytope& K, const GaugeBody& C, const Subspace& L,
                                     const SearchParams& params = SearchParams::defaults());

// inf over offsets x in Proj(C, L-perp) of r(K, C cap (x+L)); empty or
// pointlike sections contribute +inf and are dominated.
double section_inradius_extremal(const Polytope& K, const GaugeBody& C, const Subspace& L,
                                 const SearchParams& params = SearchParams::defaults());

enum class RadiusPolicy {
  Auto,         // exact shortcut paths where available (j = 1 and j = d)
  ForceSearch,  // always run the subspace search (cross-check path)
};

RadiiResult successive_radius(const Polytope& K, const GaugeBody& C, const Quantity& q,
                              RadiusPolicy policy = RadiusPolicy::Auto,
                              const SearchParams& params = SearchParams::defaults());

struct ProfileEntry {
  Quantity quantity;
  RadiiResult result;
};

struct ChainCheck {
  std::string family;   // e.g. "R-pi-sup"
  bool nondecreasing = false;  // expected direction (false = nonincreasing)
  bool ok = false;
  double worst_violation = 0.0;
};

struct Profile {
  std::vector<ProfileEntry> entries;  // 8 * d entries
  std::vector<ChainCheck> chains;     // 8 monotonicity chains, slack 5e-3
};

Profile full_profile(const Polytope& K, const GaugeBody& C,
                     const SearchParams& params = SearchParams::defaults());

// --- exact building blocks shared with the verification suite ---------------

// sup_u h_{K-K}(u) / h_{C-C}(u), evaluated exactly over the facet normals
// of C-C (the closed form for r_pi^1).
double support_ratio_sup(const Polytope& K, const Polytope& C);
// inf_u h_{K-K}(u) / h_{C-C}(u) over the facet normals of K-K (= w/2).
double support_ratio_inf(const Polytope& K, const Polytope& C);

}  // namespace gaugekit

#endif  // GAUGEKIT_RADII_HPP
