#ifndef GAUGEKIT_POLYTOPE_HPP
#define GAUGEKIT_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "gaugekit/types.hpp"

namespace gaugekit {

// Halfspace {x : <a,x> <= b}. Normals are unit length once a Polytope
// canonicalizes its hrep; raw inputs may be any nonzero a.
struct Halfspace {
  Vec a;
  double b = 0.0;
};

// Affine flat x + span(basis); basis vectors are pairwise orthonormal.
struct AffineFlat {
  Vec point;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Linear subspace of R^d given by an orthonormal basis (empty for {0}).
struct Subspace {
  int dim_ambient = 0;
  std::vector<Vec> basis;

  int dim_sub() const { return static_cast<int>(basis.size()); }

  // Orthonormalizes the generators (dependent ones are dropped).
  static Subspace span(int d, const std::vector<Vec>& generators);
  // Validates orthonormality within tol::orthonormal.
  static Subspace from_orthonormal(int d, std::vector<Vec> basis);

  std::vector<Vec> orthogonal_complement() const;
};

// Convex polytope in R^d, d in {1,2,3}. Immutable after construction.
//
// Vertices always list the extreme points in canonical order (2D: CCW
// from the lexicographic minimum, otherwise lexicographic). Full
// dimensional bodies also carry an irredundant ambient hrep with unit
// normals. Lower-dimensional bodies carry their affine hull plus an
// hrep expressed in flat coordinates.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(int dim);
  static Polytope from_points(int dim, const std::vector<Vec>& pts);
  // Vertex enumeration; throws Unbounded for unbounded intersections.
  // degeneracy_tol (absolute) widens the affine-collapse band for
  // near-flat feasible sets; <= 0 picks a scale-relative default.
  static Polytope from_halfspaces(int dim, const std::vector<Halfspace>& hs,
                                  double degeneracy_tol = 0.0);

  int dim() const { return dim_; }
  bool is_empty() const { return affdim_ < 0; }
  int affine_dim() const { return affdim_; }  // -1 when empty
  bool full_dim() const { return affdim_ == dim_; }

  const std::vector<Vec>& vertices() const;            // throws EmptySet
  const std::vector<Halfspace>& halfspaces() const;    // throws unless full_dim
  const AffineFlat& flat() const;                      // affine hull
  // hrep in flat coordinates (affine_dim >= 1); equals halfspaces() basis
  // change for full-dimensional bodies.
  const std::vector<Halfspace>& flat_halfspaces() const;

  double support(const Vec& u) const;                  // throws EmptySet
  bool contains(const Vec& x, double tol) const;
  Vec centroid() const;                                // vertex centroid
  double scale_hint() const;    // max(1, largest |coordinate|)
  double diameter_hint() const; // bounding-box diagonal

  // Consistency audit (used by tests): both representations describe the
  // same set within the given tolerance.
  bool reps_consistent(double tol) const;

 private:
  int dim_ = 0;
  int affdim_ = -1;
  std::vector<Vec> verts_;
  std::vector<Halfspace> hs_;       // ambient, full-dim only
  std::vector<Halfspace> flat_hs_;  // flat coordinates, affdim in [1, dim)
  AffineFlat flat_;
};

// --- operations -----------------------------------------------------------

Polytope convex_hull(const std::vector<Vec>& pts);  // throws EmptyInput
Polytope halfspace_intersection(const std::vector<Halfspace>& hs, int dim);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, double t);
Polytope translate(const Polytope& p, const Vec& t);
inline Polytope reflect(const Polytope& p) { return scale(p, -1.0); }

// P intersected with the affine flat, in ambient coordinates. Empty is a
// value. P must be full dimensional.
Polytope section(const Polytope& p, const AffineFlat& flat);

// Hull of the orthogonal projections of P's vertices onto L, in ambient
// coordinates.
Polytope orthogonal_project(const Polytope& p, const Subspace& L);

// Coordinates of P's vertices in the basis of L (k-dimensional points).
std::vector<Vec> project_coords(const Polytope& p, const std::vector<Vec>& basis);

int affine_dim(const Polytope& p);           // throws EmptySet on empty
double support(const Polytope& p, const Vec& u);

// --- shared linear algebra helpers ----------------------------------------

// Gram-Schmidt; near-dependent generators are dropped at tol.
std::vector<Vec> orthonormalize(const std::vector<Vec>& gens, double tol = 1e-10);
// Orthonormal basis of the orthogonal complement of span(basis) in R^d.
std::vector<Vec> orthogonal_complement(int d, const std::vector<Vec>& basis);

}  // namespace gaugekit

#endif  // GAUGEKIT_POLYTOPE_HPP
