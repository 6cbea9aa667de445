#include "gaugekit/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "gaugekit/linprog.hpp"

namespace gaugekit {

namespace {

double points_scale(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const auto& p : pts)
    for (double c : p) s = std::max(s, std::abs(c));
  return s;
}

double bbox_diag(const std::vector<Vec>& pts) {
  if (pts.empty()) return 0.0;
  const int d = static_cast<int>(pts[0].size());
  Vec lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  return dist(lo, hi);
}

std::vector<Vec> dedupe_points(const std::vector<Vec>& pts, double eps) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if (dist(p, q) <= eps) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns extreme points only, CCW starting at the
// lexicographic minimum. Input points need not be distinct.
std::vector<Vec> hull2d(std::vector<Vec> pts, double scale) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const Vec& a, const Vec& b) { return dist(a, b) <= 1e-12 * scale; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  const double eps = 1e-12 * scale * scale;

  std::vector<Vec> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<Halfspace> polygon_hrep_ccw(const std::vector<Vec>& ccw) {
  std::vector<Halfspace> hs;
  const std::size_t n = ccw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = ccw[i];
    const Vec& q = ccw[(i + 1) % n];
    Vec a = {q[1] - p[1], -(q[0] - p[0])};
    const double len = norm(a);
    if (len <= 0.0) continue;
    a[0] /= len;
    a[1] /= len;
    hs.push_back({a, std::max(dot(a, p), dot(a, q))});
  }
  return hs;
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Face {
  int v[3];
  Vec n;       // unit outward normal
  double off;  // <n, x> = off on the face plane
  bool dead = false;
};

struct Hull3Result {
  std::vector<Vec> verts;          // extreme points
  std::vector<Halfspace> facets;   // merged, irredundant
};

// Incremental 3D hull over points of affine rank 3. Throws on internal
// inconsistency so the caller can climb the epsilon ladder.
Hull3Result hull3d_attempt(const std::vector<Vec>& pts, const int seed[4], double eps_vis) {
  std::vector<Face> faces;
  Vec g0 = zero_vec(3);
  for (int s = 0; s < 4; ++s) g0 = add(g0, scaled(pts[seed[s]], 0.25));

  auto make_face = [&](int i, int j, int k) {
    Face f{{i, j, k}, {}, 0.0, false};
    f.n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
    const double len = norm(f.n);
    if (len <= 1e-30) fail(ErrorCode::NumericalFailure, "degenerate hull face");
    f.n = scaled(f.n, 1.0 / len);
    f.off = dot(f.n, pts[i]);
    if (dot(f.n, g0) > f.off) {  // keep outward
      std::swap(f.v[1], f.v[2]);
      f.n = scaled(f.n, -1.0);
      f.off = -f.off;
    }
    return f;
  };

  faces.push_back(make_face(seed[0], seed[1], seed[2]));
  faces.push_back(make_face(seed[0], seed[1], seed[3]));
  faces.push_back(make_face(seed[0], seed[2], seed[3]));
  faces.push_back(make_face(seed[1], seed[2], seed[3]));

  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (i != seed[0] && i != seed[1] && i != seed[2] && i != seed[3]) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(pts[a], pts[b]); });

  for (int pi : order) {
    const Vec& p = pts[pi];
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      if (faces[fi].dead) continue;
      if (dot(faces[fi].n, p) - faces[fi].off > eps_vis) visible.push_back(fi);
    }
    if (visible.empty()) continue;

    std::map<std::pair<int, int>, int> vis_edges;
    for (int fi : visible)
      for (int e = 0; e < 3; ++e)
        vis_edges[{faces[fi].v[e], faces[fi].v[(e + 1) % 3]}] = fi;

    // Horizon: directed edges of visible faces whose twin is hidden.
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [edge, fi] : vis_edges) {
      (void)fi;
      if (vis_edges.find({edge.second, edge.first}) == vis_edges.end())
        horizon.push_back(edge);
    }
    if (horizon.empty()) fail(ErrorCode::NumericalFailure, "open horizon");

    for (int fi : visible) faces[fi].dead = true;
    for (const auto& [u, v] : horizon) {
      // Twin edge (v,u) lives in the hidden neighbour; the replacement
      // face keeps (u,v) so orientation stays two-manifold consistent.
      faces.push_back(make_face(v, u, pi));
      Face& f = faces.back();
      if (dot(f.n, g0) > f.off + 1e-12) fail(ErrorCode::NumericalFailure, "inverted face");
    }
  }

  // Merge coplanar faces into polygonal facets.
  struct Group {
    Vec n;
    double off;
    std::vector<int> members;
  };
  std::vector<Group> groups;
  const double scale = points_scale(pts);
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    if (faces[fi].dead) continue;
    bool merged = false;
    for (auto& g : groups) {
      if (dot(g.n, faces[fi].n) >= 1.0 - 5e-9 &&
          std::abs(g.off - faces[fi].off) <= 1e-8 * scale) {
        g.members.push_back(fi);
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({faces[fi].n, faces[fi].off, {fi}});
  }

  // A vertex is extreme iff at least three distinct facet planes meet it.
  std::map<int, std::vector<int>> incident;
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi)
    for (int fi : groups[gi].members)
      for (int e = 0; e < 3; ++e) {
        auto& lst = incident[faces[fi].v[e]];
        if (std::find(lst.begin(), lst.end(), gi) == lst.end()) lst.push_back(gi);
      }

  Hull3Result out;
  for (const auto& [vi, gs] : incident)
    if (gs.size() >= 3) out.verts.push_back(pts[vi]);
  std::sort(out.verts.begin(), out.verts.end(),
            [](const Vec& a, const Vec& b) { return lex_less(a, b); });

  for (const auto& g : groups) {
    double b = -kInf;
    for (const auto& v : out.verts) b = std::max(b, dot(g.n, v));
    out.facets.push_back({g.n, b});
  }

  if (out.verts.size() < 4 || out.facets.size() < 4)
    fail(ErrorCode::NumericalFailure, "hull collapsed");

  // Containment audit (cheap at desk scale).
  if (pts.size() <= 4000) {
    for (const auto& p : pts)
      for (const auto& h : out.facets)
        if (dot(h.a, p) - h.b > 20.0 * eps_vis + 1e-9 * scale)
          fail(ErrorCode::NumericalFailure, "hull audit failed");
  }
  return out;
}

Hull3Result hull3d(const std::vector<Vec>& pts, const int seed[4], double scale) {
  const double ladder[] = {1e-11, 1e-9, 1e-7, 1e-5};
  for (double e : ladder) {
    try {
      return hull3d_attempt(pts, seed, e * scale);
    } catch (const Error&) {
      // climb the ladder
    }
  }
  fail(ErrorCode::NumericalFailure, "3d hull failed at every epsilon");
}

// Greedy affine frame: anchor plus up to d directions with max residuals.
struct AffineFrame {
  int rank = 0;
  Vec origin;
  std::vector<Vec> basis;  // orthonormal
  int picks[4] = {0, -1, -1, -1};
};

AffineFrame affine_frame(const std::vector<Vec>& pts, double eps) {
  AffineFrame fr;
  const int d = static_cast<int>(pts[0].size());
  int i0 = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (lex_less(pts[i], pts[i0])) i0 = i;
  fr.picks[0] = i0;
  fr.origin = pts[i0];

  auto residual = [&](const Vec& p) {
    Vec r = sub(p, fr.origin);
    for (const auto& u : fr.basis) r = axpy(r, -dot(r, u), u);
    return r;
  };

  while (fr.rank < d) {
    int best = -1;
    double best_len = eps;
    Vec best_r;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      Vec r = residual(pts[i]);
      const double len = norm(r);
      if (len > best_len) {
        best_len = len;
        best = i;
        best_r = r;
      }
    }
    if (best < 0) break;
    fr.basis.push_back(scaled(best_r, 1.0 / best_len));
    fr.picks[fr.rank + 1] = best;
    ++fr.rank;
  }
  return fr;
}

// Gaussian elimination with partial pivoting for tiny systems.
Vec solve_dense(std::vector<double> g, Vec rhs, int p) {
  for (int col = 0; col < p; ++col) {
    int piv = col;
    for (int row = col + 1; row < p; ++row)
      if (std::abs(g[static_cast<std::size_t>(row) * p + col]) >
          std::abs(g[static_cast<std::size_t>(piv) * p + col]))
        piv = row;
    if (std::abs(g[static_cast<std::size_t>(piv) * p + col]) < 1e-14) {
      rhs.assign(p, 0.0);  // singular: keep the anchor point
      return rhs;
    }
    if (piv != col) {
      for (int q = 0; q < p; ++q)
        std::swap(g[static_cast<std::size_t>(col) * p + q],
                  g[static_cast<std::size_t>(piv) * p + q]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (int row = col + 1; row < p; ++row) {
      const double f =
          g[static_cast<std::size_t>(row) * p + col] / g[static_cast<std::size_t>(col) * p + col];
      if (f == 0.0) continue;
      for (int q = col; q < p; ++q)
        g[static_cast<std::size_t>(row) * p + q] -= f * g[static_cast<std::size_t>(col) * p + q];
      rhs[row] -= f * rhs[col];
    }
  }
  for (int col = p - 1; col >= 0; --col) {
    for (int q = col + 1; q < p; ++q)
      rhs[col] -= g[static_cast<std::size_t>(col) * p + q] * rhs[q];
    rhs[col] /= g[static_cast<std::size_t>(col) * p + col];
  }
  return rhs;
}

std::vector<Halfspace> shift_hrep(const std::vector<Halfspace>& hs, const Vec& origin) {
  std::vector<Halfspace> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back({h.a, h.b - dot(h.a, origin)});
  return out;
}

}  // namespace

// --- shared helpers ---------------------------------------------------------

std::vector<Vec> orthonormalize(const std::vector<Vec>& gens, double tol) {
  std::vector<Vec> basis;
  for (Vec v : gens) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) v = axpy(v, -dot(v, u), u);
    const double len = norm(v);
    if (len > tol) basis.push_back(scaled(v, 1.0 / len));
  }
  return basis;
}

std::vector<Vec> orthogonal_complement(int d, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  for (int i = 0; i < d; ++i) {
    Vec v = unit_vec(d, i);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) v = axpy(v, -dot(v, u), u);
      for (const auto& u : out) v = axpy(v, -dot(v, u), u);
    }
    const double len = norm(v);
    if (len > 1e-8) out.push_back(scaled(v, 1.0 / len));
  }
  return out;
}

Subspace Subspace::span(int d, const std::vector<Vec>& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != d || !all_finite(g))
      fail(ErrorCode::InvalidInput, "subspace generator has wrong dimension");
  Subspace s;
  s.dim_ambient = d;
  s.basis = orthonormalize(generators);
  return s;
}

Subspace Subspace::from_orthonormal(int d, std::vector<Vec> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (static_cast<int>(basis[i].size()) != d)
      fail(ErrorCode::InvalidInput, "subspace basis has wrong dimension");
    for (std::size_t j = 0; j <= i; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(dot(basis[i], basis[j]) - want) > tol::orthonormal)
        fail(ErrorCode::InvalidInput, "subspace basis is not orthonormal");
    }
  }
  Subspace s;
  s.dim_ambient = d;
  s.basis = std::move(basis);
  return s;
}

std::vector<Vec> Subspace::orthogonal_complement() const {
  return gaugekit::orthogonal_complement(dim_ambient, basis);
}

// --- Polytope construction --------------------------------------------------

Polytope Polytope::empty(int dim) {
  Polytope p;
  p.dim_ = dim;
  p.affdim_ = -1;
  return p;
}

Polytope Polytope::from_points(int dim, const std::vector<Vec>& pts_in) {
  if (dim < 1 || dim > 3) fail(ErrorCode::UnsupportedDimension, "dimension must be 1, 2 or 3");
  if (pts_in.empty()) fail(ErrorCode::EmptyInput, "no points given");
  for (const auto& p : pts_in)
    if (static_cast<int>(p.size()) != dim || !all_finite(p))
      fail(ErrorCode::InvalidInput, "point has wrong dimension or non-finite coordinates");

  const double scale = points_scale(pts_in);
  // Merge radius sits above enumeration noise (~1e-10 from sliver
  // crossings) and well below every membership tolerance.
  std::vector<Vec> pts = dedupe_points(pts_in, 1e-9 * scale);
  const double diam = bbox_diag(pts);
  const double eps_rank = std::max(tol::rank_rel * diam, 1e-13 * scale);

  AffineFrame fr = affine_frame(pts, eps_rank);

  Polytope poly;
  poly.dim_ = dim;
  poly.affdim_ = fr.rank;

  if (fr.rank == 0) {
    poly.verts_ = {pts[fr.picks[0]]};
    poly.flat_ = {pts[fr.picks[0]], {}};
    return poly;
  }

  if (fr.rank == dim) {
    if (dim == 1) {
      double lo = pts[0][0], hi = pts[0][0];
      for (const auto& p : pts) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
      }
      poly.verts_ = {{lo}, {hi}};
      poly.hs_ = {{{1.0}, hi}, {{-1.0}, -lo}};
    } else if (dim == 2) {
      poly.verts_ = hull2d(pts, scale);
      if (poly.verts_.size() < 3) {  // rank said 2 but hull collapsed
        poly.affdim_ = poly.verts_.size() == 1 ? 0 : 1;
      } else {
        poly.hs_ = polygon_hrep_ccw(poly.verts_);
      }
    } else {
      Hull3Result h = hull3d(pts, fr.picks, scale);
      poly.verts_ = std::move(h.verts);
      poly.hs_ = std::move(h.facets);
    }
    if (poly.affdim_ == dim) {
      Vec c = zero_vec(dim);
      for (const auto& v : poly.verts_) c = add(c, v);
      c = scaled(c, 1.0 / static_cast<double>(poly.verts_.size()));
      std::vector<Vec> id;
      for (int i = 0; i < dim; ++i) id.push_back(unit_vec(dim, i));
      poly.flat_ = {c, id};
      poly.flat_hs_ = shift_hrep(poly.hs_, c);
      return poly;
    }
  }

  // Lower-dimensional hull: work in flat coordinates.
  Vec origin = zero_vec(dim);
  for (const auto& p : pts) origin = add(origin, p);
  origin = scaled(origin, 1.0 / static_cast<double>(pts.size()));

  std::vector<Vec> tpts;
  tpts.reserve(pts.size());
  for (const auto& p : pts) {
    Vec t(fr.rank);
    const Vec rel = sub(p, origin);
    for (int m = 0; m < fr.rank; ++m) t[m] = dot(rel, fr.basis[m]);
    tpts.push_back(std::move(t));
  }

  std::vector<Vec> tverts;
  if (fr.rank == 1) {
    double lo = tpts[0][0], hi = tpts[0][0];
    for (const auto& t : tpts) {
      lo = std::min(lo, t[0]);
      hi = std::max(hi, t[0]);
    }
    tverts = {{lo}, {hi}};
    poly.flat_hs_ = {{{1.0}, hi}, {{-1.0}, -lo}};
  } else {  // rank 2 inside R^3
    tverts = hull2d(tpts, points_scale(tpts));
    poly.flat_hs_ = polygon_hrep_ccw(tverts);
  }

  poly.verts_.clear();
  for (const auto& t : tverts) {
    Vec p = origin;
    for (int m = 0; m < fr.rank; ++m) p = axpy(p, t[m], fr.basis[m]);
    poly.verts_.push_back(p);
  }
  if (!(dim == 2 && poly.affdim_ == 2))
    std::sort(poly.verts_.begin(), poly.verts_.end(),
              [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  poly.affdim_ = fr.rank;
  poly.flat_ = {origin, fr.basis};
  return poly;
}

// --- halfspace intersection -------------------------------------------------

namespace {

struct CleanHs {
  std::vector<Halfspace> hs;  // unit normals
  double scale_b = 1.0;
};

CleanHs clean_halfspaces(const std::vector<Halfspace>& hs_in, int dim) {
  CleanHs out;
  for (const auto& h : hs_in) {
    if (static_cast<int>(h.a.size()) != dim || !all_finite(h.a) || !std::isfinite(h.b))
      fail(ErrorCode::InvalidInput, "halfspace has wrong dimension or non-finite data");
    const double len = norm(h.a);
    if (len <= 1e-14) fail(ErrorCode::InvalidInput, "halfspace normal must be nonzero");
    Halfspace u{scaled(h.a, 1.0 / len), h.b / len};
    bool dup = false;
    // Near-parallel normals collapse to the tighter offset; they would
    // otherwise hand the simplex an ill-conditioned basis.
    for (auto& g : out.hs) {
      if (dist(g.a, u.a) <= 1e-6) {
        g.b = std::min(g.b, u.b);
        dup = true;
        break;
      }
    }
    if (!dup) out.hs.push_back(std::move(u));
  }
  for (const auto& h : out.hs) out.scale_b = std::max(out.scale_b, std::abs(h.b));
  return out;
}

// max <obj, x> over the intersection. A wide box keeps the simplex away
// from spurious unbounded verdicts on sliver-shaped feasible sets.
lp::Solution probe_lp(const std::vector<Halfspace>& hs, int dim, const Vec& obj,
                      double box = 0.0) {
  lp::LinearProgram p;
  p.n_vars = dim;
  p.objective = obj;
  p.feasibility_tol = 1e-7;  // extent queries tolerate sliver systems
  for (const auto& h : hs) p.add(h.a, h.b);
  if (box > 0.0) {
    for (int j = 0; j < dim; ++j) {
      p.add(unit_vec(dim, j), box);
      p.add(scaled(unit_vec(dim, j), -1.0), box);
    }
  }
  return lp::solve(p);
}

bool recession_unbounded(const std::vector<Halfspace>& hs, int dim) {
  for (int i = 0; i < dim; ++i) {
    for (double sign : {1.0, -1.0}) {
      lp::LinearProgram p;
      p.n_vars = dim;
      p.objective = scaled(unit_vec(dim, i), sign);
      for (const auto& h : hs) p.add(h.a, 0.0);
      for (int j = 0; j < dim; ++j) {
        p.add(unit_vec(dim, j), 1.0);
        p.add(scaled(unit_vec(dim, j), -1.0), 1.0);
      }
      auto s = lp::solve(p);
      if (s.status != lp::Status::Optimal || s.value > 1e-9) return true;
    }
  }
  return false;
}

std::vector<Vec> clip_polygon(std::vector<Vec> poly, const Halfspace& h, double eps) {
  std::vector<Vec> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % n];
    const double sp = dot(h.a, p) - h.b;
    const double sq = dot(h.a, q) - h.b;
    if (sp <= eps) out.push_back(p);
    if ((sp < -eps && sq > eps) || (sp > eps && sq < -eps)) {
      const double t = sp / (sp - sq);
      out.push_back(axpy(p, t, sub(q, p)));
    }
  }
  return out;
}

std::vector<Vec> enumerate_2d(const std::vector<Halfspace>& hs, const Vec& lo, const Vec& hi,
                              double scale) {
  const double m = 0.1 * (1.0 + dist(lo, hi));
  std::vector<Vec> poly = {{lo[0] - m, lo[1] - m},
                           {hi[0] + m, lo[1] - m},
                           {hi[0] + m, hi[1] + m},
                           {lo[0] - m, hi[1] + m}};
  const double eps = 1e-11 * scale;
  for (const auto& h : hs) {
    poly = clip_polygon(std::move(poly), h, eps);
    if (poly.empty()) break;
  }
  return poly;
}

std::vector<Vec> enumerate_3d(const std::vector<Halfspace>& hs, const Vec& z, double scale) {
  // Polar duality: vertices of {x : <a_i,x> <= b_i} are z + n/off over the
  // facet planes <n,y> = off of conv{a_i / (b_i - <a_i,z>)}.
  std::vector<Vec> dual;
  dual.reserve(hs.size());
  for (const auto& h : hs) {
    const double c = h.b - dot(h.a, z);
    if (c <= 1e-13 * scale) continue;  // plane through or behind the center
    dual.push_back(scaled(h.a, 1.0 / c));
  }
  if (dual.size() < 4) fail(ErrorCode::NumericalFailure, "dual point set too small");

  const double dscale = points_scale(dual);
  std::vector<Vec> dpts = dedupe_points(dual, 1e-12 * dscale);
  AffineFrame fr = affine_frame(dpts, 1e-10 * dscale);
  if (fr.rank < 3) fail(ErrorCode::NumericalFailure, "dual hull degenerate");
  Hull3Result h = hull3d(dpts, fr.picks, dscale);

  std::vector<Vec> verts;
  for (const auto& f : h.facets) {
    if (f.b <= 1e-12 * dscale) fail(ErrorCode::NumericalFailure, "dual facet through origin");
    verts.push_back(add(z, scaled(f.a, 1.0 / f.b)));
  }
  return verts;
}

}  // namespace

Polytope Polytope::from_halfspaces(int dim, const std::vector<Halfspace>& hs_in,
                                   double degeneracy_tol) {
  if (dim < 1 || dim > 3) fail(ErrorCode::UnsupportedDimension, "dimension must be 1, 2 or 3");
  if (hs_in.empty()) fail(ErrorCode::Unbounded, "empty halfspace list describes all of space");
  CleanHs cl = clean_halfspaces(hs_in, dim);

  // Chebyshev-style feasibility: max eps s.t. <a_i,x> + eps <= b_i.
  lp::LinearProgram fp;
  fp.n_vars = dim + 1;
  fp.objective = zero_vec(dim + 1);
  fp.objective[dim] = 1.0;
  for (const auto& h : cl.hs) {
    Vec a = h.a;
    a.push_back(1.0);
    fp.add(std::move(a), h.b);
  }
  {
    Vec cap = zero_vec(dim + 1);
    cap[dim] = 1.0;
    fp.add(std::move(cap), 1.0 + cl.scale_b);
  }
  auto feas = lp::solve(fp);
  if (feas.status == lp::Status::Infeasible) return Polytope::empty(dim);
  const double clearance = feas.value;
  if (clearance < -tol::feasibility * (1.0 + cl.scale_b)) return Polytope::empty(dim);
  Vec center(feas.x.begin(), feas.x.begin() + dim);

  if (recession_unbounded(cl.hs, dim))
    fail(ErrorCode::Unbounded, "halfspace intersection is unbounded");

  // Affine hull of the feasible set: a constraint that is tight across
  // the whole set pins one direction, so the hull is the intersection of
  // the always-active hyperplanes. Identified by per-constraint slack
  // maximization; the span arithmetic afterwards is exact, which keeps
  // symmetric inputs symmetric.
  const double geo_scale = 1.0 + cl.scale_b + norm(center);
  const double probe_box = 1e6 * (1.0 + cl.scale_b);
  const double tol_deg = degeneracy_tol > 0.0 ? degeneracy_tol : 1e-8 * geo_scale;
  std::vector<Halfspace> active;
  std::vector<Vec> active_normals;
  if (clearance <= tol_deg) {  // an interior ball this large rules out tight constraints
    for (const auto& h : cl.hs) {
      auto slack = probe_lp(cl.hs, dim, scaled(h.a, -1.0), probe_box);
      if (slack.status != lp::Status::Optimal)
        fail(ErrorCode::NumericalFailure, "slack probe failed on bounded set");
      if (h.b + slack.value <= tol_deg) {  // max slack ~ 0: tight everywhere
        active.push_back(h);
        active_normals.push_back(h.a);
      }
    }
  }
  const std::vector<Vec> pinned = orthonormalize(active_normals, 1e-7);
  const std::vector<Vec> dirs = gaugekit::orthogonal_complement(dim, pinned);
  const int k = static_cast<int>(dirs.size());

  if (k == dim) {
    std::vector<Vec> verts;
    if (dim == 1) {
      auto hi = probe_lp(cl.hs, 1, {1.0}, probe_box);
      auto lo = probe_lp(cl.hs, 1, {-1.0}, probe_box);
      verts = {{-lo.value}, {hi.value}};
    } else if (dim == 2) {
      Vec blo(2), bhi(2);
      for (int i = 0; i < 2; ++i) {
        bhi[i] = probe_lp(cl.hs, 2, unit_vec(2, i), probe_box).value;
        blo[i] = -probe_lp(cl.hs, 2, scaled(unit_vec(2, i), -1.0), probe_box).value;
      }
      verts = enumerate_2d(cl.hs, blo, bhi, geo_scale);
      if (verts.empty()) return Polytope::empty(dim);
    } else {
      verts = enumerate_3d(cl.hs, center, geo_scale);
    }
    return from_points(dim, verts);
  }

  // Degenerate: project the Chebyshev point onto the flat by least
  // squares over the active constraints. The offset along the flat is
  // immaterial; the normal components are pinned by the equalities.
  Vec origin = center;
  {
    const int p = static_cast<int>(pinned.size());
    std::vector<double> g(static_cast<std::size_t>(p) * p, 0.0);
    Vec rhs = zero_vec(p);
    for (const auto& h : active) {
      Vec proj(p);
      for (int m = 0; m < p; ++m) proj[m] = dot(h.a, pinned[m]);
      const double res = h.b - dot(h.a, center);
      for (int m = 0; m < p; ++m) {
        rhs[m] += proj[m] * res;
        for (int q = 0; q < p; ++q) g[static_cast<std::size_t>(m) * p + q] += proj[m] * proj[q];
      }
    }
    const Vec y = solve_dense(g, rhs, p);
    for (int m = 0; m < p; ++m) origin = axpy(origin, y[m], pinned[m]);
  }

  if (k == 0) return from_points(dim, {origin});

  std::vector<Halfspace> sub_hs;
  for (const auto& h : cl.hs) {
    Vec c(k);
    for (int m = 0; m < k; ++m) c[m] = dot(h.a, dirs[m]);
    const double r = h.b - dot(h.a, origin);
    if (norm(c) <= 1e-9) continue;  // parallel to the flat
    sub_hs.push_back({std::move(c), r});
  }

  std::vector<Vec> tverts;
  if (k == 1) {
    double lo = -kInf, hi = kInf;
    for (const auto& h : sub_hs) {
      const double c = h.a[0];
      if (c > 0)
        hi = std::min(hi, h.b / c);
      else
        lo = std::max(lo, h.b / c);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      fail(ErrorCode::NumericalFailure, "unbounded flat restriction");
    if (lo > hi) {
      const double mid = 0.5 * (lo + hi);
      lo = hi = mid;
    }
    tverts = {{lo}, {hi}};
  } else {
    Polytope sub = from_halfspaces(2, sub_hs, tol_deg);
    if (sub.is_empty()) return Polytope::empty(dim);
    tverts = sub.vertices();
  }

  std::vector<Vec> verts;
  for (const auto& t : tverts) {
    Vec p = origin;
    for (int m = 0; m < k; ++m) p = axpy(p, t[m], dirs[m]);
    verts.push_back(p);
  }
  return from_points(dim, verts);
}

// --- accessors --------------------------------------------------------------

const std::vector<Vec>& Polytope::vertices() const {
  if (is_empty()) fail(ErrorCode::EmptySet, "empty polytope has no vertices");
  return verts_;
}

const std::vector<Halfspace>& Polytope::halfspaces() const {
  if (is_empty()) fail(ErrorCode::EmptySet, "empty polytope has no hrep");
  if (!full_dim())
    fail(ErrorCode::DegenerateBody, "ambient hrep only exists for full-dimensional bodies");
  return hs_;
}

const AffineFlat& Polytope::flat() const {
  if (is_empty()) fail(ErrorCode::EmptySet, "empty polytope has no affine hull");
  return flat_;
}

const std::vector<Halfspace>& Polytope::flat_halfspaces() const {
  if (is_empty()) fail(ErrorCode::EmptySet, "empty polytope has no hrep");
  return flat_hs_;
}

double Polytope::support(const Vec& u) const {
  if (is_empty()) fail(ErrorCode::EmptySet, "support of the empty set");
  double s = -kInf;
  for (const auto& v : verts_) s = std::max(s, dot(u, v));
  return s;
}

bool Polytope::contains(const Vec& x, double tol) const {
  if (is_empty()) return false;
  if (full_dim()) {
    for (const auto& h : hs_)
      if (dot(h.a, x) > h.b + tol) return false;
    return true;
  }
  Vec rel = sub(x, flat_.point);
  Vec t(flat_.basis.size());
  for (std::size_t m = 0; m < flat_.basis.size(); ++m) {
    t[m] = dot(rel, flat_.basis[m]);
    rel = axpy(rel, -t[m], flat_.basis[m]);
  }
  if (norm(rel) > tol) return false;
  if (affdim_ == 0) return true;
  for (const auto& h : flat_hs_)
    if (dot(h.a, t) > h.b + tol) return false;
  return true;
}

Vec Polytope::centroid() const {
  if (is_empty()) fail(ErrorCode::EmptySet, "centroid of the empty set");
  Vec c = zero_vec(dim_);
  for (const auto& v : verts_) c = add(c, v);
  return scaled(c, 1.0 / static_cast<double>(verts_.size()));
}

double Polytope::scale_hint() const {
  if (is_empty()) return 1.0;
  return points_scale(verts_);
}

double Polytope::diameter_hint() const {
  if (is_empty()) return 0.0;
  return bbox_diag(verts_);
}

bool Polytope::reps_consistent(double tol) const {
  if (is_empty() || !full_dim()) return true;
  for (const auto& v : verts_)
    for (const auto& h : hs_)
      if (dot(h.a, v) > h.b + tol) return false;
  for (const auto& h : hs_) {
    double s = -kInf;
    for (const auto& v : verts_) s = std::max(s, dot(h.a, v));
    if (std::abs(s - h.b) > tol) return false;
  }
  return true;
}

// --- free operations --------------------------------------------------------

Polytope convex_hull(const std::vector<Vec>& pts) {
  if (pts.empty()) fail(ErrorCode::EmptyInput, "convex hull of no points");
  return Polytope::from_points(static_cast<int>(pts[0].size()), pts);
}

Polytope halfspace_intersection(const std::vector<Halfspace>& hs, int dim) {
  return Polytope::from_halfspaces(dim, hs);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) fail(ErrorCode::InvalidInput, "minkowski sum dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.dim());
  std::vector<Vec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::from_points(p.dim(), sums);
}

Polytope scale(const Polytope& p, double t) {
  if (p.is_empty()) return Polytope::empty(p.dim());
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(scaled(v, t));
  return Polytope::from_points(p.dim(), pts);
}

Polytope translate(const Polytope& p, const Vec& t) {
  if (p.is_empty()) return Polytope::empty(p.dim());
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(add(v, t));
  return Polytope::from_points(p.dim(), pts);
}

Polytope section(const Polytope& p, const AffineFlat& f) {
  if (p.is_empty()) return Polytope::empty(p.dim());
  if (!p.full_dim())
    fail(ErrorCode::DegenerateBody, "section requires a full-dimensional polytope");
  const int d = p.dim();
  const int k = f.dim();
  if (k < 1 || k >= d) fail(ErrorCode::InvalidInput, "flat dimension must be in [1, dim)");
  for (std::size_t i = 0; i < f.basis.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(dot(f.basis[i], f.basis[j]) - want) > tol::orthonormal)
        fail(ErrorCode::InvalidInput, "flat basis is not orthonormal");
    }

  const double scale = p.scale_hint() + norm(f.point);
  std::vector<Halfspace> sub;
  for (const auto& h : p.halfspaces()) {
    Vec c(k);
    for (int m = 0; m < k; ++m) c[m] = dot(h.a, f.basis[m]);
    const double r = h.b - dot(h.a, f.point);
    if (norm(c) <= 1e-12) {
      if (r < -1e-9 * scale) return Polytope::empty(d);
      continue;
    }
    sub.push_back({std::move(c), r});
  }

  std::vector<Vec> tverts;
  if (k == 1) {
    double lo = -kInf, hi = kInf;
    for (const auto& h : sub) {
      const double c = h.a[0];
      if (c > 0)
        hi = std::min(hi, h.b / c);
      else
        lo = std::max(lo, h.b / c);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      fail(ErrorCode::NumericalFailure, "unbounded section of a bounded polytope");
    if (lo > hi + 1e-9 * scale) return Polytope::empty(d);
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    tverts = {{lo}, {hi}};
  } else {
    Polytope flat2 = Polytope::from_halfspaces(2, sub);
    if (flat2.is_empty()) return Polytope::empty(d);
    tverts = flat2.vertices();
  }

  std::vector<Vec> verts;
  for (const auto& t : tverts) {
    Vec x = f.point;
    for (int m = 0; m < k; ++m) x = axpy(x, t[m], f.basis[m]);
    verts.push_back(x);
  }
  return Polytope::from_points(d, verts);
}

Polytope orthogonal_project(const Polytope& p, const Subspace& L) {
  if (p.is_empty()) return Polytope::empty(p.dim());
  const int d = p.dim();
  if (L.dim_ambient != d) fail(ErrorCode::InvalidInput, "subspace dimension mismatch");
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Vec q = zero_vec(d);
    for (const auto& u : L.basis) q = axpy(q, dot(u, v), u);
    pts.push_back(q);
  }
  return Polytope::from_points(d, pts);
}

std::vector<Vec> project_coords(const Polytope& p, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  if (p.is_empty()) return out;
  out.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Vec t(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) t[m] = dot(basis[m], v);
    out.push_back(std::move(t));
  }
  return out;
}

int affine_dim(const Polytope& p) {
  if (p.is_empty()) fail(ErrorCode::EmptySet, "affine dimension of the empty set");
  return p.affine_dim();
}

double support(const Polytope& p, const Vec& u) { return p.support(u); }

}  // namespace gaugekit
