#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gaugekit/linprog.hpp"
#include "gaugekit/polytope.hpp"
#include "test_util.hpp"

using namespace gaugekit;

namespace {

// Oracle: p is extreme in S iff no convex combination of the others
// reproduces it (LP feasibility, O(n^3) over the whole set).
bool extreme_by_lp(const std::vector<Vec>& pts, std::size_t idx) {
  const int d = static_cast<int>(pts[idx].size());
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != idx) others.push_back(i);
  const int n = static_cast<int>(others.size());

  lp::LinearProgram p;
  p.n_vars = n;
  p.objective = zero_vec(n);
  for (int row = 0; row < d; ++row) {
    Vec a(n), na(n);
    for (int jcol = 0; jcol < n; ++jcol) {
      a[jcol] = pts[others[jcol]][row];
      na[jcol] = -a[jcol];
    }
    p.add(a, pts[idx][row] + 1e-9);
    p.add(na, -pts[idx][row] + 1e-9);
  }
  Vec ones(n, 1.0), nones(n, -1.0);
  p.add(ones, 1.0 + 1e-9);
  p.add(nones, -1.0 + 1e-9);
  for (int jcol = 0; jcol < n; ++jcol) {
    Vec e = zero_vec(n);
    e[jcol] = -1.0;
    p.add(e, 0.0);
  }
  return lp::solve(p).status == lp::Status::Infeasible;
}

std::vector<Vec> remark_cylinder_pts(int n = 64) {
  std::vector<Vec> pts;
  for (int k = 0; k < n; ++k) {
    const double th = 2 * M_PI * k / n;
    pts.push_back({-1 + std::cos(th), std::sin(th), -1.0});
    pts.push_back({1 + std::cos(th), std::sin(th), 1.0});
  }
  return pts;
}

bool has_vertex(const Polytope& p, const Vec& v, double tol = 1e-12) {
  for (const auto& w : p.vertices())
    if (dist(v, w) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("convex hull drops interior points") {
  Polytope t = convex_hull({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}});
  CHECK(t.vertices().size() == 3);
  CHECK(t.affine_dim() == 2);
  CHECK(!has_vertex(t, {0.2, 0.2}));
}

TEST_CASE("single point hull is zero dimensional") {
  Polytope p = convex_hull({{0.5, -2.0}});
  CHECK(p.affine_dim() == 0);
  CHECK(p.vertices().size() == 1);
}

TEST_CASE("hull of 100 random points matches the LP extreme-point oracle") {
  std::mt19937_64 rng(12345);
  std::vector<Vec> pts;
  for (int i = 0; i < 100; ++i) pts.push_back({runif(rng), runif(rng)});
  Polytope h = convex_hull(pts);

  std::vector<Vec> oracle;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (extreme_by_lp(pts, i)) oracle.push_back(pts[i]);

  REQUIRE(h.vertices().size() == oracle.size());
  for (const auto& v : oracle) CHECK(has_vertex(h, v, 1e-9));
}

TEST_CASE("hull canonical order is CCW from the lexicographic minimum") {
  Polytope sq = convex_hull({{1, 1}, {0, 1}, {0, 0}, {1, 0}});
  const std::vector<Vec> want = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  REQUIRE(sq.vertices().size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(dist(sq.vertices()[i], want[i]) < 1e-15);
}

TEST_CASE("hull idempotence") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> pts;
    for (int i = 0; i < 12; ++i) pts.push_back({runif(rng, -2, 2), runif(rng, -2, 2)});
    Polytope h1 = convex_hull(pts);
    Polytope h2 = convex_hull(h1.vertices());
    REQUIRE(h1.vertices().size() == h2.vertices().size());
    for (std::size_t i = 0; i < h1.vertices().size(); ++i)
      CHECK(h1.vertices()[i] == h2.vertices()[i]);  // exact
  }
}

TEST_CASE("halfspace intersection: unit square") {
  std::vector<Halfspace> hs = {
      {{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  Polytope p = halfspace_intersection(hs, 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.full_dim());
  CHECK(p.contains({0.5, 0.5}, 1e-12));
  CHECK(!p.contains({1.5, 0.5}, 1e-9));
}

TEST_CASE("halfspace intersection: contradictory slabs are empty") {
  std::vector<Halfspace> hs = {{{1, 0}, 0}, {{-1, 0}, -1}};
  Polytope p = halfspace_intersection(hs, 2);
  CHECK(p.is_empty());
}

TEST_CASE("halfspace intersection: unbounded throws") {
  std::vector<Halfspace> hs = {{{1, 0}, 1}, {{0, 1}, 1}};
  CHECK_THROWS_AS(halfspace_intersection(hs, 2), Error);
}

TEST_CASE("pentagon translates against a dense membership oracle") {
  const auto pent = gktest::pentagon_pts(2.0);
  const Vec shifts[] = {{0, 0}, {0.4, 0.1}, {-0.3, 0.3}, {0.2, -0.4}, {-0.1, -0.2}};
  std::vector<Halfspace> hs;
  for (const auto& s : shifts)
    for (const auto& [a, b] : gktest::polygon_hrep(pent))
      hs.push_back({a, b + dot(a, s)});

  Polytope p = halfspace_intersection(hs, 2);
  REQUIRE(!p.is_empty());
  // Vertices satisfy every halfspace within 1e-6 and are tight on >= 2.
  for (const auto& v : p.vertices()) {
    int active = 0;
    for (const auto& h : hs) {
      const double slack = h.b - dot(h.a, v);
      CHECK(slack >= -1e-6);
      if (slack <= 1e-7) ++active;
    }
    CHECK(active >= 2);
  }
  // Every feasible grid point lies inside the computed polygon.
  for (double x = -2.5; x <= 2.5; x += 0.05)
    for (double y = -2.5; y <= 2.6; y += 0.05) {
      bool feas = true;
      for (const auto& h : hs)
        if (h.a[0] * x + h.a[1] * y > h.b) {
          feas = false;
          break;
        }
      if (feas) CHECK(p.contains({x, y}, 1e-6));
    }
}

TEST_CASE("round trip vrep -> hrep -> vrep") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({runif(rng, -1, 1), runif(rng, -1, 1)});
    Polytope p = convex_hull(pts);
    if (!p.full_dim()) continue;
    Polytope q = halfspace_intersection(p.halfspaces(), 2);
    REQUIRE(q.vertices().size() == p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
      CHECK(dist(p.vertices()[i], q.vertices()[i]) < 1e-9);
  }
}

TEST_CASE("minkowski sum of boxes") {
  Polytope a = convex_hull(gktest::unit_square_pts());
  Polytope b = convex_hull(gktest::box_pts(-1, 1));
  Polytope s = minkowski_sum(a, b);
  CHECK(s.support({1, 0}) == doctest::Approx(2.0));
  CHECK(s.support({-1, 0}) == doctest::Approx(1.0));
  CHECK(s.vertices().size() == 4);
}

TEST_CASE("difference body of a triangle is the centered hexagon") {
  Polytope t = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  Polytope d = minkowski_sum(t, reflect(t));
  const std::vector<Vec> want = {{1, 0},  {0, 1},  {-1, 0},
                                 {0, -1}, {1, -1}, {-1, 1}};
  REQUIRE(d.vertices().size() == 6);
  for (const auto& v : want) CHECK(has_vertex(d, v, 1e-12));
}

TEST_CASE("slanted cylinder volume by Monte Carlo") {
  Polytope c = convex_hull(remark_cylinder_pts());
  REQUIRE(c.full_dim());
  // Slicing at fixed heights gives unit 64-gon cross sections, so the
  // volume is 2 * A(64-gon).
  const double a64 = 32.0 * std::sin(2 * M_PI / 64);
  const double expect = 2.0 * a64;

  std::mt19937_64 rng(2024);
  const int n = 200000;
  int inside = 0;
  for (int i = 0; i < n; ++i) {
    const Vec p = {runif(rng, -2, 2), runif(rng, -1, 1), runif(rng, -1, 1)};
    if (c.contains(p, 0.0)) ++inside;
  }
  const double vol = 16.0 * inside / n;
  CHECK(std::abs(vol - expect) / expect < 0.01);
}

TEST_CASE("support function basics and boundary-sampling oracle") {
  Polytope box = convex_hull(gktest::box_pts(-1, 1));
  CHECK(support(box, {1, 0}) == doctest::Approx(1.0));

  Polytope sq = convex_hull(gktest::unit_square_pts());
  Polytope d = minkowski_sum(sq, reflect(sq));
  CHECK(support(d, {1, 1}) == doctest::Approx(2.0));

  std::mt19937_64 rng(5);
  std::vector<Vec> pts;
  for (int i = 0; i < 9; ++i) pts.push_back({runif(rng, -1, 1), runif(rng, -1, 1)});
  Polytope p = convex_hull(pts);
  const Vec u = {runif(rng, -1, 1), runif(rng, -1, 1)};
  double sampled = -kInf;
  const auto& vs = p.vertices();
  const int per_edge = 1000000 / static_cast<int>(vs.size());
  for (std::size_t e = 0; e < vs.size(); ++e) {
    const Vec& a = vs[e];
    const Vec& b = vs[(e + 1) % vs.size()];
    for (int i = 0; i <= per_edge; ++i) {
      const double t = static_cast<double>(i) / per_edge;
      sampled = std::max(sampled, dot(u, axpy(a, t, sub(b, a))));
    }
  }
  CHECK(support(p, u) == doctest::Approx(sampled).epsilon(1e-9));
}

TEST_CASE("support additivity across minkowski sums") {
  std::mt19937_64 rng(31);
  std::vector<Vec> pa, pb;
  for (int i = 0; i < 7; ++i) {
    pa.push_back({runif(rng, -1, 1), runif(rng, -1, 1)});
    pb.push_back({runif(rng, -1, 1), runif(rng, -1, 1)});
  }
  Polytope a = convex_hull(pa), b = convex_hull(pb);
  Polytope s = minkowski_sum(a, b);
  for (int k = 0; k < 16; ++k) {
    const double th = 2 * M_PI * k / 16;
    const Vec u = {std::cos(th), std::sin(th)};
    CHECK(std::abs(s.support(u) - a.support(u) - b.support(u)) < 1e-12);
  }
}

TEST_CASE("section of the unit square by vertical lines") {
  Polytope sq = convex_hull(gktest::unit_square_pts());
  AffineFlat line{{0.5, 0.0}, {{0.0, 1.0}}};
  Polytope s = section(sq, line);
  REQUIRE(!s.is_empty());
  CHECK(s.affine_dim() == 1);
  CHECK(has_vertex(s, {0.5, 0.0}, 1e-12));
  CHECK(has_vertex(s, {0.5, 1.0}, 1e-12));

  AffineFlat miss{{2.0, 0.0}, {{0.0, 1.0}}};
  CHECK(section(sq, miss).is_empty());
}

TEST_CASE("pentagon chord endpoints are boundary points on the line") {
  const Polytope pent = convex_hull(gktest::pentagon_pts(2.0));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const double th = runif(rng, 0, M_PI);
    const Vec dir = {std::cos(th), std::sin(th)};
    const Vec base = {runif(rng, -0.8, 0.8), runif(rng, -0.8, 0.8)};
    Polytope chord = section(pent, {base, {dir}});
    if (chord.is_empty()) continue;
    for (const auto& e : chord.vertices()) {
      // On the line: the residual orthogonal to dir matches the base.
      const Vec rel = sub(e, base);
      const double off = std::abs(rel[0] * dir[1] - rel[1] * dir[0]);
      CHECK(off < 1e-9);
      // On the boundary: the tightest constraint is active.
      double worst = -kInf;
      for (const auto& h : pent.halfspaces()) worst = std::max(worst, dot(h.a, e) - h.b);
      CHECK(std::abs(worst) < 1e-9);
    }
    // Dense scan along the line brackets the same chord.
    if (chord.affine_dim() == 1) {
      double lo = kInf, hi = -kInf;
      for (double t = -6; t <= 6; t += 1e-4) {
        if (pent.contains(axpy(base, t, dir), 1e-12)) {
          lo = std::min(lo, t);
          hi = std::max(hi, t);
        }
      }
      const double got_lo = dot(sub(chord.vertices()[0], base), dir);
      const double got_hi = dot(sub(chord.vertices()[1], base), dir);
      CHECK(std::abs(std::min(got_lo, got_hi) - lo) < 2e-4);
      CHECK(std::abs(std::max(got_lo, got_hi) - hi) < 2e-4);
    }
  }
}

TEST_CASE("projection of the slanted cylinder is the stadium") {
  Polytope c = convex_hull(remark_cylinder_pts());
  Subspace L = Subspace::from_orthonormal(3, {{1, 0, 0}, {0, 1, 0}});
  Polytope stadium = orthogonal_project(c, L);
  CHECK(stadium.affine_dim() == 2);
  // Extremes of the stadium: (+-2, 0, 0) and (0, +-1, 0).
  CHECK(stadium.support({1, 0, 0}) == doctest::Approx(2.0));
  CHECK(stadium.support({0, 1, 0}) == doctest::Approx(1.0));
  CHECK(stadium.support({0, 0, 1}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("projection of a box along z is the unit square") {
  Polytope box = convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                              {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  Subspace L = Subspace::from_orthonormal(3, {{1, 0, 0}, {0, 1, 0}});
  Polytope sq = orthogonal_project(box, L);
  CHECK(sq.affine_dim() == 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.support({1, 1, 0}) == doctest::Approx(2.0));
}

TEST_CASE("projected support equals support for in-subspace directions") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> pts;
    for (int i = 0; i < 10; ++i)
      pts.push_back({runif(rng, -1, 1), runif(rng, -1, 1), runif(rng, -1, 1)});
    Polytope p = convex_hull(pts);
    Subspace L = Subspace::from_orthonormal(3, {{1, 0, 0}, {0, 1, 0}});
    Polytope proj = orthogonal_project(p, L);
    for (int k = 0; k < 12; ++k) {
      const double th = 2 * M_PI * k / 12;
      const Vec u = {std::cos(th), std::sin(th), 0.0};
      CHECK(std::abs(proj.support(u) - p.support(u)) < 1e-12);
    }
  }
}

TEST_CASE("affine dimension of fixtures") {
  CHECK(affine_dim(convex_hull({{0.3, 0.4}})) == 0);
  CHECK(affine_dim(convex_hull({{0, 0}, {1, 0}})) == 1);
  CHECK(affine_dim(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 2);
  CHECK_THROWS_AS(affine_dim(Polytope::empty(2)), Error);
}

TEST_CASE("3d hull of a cube and an octahedron") {
  std::vector<Vec> cube;
  for (int i = 0; i < 8; ++i)
    cube.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
  cube.push_back({0, 0, 0});
  cube.push_back({0.5, 0.5, 0.5});
  Polytope c = convex_hull(cube);
  CHECK(c.vertices().size() == 8);
  CHECK(c.halfspaces().size() == 6);
  CHECK(c.reps_consistent(1e-9));

  Polytope oct = convex_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0},
                              {0, 0, 1}, {0, 0, -1}});
  CHECK(oct.vertices().size() == 6);
  CHECK(oct.halfspaces().size() == 8);
}

TEST_CASE("3d halfspace intersection round trip") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> pts;
    for (int i = 0; i < 10; ++i)
      pts.push_back({runif(rng, -1, 1), runif(rng, -1, 1), runif(rng, -1, 1)});
    Polytope p = convex_hull(pts);
    if (!p.full_dim()) continue;
    Polytope q = halfspace_intersection(p.halfspaces(), 3);
    REQUIRE(q.vertices().size() == p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
      CHECK(dist(p.vertices()[i], q.vertices()[i]) < 1e-8);
  }
}

TEST_CASE("section and projection agree on which lines meet the body") {
  const Polytope pent = convex_hull(gktest::pentagon_pts(2.0));
  std::mt19937_64 rng(818);
  for (int trial = 0; trial < 40; ++trial) {
    const double th = runif(rng, 0, M_PI);
    const Vec dir = {std::cos(th), std::sin(th)};
    const Vec perp = {-std::sin(th), std::cos(th)};
    const Vec x0 = {runif(rng, -3, 3), runif(rng, -3, 3)};
    const bool hit = !section(pent, {x0, {dir}}).is_empty();
    // The line x0 + span(dir) meets P iff x0's projection onto the
    // orthogonal complement lies in P's projection.
    const Polytope shadow = orthogonal_project(pent, Subspace::span(2, {perp}));
    const Vec proj = scaled(perp, dot(perp, x0));
    const bool in_shadow = shadow.contains(proj, 1e-9);
    if (hit != in_shadow) {
      // Allow boundary-grazing lines to disagree within tolerance.
      const double margin = std::abs(dot(perp, x0) - shadow.support(perp));
      const double margin2 = std::abs(dot(perp, x0) + shadow.support(scaled(perp, -1.0)));
      CHECK(std::min(margin, margin2) < 1e-7);
    } else {
      CHECK(hit == in_shadow);
    }
  }
}

TEST_CASE("support of the empty set throws") {
  CHECK_THROWS_AS(support(Polytope::empty(2), {1.0, 0.0}), Error);
}

TEST_CASE("degenerate halfspace intersections collapse cleanly") {
  // Slab pinched to the segment {0} x [0,1].
  std::vector<Halfspace> hs = {
      {{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  Polytope p = halfspace_intersection(hs, 2);
  REQUIRE(!p.is_empty());
  CHECK(p.affine_dim() == 1);
  CHECK(has_vertex(p, {0, 0}, 1e-8));
  CHECK(has_vertex(p, {0, 1}, 1e-8));
}
