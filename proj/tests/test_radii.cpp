#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "gaugekit/linprog.hpp"
#include "gaugekit/radii.hpp"
#include "test_util.hpp"

using namespace gaugekit;
using F = Quantity::Family;
using M = Quantity::Mode;
using P = Quantity::Position;

namespace {

GaugeBody box_gauge() { return GaugeBody(convex_hull(gktest::box_pts(-1, 1))); }

Polytope rand_poly(std::mt19937_64& rng, int d, int n) {
  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i) {
    Vec p(d);
    for (int k = 0; k < d; ++k) p[k] = runif(rng, -1, 1);
    pts.push_back(p);
  }
  return convex_hull(pts);
}

GaugeBody rand_gauge(std::mt19937_64& rng, int d, int n) {
  while (true) {
    Polytope p = rand_poly(rng, d, n);
    if (!p.full_dim()) continue;
    return GaugeBody(translate(p, scaled(p.centroid(), -1.0)));
  }
}

Polytope rand_full(std::mt19937_64& rng, int d, int n) {
  while (true) {
    Polytope p = rand_poly(rng, d, n);
    if (p.full_dim()) return p;
  }
}

}  // namespace

TEST_CASE("quantity naming round trips") {
  for (const auto& q : all_quantities(3)) {
    const Quantity back = parse_quantity(to_string(q));
    CHECK(back.family == q.family);
    CHECK(back.mode == q.mode);
    CHECK(back.position == q.position);
    CHECK(back.j == q.j);
  }
  CHECK(to_string(Quantity{F::R, M::pi, P::sup, 1}) == "R-pi-sup:1");
  CHECK(to_string(Quantity{F::r, M::sigma, P::inf, 2}) == "r-sigma-inf:2");
  CHECK_THROWS_AS(parse_quantity("R-pi:1"), Error);
  CHECK_THROWS_AS(parse_quantity("x-pi-sup:1"), Error);
}

TEST_CASE("cylinder circumradius collapses at trivial subspaces") {
  std::mt19937_64 rng(1);
  Polytope k = rand_full(rng, 2, 7);
  GaugeBody c = rand_gauge(rng, 2, 7);
  const Subspace zero{2, {}};
  CHECK(cylinder_circumradius(k, c, zero) ==
        doctest::Approx(circumradius(k, c).value).epsilon(1e-12));
  const Subspace full = Subspace::from_orthonormal(2, {{1, 0}, {0, 1}});
  CHECK(cylinder_circumradius(k, c, full) == 0.0);
}

TEST_CASE("cylinder circumradius matches the support-ratio formula in 2d") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    Polytope k = rand_full(rng, 2, 7);
    GaugeBody c = rand_gauge(rng, 2, 7);
    const Polytope kk = difference_body(k);
    const Polytope cc = difference_body(c.body());
    for (int i = 0; i < 20; ++i) {
      const double th = runif(rng, 0, M_PI);
      const Vec dir = {std::cos(th), std::sin(th)};
      const Vec u = {-std::sin(th), std::cos(th)};  // u perpendicular to L
      const double got = cylinder_circumradius(k, c, Subspace::span(2, {dir}));
      const double want = kk.support(u) / cc.support(u);
      CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("cylinder circumradius equals the containment LP with per-vertex shifts") {
  // Reference formulation: minimize lambda over center x and flat shifts
  // t_k with <a_i, v_k - x - dir t_k> <= lambda (unit-offset normals).
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Polytope k = rand_full(rng, 2, 6);
    GaugeBody c = rand_gauge(rng, 2, 6);
    const double th = runif(rng, 0, M_PI);
    const Vec dir = {std::cos(th), std::sin(th)};

    const auto& verts = k.vertices();
    const int nv = static_cast<int>(verts.size());
    lp::LinearProgram p;
    p.n_vars = 2 + nv + 1;  // x, t_k, lambda
    p.objective = zero_vec(p.n_vars);
    p.objective[p.n_vars - 1] = -1.0;
    for (const auto& h : c.unit_halfspaces()) {
      for (int kv = 0; kv < nv; ++kv) {
        Vec row = zero_vec(p.n_vars);
        row[0] = -h.a[0];
        row[1] = -h.a[1];
        row[2 + kv] = -dot(h.a, dir);
        row[p.n_vars - 1] = -1.0;
        p.add(std::move(row), -dot(h.a, verts[kv]));
      }
    }
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    const double want = s.x[p.n_vars - 1];
    const double got = cylinder_circumradius(k, c, Subspace::span(2, {dir}));
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("cylinder inradius duality and conventions") {
  std::mt19937_64 rng(4);
  Polytope k = rand_full(rng, 2, 8);
  GaugeBody c = rand_gauge(rng, 2, 8);

  const Subspace zero{2, {}};
  CHECK(cylinder_inradius(k, c, zero) ==
        doctest::Approx(inradius(k, c).value).epsilon(1e-9));
  const Subspace full = Subspace::from_orthonormal(2, {{1, 0}, {0, 1}});
  CHECK(std::isinf(cylinder_inradius(k, c, full)));

  const GaugeBody kg(translate(k, scaled(k.centroid(), -1.0)));
  for (int i = 0; i < 25; ++i) {
    const double th = runif(rng, 0, M_PI);
    const Subspace L = Subspace::span(2, {{std::cos(th), std::sin(th)}});
    const double prod =
        cylinder_inradius(k, c, L) * cylinder_circumradius(c.body(), kg, L);
    CHECK(prod == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("section circumradius extremal fixtures") {
  std::mt19937_64 rng(5);
  Polytope sq = convex_hull(gktest::unit_square_pts());
  GaugeBody c = box_gauge();

  // j = d collapses to the plain circumradius.
  const Subspace full = Subspace::from_orthonormal(2, {{1, 0}, {0, 1}});
  CHECK(section_circumradius_extremal(sq, c, full) ==
        doctest::Approx(circumradius(sq, c).value).epsilon(1e-12));

  // Chords of the unit square against the box gauge: every maximal chord
  // has circumradius 1/2.
  const Subspace xaxis = Subspace::span(2, {{1.0, 0.0}});
  CHECK(section_circumradius_extremal(sq, c, xaxis) == doctest::Approx(0.5).epsilon(1e-6));

  // Dense offset oracle on a triangle/pentagon pair over random angles.
  Polytope tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  GaugeBody pent(convex_hull(gktest::pentagon_pts(2.0)));
  for (int i = 0; i < 50; ++i) {
    const double th = runif(rng, 0, M_PI);
    const Vec dir = {std::cos(th), std::sin(th)};
    const Vec off = {-std::sin(th), std::cos(th)};
    const Subspace L = Subspace::span(2, {dir});
    const double got = section_circumradius_extremal(tri, pent, L);

    double tlo = kInf, thi = -kInf;
    for (const auto& v : tri.vertices()) {
      tlo = std::min(tlo, dot(off, v));
      thi = std::max(thi, dot(off, v));
    }
    auto value_at = [&](double t) {
      Polytope s = section(tri, {scaled(off, t), {dir}});
      return s.is_empty() ? 0.0 : circumradius_raw(s, pent.body());
    };
    // 201-point offset scan, zoomed twice around the winner.
    double want = 0.0, t_best = tlo, w = thi - tlo, c0 = 0.5 * (tlo + thi);
    for (int zoom = 0; zoom < 3; ++zoom) {
      for (int g = 0; g <= 200; ++g) {
        const double t = c0 - w / 2 + w * g / 200.0;
        const double v = value_at(t);
        if (v > want) {
          want = v;
          t_best = t;
        }
      }
      c0 = t_best;
      w /= 50.0;
    }
    CHECK(got >= want - 1e-6);           // search dominates the scan
    CHECK(std::abs(got - want) < 1e-3);  // and stays within its resolution
  }
}

TEST_CASE("section inradius extremal fixtures") {
  Polytope sq = convex_hull(gktest::unit_square_pts());
  GaugeBody c = box_gauge();
  const Subspace full = Subspace::from_orthonormal(2, {{1, 0}, {0, 1}});
  CHECK(section_inradius_extremal(sq, c, full) ==
        doctest::Approx(inradius(sq, c).value).epsilon(1e-12));

  // K = C gives value 1 at j = d (identity containment).
  GaugeBody cb = box_gauge();
  Polytope box = convex_hull(gktest::box_pts(-1, 1));
  CHECK(section_inradius_extremal(box, cb, full) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("section inradius j=1 sup over angles meets the half diameter") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 4; ++trial) {
    Polytope k = rand_full(rng, 2, 7);
    GaugeBody c = rand_gauge(rng, 2, 7);
    const double half_D = 0.5 * diameter(k, c);
    double sup = 0.0;
    const int n = 720;
    for (int i = 0; i < n; ++i) {
      const double th = M_PI * i / n;
      const Subspace L = Subspace::span(2, {{std::cos(th), std::sin(th)}});
      sup = std::max(sup, section_inradius_extremal(k, c, L));
    }
    CHECK(std::abs(sup - half_D) < 5e-3 * (1.0 + half_D));
  }
}

TEST_CASE("successive radius collapses at j = d") {
  std::mt19937_64 rng(7);
  for (int d : {1, 2, 3}) {
    Polytope k = rand_full(rng, d, 6 + d);
    GaugeBody c = rand_gauge(rng, d, 6 + d);
    const double R = circumradius(k, c).value;
    const double r = inradius(k, c).value;
    for (M m : {M::pi, M::sigma})
      for (P p : {P::sup, P::inf}) {
        CHECK(successive_radius(k, c, {F::R, m, p, d}).value ==
              doctest::Approx(R).epsilon(1e-9));
        CHECK(successive_radius(k, c, {F::r, m, p, d}).value ==
              doctest::Approx(r).epsilon(1e-9));
      }
  }
}

TEST_CASE("d=1 slab fixture gives one third") {
  Polytope k = convex_hull({Vec{0.0}, Vec{1.0}});
  GaugeBody c(convex_hull({Vec{-1.0}, Vec{2.0}}));
  CHECK(successive_radius(k, c, {F::R, M::pi, P::sup, 1}).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("triangle pair: exact j=1 paths against dense angle scans") {
  Polytope k = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  GaugeBody c(convex_hull({{-1, -1}, {1, 0}, {0, 1}}));
  const Polytope kk = difference_body(k);
  const Polytope cc = difference_body(c.body());

  double lo = kInf, hi = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double th = M_PI * i / n;
    const Vec u = {std::cos(th), std::sin(th)};
    const double ratio = kk.support(u) / cc.support(u);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const double rpi1 = successive_radius(k, c, {F::R, M::pi, P::inf, 1}).value;
  CHECK(std::abs(rpi1 - lo) < 1e-4);
  CHECK(rpi1 == doctest::Approx(0.5 * width(k, c)).epsilon(1e-12));

  const double Rpi1 = successive_radius(k, c, {F::R, M::pi, P::sup, 1}).value;
  CHECK(std::abs(Rpi1 - hi) < 1e-4);

  // Searched values agree with the exact ones.
  const double searched =
      successive_radius(k, c, {F::R, M::pi, P::inf, 1}, RadiusPolicy::ForceSearch).value;
  CHECK(std::abs(searched - rpi1) < 1e-4);
  const double searched_sup =
      successive_radius(k, c, {F::R, M::pi, P::sup, 1}, RadiusPolicy::ForceSearch).value;
  CHECK(std::abs(searched_sup - Rpi1) < 1e-4);
}

TEST_CASE("lemma identities on random 2d pairs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    Polytope k = rand_full(rng, 2, 8);
    GaugeBody c = rand_gauge(rng, 2, 8);
    const double half_w = 0.5 * width(k, c);
    const double half_D = 0.5 * diameter(k, c);

    CHECK(successive_radius(k, c, {F::R, M::pi, P::inf, 1}).value ==
          doctest::Approx(half_w).epsilon(1e-8));
    CHECK(successive_radius(k, c, {F::R, M::sigma, P::inf, 1}).value ==
          doctest::Approx(half_w).epsilon(1e-8));
    CHECK(successive_radius(k, c, {F::r, M::pi, P::inf, 1}).value ==
          doctest::Approx(half_w).epsilon(1e-8));
    CHECK(successive_radius(k, c, {F::r, M::sigma, P::inf, 1}).value ==
          doctest::Approx(half_w).epsilon(1e-8));

    CHECK(successive_radius(k, c, {F::R, M::pi, P::sup, 1}).value ==
          doctest::Approx(half_D).epsilon(1e-8));
    CHECK(successive_radius(k, c, {F::R, M::sigma, P::sup, 1}).value ==
          doctest::Approx(half_D).epsilon(1e-8));
    CHECK(successive_radius(k, c, {F::r, M::sigma, P::sup, 1}).value ==
          doctest::Approx(half_D).epsilon(1e-8));

    // Remark closed form for r_pi^1.
    const double closed = support_ratio_sup(k, c.body());
    CHECK(successive_radius(k, c, {F::r, M::pi, P::sup, 1}).value ==
          doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("duality products for the pi families") {
  std::mt19937_64 rng(9);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < (d == 2 ? 8 : 3); ++trial) {
      Polytope k = rand_full(rng, d, 7);
      GaugeBody c = rand_gauge(rng, d, 7);
      const GaugeBody kg(translate(k, scaled(k.centroid(), -1.0)));
      for (int j = 1; j <= d; ++j) {
        const double a = successive_radius(k, c, {F::r, M::pi, P::sup, j}).value *
                         successive_radius(c.body(), kg, {F::R, M::pi, P::inf, j}).value;
        CHECK(a == doctest::Approx(1.0).epsilon(1e-6));
        const double b = successive_radius(k, c, {F::r, M::pi, P::inf, j}).value *
                         successive_radius(c.body(), kg, {F::R, M::pi, P::sup, j}).value;
        CHECK(b == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("full profile of a homothetic pair collapses to one value") {
  Polytope k = convex_hull(gktest::unit_square_pts());
  GaugeBody c = box_gauge();
  Profile prof = full_profile(k, c);
  REQUIRE(prof.entries.size() == 16);
  for (const auto& e : prof.entries) {
    INFO(to_string(e.quantity));
    CHECK(e.result.value == doctest::Approx(0.5).epsilon(1e-8));
  }
  for (const auto& ch : prof.chains) CHECK(ch.ok);
}

TEST_CASE("profile chains hold on random 2d instances") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope k = rand_full(rng, 2, 8);
    GaugeBody c = rand_gauge(rng, 2, 8);
    Profile prof = full_profile(k, c);
    for (const auto& ch : prof.chains) {
      INFO(ch.family << " violation " << ch.worst_violation);
      CHECK(ch.ok);
    }
  }
}

TEST_CASE("profile chains hold on random 3d instances") {
  std::mt19937_64 rng(11);
  SearchParams fast;
  fast.hemisphere_grid = 200;
  fast.offset_grid = 17;
  for (int trial = 0; trial < 3; ++trial) {
    Polytope k = rand_full(rng, 3, 8);
    GaugeBody c = rand_gauge(rng, 3, 8);
    Profile prof = full_profile(k, c, fast);
    REQUIRE(prof.entries.size() == 24);
    for (const auto& ch : prof.chains) {
      INFO(ch.family << " violation " << ch.worst_violation);
      CHECK(ch.ok);
    }
  }
}

TEST_CASE("3d profile finishes inside the runtime budget") {
  std::vector<Vec> box3;
  for (int i = 0; i < 8; ++i)
    box3.push_back({i & 1 ? 1.0 : 0.0, i & 2 ? 1.0 : 0.0, i & 4 ? 1.0 : 0.0});
  Polytope k = convex_hull(box3);
  GaugeBody c(convex_hull({{1.2, 0, 0}, {-1.2, 0, 0}, {0, 1.1, 0}, {0, -1.1, 0},
                           {0, 0, 1.3}, {0, 0, -1.3}}));
  const auto t0 = std::chrono::steady_clock::now();
  Profile prof = full_profile(k, c);
  const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(prof.entries.size() == 24);
  CHECK(dt < 60.0);
  for (const auto& ch : prof.chains) CHECK(ch.ok);
}

TEST_CASE("translation and scaling invariance for searched 3d quantities") {
  std::mt19937_64 rng(13);
  SearchParams fast;
  fast.hemisphere_grid = 120;
  fast.offset_grid = 13;
  Polytope k = rand_full(rng, 3, 7);
  GaugeBody c = rand_gauge(rng, 3, 7);
  const Quantity q{F::R, M::sigma, P::inf, 2};
  const double base = successive_radius(k, c, q, RadiusPolicy::Auto, fast).value;

  const Vec t = {0.25, -0.5, 0.125};
  const double shifted =
      successive_radius(translate(k, t), c, q, RadiusPolicy::Auto, fast).value;
  CHECK(std::abs(shifted - base) < 1e-4 * (1.0 + base));

  const double scaled_v =
      successive_radius(scale(k, 2.0), GaugeBody(scale(c.body(), 0.5)), q, RadiusPolicy::Auto, fast)
          .value;
  CHECK(scaled_v == doctest::Approx(4.0 * base).epsilon(1e-6));
}

TEST_CASE("set monotonicity across the whole profile") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 5; ++trial) {
    Polytope k = rand_full(rng, 2, 8);
    GaugeBody c = rand_gauge(rng, 2, 8);
    const Vec kc = k.centroid();
    Polytope ks = translate(scale(translate(k, scaled(kc, -1.0)), 0.8), kc);
    GaugeBody cb(scale(c.body(), 1.2));
    const Profile big = full_profile(k, c);
    const Profile small = full_profile(ks, cb);
    for (std::size_t i = 0; i < big.entries.size(); ++i) {
      INFO(to_string(big.entries[i].quantity));
      CHECK(small.entries[i].result.value <=
            big.entries[i].result.value + 5e-3 * (1.0 + big.entries[i].result.value));
    }
  }
}

TEST_CASE("unsupported dimensions and indices are rejected") {
  std::mt19937_64 rng(14);
  Polytope k = rand_full(rng, 2, 6);
  GaugeBody c = rand_gauge(rng, 2, 6);
  CHECK_THROWS_AS(successive_radius(k, c, {F::R, M::pi, P::sup, 0}), Error);
  CHECK_THROWS_AS(successive_radius(k, c, {F::R, M::pi, P::sup, 3}), Error);
  Polytope seg = convex_hull({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(successive_radius(seg, c, {F::r, M::pi, P::sup, 1}), Error);
}
