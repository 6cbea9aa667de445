#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaugekit/geojson.hpp"
#include "gaugekit/verify.hpp"
#include "test_util.hpp"

using namespace gaugekit;

TEST_CASE("oracle circumradius on the box fixture") {
  Polytope k = convex_hull(gktest::unit_square_pts());
  GaugeBody c(convex_hull(gktest::box_pts(-1, 1)));
  CHECK(std::abs(oracle_circumradius(k, c) - 0.5) < 1e-4);
}

TEST_CASE("oracle circumradius agrees with the LP on random pairs") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    Polytope k = random_polytope(rng, 2);
    GaugeBody c = random_gauge(rng, 2);
    const double lp = circumradius(k, c).value;
    const double oracle = oracle_circumradius(k, c);
    INFO("trial " << trial);
    CHECK(std::abs(lp - oracle) <= 1e-4 * (1.0 + lp));
  }
}

TEST_CASE("oracle circumradius agrees with the LP in 3d") {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 4; ++trial) {
    Polytope k = random_polytope(rng, 3);
    GaugeBody c = random_gauge(rng, 3);
    const double lp = circumradius(k, c).value;
    const double oracle = oracle_circumradius(k, c);
    CHECK(std::abs(lp - oracle) <= 1e-4 * (1.0 + lp));
  }
}

TEST_CASE("bi-emptiness bisection recovers R") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope k = random_polytope(rng, 2);
    GaugeBody c = random_gauge(rng, 2);
    const double R = circumradius(k, c).value;
    const double lam = oracle_min_lambda_nonempty_bi(k, c, 1e-8);
    CHECK(std::abs(lam - R) <= 1e-6 * (1.0 + R));
  }
}

TEST_CASE("verify on a homothetic pair passes everything") {
  Polytope k = convex_hull(gktest::unit_square_pts());
  GaugeBody c(convex_hull(gktest::box_pts(-1, 1)));
  const VerifyReport rep = run_verify(k, c, 7);
  CHECK(rep.checks.size() >= 25);
  CHECK(!rep.hard_failed());
  for (const auto& chk : rep.checks) {
    INFO(chk.name);
    CHECK(chk.status != "fail");
  }
}

TEST_CASE("verify on the figure fixture passes everything") {
  Polytope k = convex_hull({{3.4, 3.0}, {3.9, 2.11}, {5.46, 2.59}});
  GaugeBody c(convex_hull(gktest::pentagon_pts(2.0)));
  const VerifyReport rep = run_verify(k, c, 11);
  CHECK(!rep.hard_failed());
}

TEST_CASE("verify on 100 seeded random 2d pairs has zero hard failures") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    Polytope k = random_polytope(rng, 2);
    GaugeBody c = random_gauge(rng, 2);
    const VerifyReport rep = run_verify(k, c, seed);
    INFO("seed " << seed);
    for (const auto& chk : rep.checks) {
      INFO(chk.name << " lhs=" << chk.lhs << " rhs=" << chk.rhs);
      CHECK(chk.status != "fail");
    }
  }
}

TEST_CASE("verify runs clean on a 3d instance") {
  std::mt19937_64 rng(3001);
  Polytope k = random_polytope(rng, 3);
  GaugeBody c = random_gauge(rng, 3);
  const VerifyReport rep = run_verify(k, c, 17);
  CHECK(rep.checks.size() >= 25);
  for (const auto& chk : rep.checks) {
    INFO(chk.name << " lhs=" << chk.lhs << " rhs=" << chk.rhs);
    CHECK(chk.status != "fail");
  }
}

TEST_CASE("reports are deterministic given instance and seed") {
  std::mt19937_64 rng(2020);
  Polytope k = random_polytope(rng, 2);
  GaugeBody c = random_gauge(rng, 2);
  const VerifyReport a = run_verify(k, c, 3);
  const VerifyReport b = run_verify(k, c, 3);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].lhs == b.checks[i].lhs);
    CHECK(a.checks[i].rhs == b.checks[i].rhs);
    CHECK(a.checks[i].status == b.checks[i].status);
  }
}

TEST_CASE("report serialization carries every check") {
  std::mt19937_64 rng(2021);
  Polytope k = random_polytope(rng, 2);
  GaugeBody c = random_gauge(rng, 2);
  const VerifyReport rep = run_verify(k, c, 5);
  const auto j = report_to_json(rep);
  CHECK(j["checks"].size() == rep.checks.size());
  CHECK(j["seed"] == 5);
  bool has_info = false;
  for (const auto& chk : j["checks"])
    if (chk["status"] == "info") has_info = true;
  CHECK(has_info);  // the open-question row is always informational

  const std::string text = report_to_text(rep);
  for (const auto& chk : rep.checks) CHECK(text.find(chk.name) != std::string::npos);
}

TEST_CASE("random generator respects its contract") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    Polytope p = random_polytope(rng, 2);
    CHECK(p.full_dim());
    CHECK(p.vertices().size() >= 3);
    for (const auto& v : p.vertices())
      for (double x : v) CHECK(std::abs(x) <= 1.0 + 1e-12);
    GaugeBody g = random_gauge(rng, 2);
    CHECK(g.body().contains({0.0, 0.0}, 0.0));
  }
}
