#ifndef GAUGEKIT_VERIFY_HPP
#define GAUGEKIT_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gaugekit/radii.hpp"

namespace gaugekit {

struct CheckResult {
  std::string name;
  std::string lhs;   // value or set descriptor
  std::string rhs;
  double tolerance = 0.0;
  std::string status;  // pass | fail | info
};

struct VerifyReport {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool hard_failed() const {
    for (const auto& c : checks)
      if (c.status == "fail") return true;
    return false;
  }
};

// Brute-force circumradius: lattice coordinate descent over candidate
// centers with shrinking refinement, evaluating sup_k gamma_C(v_k - x)
// directly. Shares only gamma and the vector helpers with the LP path.
double oracle_circumradius(const Polytope& K, const GaugeBody& C);

// Bisection on lambda for the smallest radius with nonempty ball
// intersection (the identity tying bi emptiness to R).
double oracle_min_lambda_nonempty_bi(const Polytope& K, const GaugeBody& C, double tol);

// Runs every identity in the check manifest against the instance and
// collects pass/fail/info rows (failures are recorded, not thrown).
VerifyReport run_verify(const Polytope& K, const GaugeBody& C, std::uint64_t seed);

// Seeded random instances: hulls of 4..10 uniform points in [-1,1]^d;
// gauge bodies are recentered so 0 is strictly interior.
Polytope random_polytope(std::mt19937_64& rng, int dim, int min_pts = 4, int max_pts = 10);
GaugeBody random_gauge(std::mt19937_64& rng, int dim);

std::string report_to_text(const VerifyReport& rep);

}  // namespace gaugekit

#endif  // GAUGEKIT_VERIFY_HPP
