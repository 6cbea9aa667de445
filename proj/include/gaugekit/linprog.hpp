#ifndef GAUGEKIT_LINPROG_HPP
#define GAUGEKIT_LINPROG_HPP

#include <utility>
#include <vector>

#include "gaugekit/types.hpp"

namespace gaugekit::lp {

// max <objective, x>  subject to  <a_i, x> <= b_i, x free.
struct LinearProgram {
  Vec objective;
  std::vector<std::pair<Vec, double>> constraints;
  int n_vars = 0;
  // Feasibility certificate for the reported optimum, absolute plus
  // relative in b. Probing queries on near-degenerate systems may relax
  // it; radius computations keep the default.
  double feasibility_tol = tol::feasibility;

  void add(Vec a, double b) { constraints.emplace_back(std::move(a), b); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Vec x;             // populated when Optimal
  double value = 0;  // objective at x
};

// Dense two-phase simplex with Bland's rule. Deterministic: identical
// input produces an identical pivot sequence. Throws NumericalFailure
// if the iteration cap 10*(n_vars + constraints) is exceeded or the
// reported optimum fails its own feasibility certificate.
Solution solve(const LinearProgram& lp);

}  // namespace gaugekit::lp

#endif  // GAUGEKIT_LINPROG_HPP
