#include "gaugekit/linprog.hpp"

#include <algorithm>
#include <cmath>

namespace gaugekit::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;

// Row-major tableau with the reduced-cost row stored last.
struct Tableau {
  int m = 0;      // constraint rows
  int n = 0;      // columns excluding rhs
  std::vector<double> a;
  std::vector<int> basis;

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * (n + 1) + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * (n + 1) + j]; }
  double& rhs(int i) { return at(i, n); }

  void pivot(int pr, int pc) {
    const double p = at(pr, pc);
    for (int j = 0; j <= n; ++j) at(pr, j) /= p;
    for (int i = 0; i <= m; ++i) {  // includes cost row at index m
      if (i == pr) continue;
      const double f = at(i, pc);
      if (f == 0.0) continue;
      for (int j = 0; j <= n; ++j) at(i, j) -= f * at(pr, j);
      at(i, pc) = 0.0;
    }
    basis[pr] = pc;
  }
};

// Bland's rule: entering = lowest-index improving column, leaving =
// min ratio with lowest basic index on ties.
enum class IterResult { Optimal, Unbounded, CapHit };

IterResult run_simplex(Tableau& t, const std::vector<char>& banned, long cap) {
  for (long iter = 0; iter < cap; ++iter) {
    int pc = -1;
    for (int j = 0; j < t.n; ++j) {
      if (banned[j]) continue;
      if (t.at(t.m, j) > kCostTol) {
        pc = j;
        break;
      }
    }
    if (pc < 0) return IterResult::Optimal;

    // Min-ratio rows first; among near-ties prefer the largest pivot
    // element so degenerate bases cannot explode through a ~1e-11 pivot.
    double best = kInf;
    for (int i = 0; i < t.m; ++i) {
      const double aij = t.at(i, pc);
      if (aij <= kPivotTol) continue;
      best = std::min(best, t.rhs(i) / aij);
    }
    if (!std::isfinite(best)) return IterResult::Unbounded;
    int pr = -1;
    const double band = best + 1e-10 * (1.0 + std::abs(best));
    for (int i = 0; i < t.m; ++i) {
      const double aij = t.at(i, pc);
      if (aij <= kPivotTol) continue;
      if (t.rhs(i) / aij > band) continue;
      if (pr < 0 || aij > t.at(pr, pc) * (1.0 + 1e-12) ||
          (aij >= t.at(pr, pc) * (1.0 - 1e-12) && t.basis[i] < t.basis[pr]))
        pr = i;
    }
    t.pivot(pr, pc);
  }
  return IterResult::CapHit;
}

}  // namespace

Solution solve(const LinearProgram& lp) {
  const int n = lp.n_vars;
  const int m = static_cast<int>(lp.constraints.size());
  if (n < 1) fail(ErrorCode::InvalidInput, "linear program must have n_vars >= 1");
  if (static_cast<int>(lp.objective.size()) != n)
    fail(ErrorCode::InvalidInput, "objective size does not match n_vars");
  for (const auto& [a, b] : lp.constraints) {
    if (static_cast<int>(a.size()) != n || !all_finite(a) || !std::isfinite(b))
      fail(ErrorCode::InvalidInput, "constraint coefficients must be finite vectors of size n_vars");
  }

  // Columns: x+ (n), x- (n), slack (m), artificial (as needed).
  int n_art = 0;
  for (const auto& c : lp.constraints)
    if (c.second < 0.0) ++n_art;

  Tableau t;
  t.m = m;
  t.n = 2 * n + m + n_art;
  t.a.assign(static_cast<std::size_t>(m + 1) * (t.n + 1), 0.0);
  t.basis.assign(m, -1);

  int art = 2 * n + m;
  for (int i = 0; i < m; ++i) {
    const auto& [a, b] = lp.constraints[i];
    const double s = b < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      t.at(i, j) = s * a[j];
      t.at(i, n + j) = -s * a[j];
    }
    t.at(i, 2 * n + i) = s;
    t.rhs(i) = s * b;
    if (b < 0.0) {
      t.at(i, art) = 1.0;
      t.basis[i] = art++;
    } else {
      t.basis[i] = 2 * n + i;
    }
  }

  const long cap = 10L * (n + m) + 50;
  std::vector<char> banned(t.n, 0);

  // Phase 1: drive artificial variables to zero.
  if (n_art > 0) {
    for (int j = 0; j <= t.n; ++j) {
      double s = 0.0;
      for (int i = 0; i < m; ++i)
        if (t.basis[i] >= 2 * n + m) s += t.at(i, j);
      t.at(t.m, j) = s;
    }
    for (int j = 2 * n + m; j < t.n; ++j) t.at(t.m, j) -= 1.0;

    const IterResult r = run_simplex(t, banned, cap);
    if (r == IterResult::CapHit)
      fail(ErrorCode::NumericalFailure, "simplex iteration cap exceeded in phase 1");
    double scale = 1.0;
    for (const auto& c : lp.constraints) scale = std::max(scale, std::abs(c.second));
    if (t.rhs(t.m) > tol::feasibility * scale) return {Status::Infeasible, {}, 0.0};

    // Pivot lingering artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < 2 * n + m) continue;
      int pc = -1;
      for (int j = 0; j < 2 * n + m; ++j) {
        if (std::abs(t.at(i, j)) > kPivotTol) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) t.pivot(i, pc);
    }
    for (int j = 2 * n + m; j < t.n; ++j) banned[j] = 1;
  }

  // Phase 2: the real objective, rebuilt against the current basis.
  auto cost = [&](int j) -> double {
    if (j < n) return lp.objective[j];
    if (j < 2 * n) return -lp.objective[j - n];
    return 0.0;
  };
  for (int j = 0; j <= t.n; ++j) t.at(t.m, j) = 0.0;
  for (int j = 0; j < t.n; ++j) t.at(t.m, j) = cost(j);
  for (int i = 0; i < m; ++i) {
    const double cb = cost(t.basis[i]);
    if (cb == 0.0) continue;
    for (int j = 0; j <= t.n; ++j) t.at(t.m, j) -= cb * t.at(i, j);
  }

  const IterResult r = run_simplex(t, banned, cap);
  if (r == IterResult::CapHit)
    fail(ErrorCode::NumericalFailure, "simplex iteration cap exceeded in phase 2");
  if (r == IterResult::Unbounded) return {Status::Unbounded, {}, kInf};

  Vec x = zero_vec(n);
  for (int i = 0; i < m; ++i) {
    const int b = t.basis[i];
    if (b < n)
      x[b] += t.rhs(i);
    else if (b < 2 * n)
      x[b - n] -= t.rhs(i);
  }

  // Gross-error audit: the raw tableau vertex must reproduce the
  // tableau's own optimum before any polishing moves it.
  {
    const double raw = dot(lp.objective, x);
    const double tab_value = -t.rhs(t.m);
    if (std::abs(raw - tab_value) > 1e-6 * (1.0 + std::abs(raw)))
      fail(ErrorCode::NumericalFailure, "simplex objective certificate mismatch");
  }

  // Polish the vertex: re-solve the tight constraints (nonbasic slacks)
  // by least squares on the original data, which beats the pivoted
  // tableau's accumulated roundoff.
  {
    std::vector<char> slack_basic(m, 0);
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= 2 * n && t.basis[i] < 2 * n + m) slack_basic[t.basis[i] - 2 * n] = 1;
    std::vector<int> act;
    for (int i = 0; i < m; ++i)
      if (!slack_basic[i]) act.push_back(i);

    if (static_cast<int>(act.size()) >= n) {
      std::vector<double> g(static_cast<std::size_t>(n) * n, 0.0);
      Vec y = zero_vec(n);
      for (int i : act) {
        const auto& [a, b] = lp.constraints[i];
        for (int p = 0; p < n; ++p) {
          y[p] += a[p] * b;
          for (int q = 0; q < n; ++q) g[static_cast<std::size_t>(p) * n + q] += a[p] * a[q];
        }
      }
      bool ok = true;
      for (int col = 0; col < n && ok; ++col) {  // partial-pivot elimination
        int piv = col;
        for (int row = col + 1; row < n; ++row)
          if (std::abs(g[static_cast<std::size_t>(row) * n + col]) >
              std::abs(g[static_cast<std::size_t>(piv) * n + col]))
            piv = row;
        if (std::abs(g[static_cast<std::size_t>(piv) * n + col]) < 1e-14) {
          ok = false;
          break;
        }
        if (piv != col) {
          for (int q = 0; q < n; ++q)
            std::swap(g[static_cast<std::size_t>(col) * n + q],
                      g[static_cast<std::size_t>(piv) * n + q]);
          std::swap(y[col], y[piv]);
        }
        for (int row = col + 1; row < n; ++row) {
          const double f = g[static_cast<std::size_t>(row) * n + col] /
                           g[static_cast<std::size_t>(col) * n + col];
          if (f == 0.0) continue;
          for (int q = col; q < n; ++q)
            g[static_cast<std::size_t>(row) * n + q] -= f * g[static_cast<std::size_t>(col) * n + q];
          y[row] -= f * y[col];
        }
      }
      if (ok) {
        for (int col = n - 1; col >= 0; --col) {
          for (int q = col + 1; q < n; ++q)
            y[col] -= g[static_cast<std::size_t>(col) * n + q] * y[q];
          y[col] /= g[static_cast<std::size_t>(col) * n + col];
        }
        auto worst = [&](const Vec& cand) {
          double w = 0.0;
          for (const auto& [a, b] : lp.constraints)
            w = std::max(w, (dot(a, cand) - b) / (1.0 + std::abs(b)));
          return w;
        };
        const double obj_x = dot(lp.objective, x);
        if (all_finite(y) && worst(y) <= worst(x) + 1e-15 &&
            dot(lp.objective, y) >= obj_x - tol::feasibility * (1.0 + std::abs(obj_x)))
          x = y;
      }
    }
  }

  // Residual feasibility sweep for ill-conditioned vertices: cyclic
  // projection onto the violated halfspaces. Moves are bounded by the
  // violations themselves, so the objective drifts by at most their sum.
  {
    auto worst = [&](const Vec& cand) {
      double w = 0.0;
      for (const auto& [a, b] : lp.constraints)
        w = std::max(w, (dot(a, cand) - b) / (1.0 + std::abs(b)));
      return w;
    };
    if (worst(x) > 0.25 * tol::feasibility) {
      Vec z = x;
      for (int sweep = 0; sweep < 200 && worst(z) > 1e-13; ++sweep) {
        for (const auto& [a, b] : lp.constraints) {
          const double v = dot(a, z) - b;
          if (v > 0.0) z = axpy(z, -v / norm2(a), a);
        }
      }
      if (worst(z) < worst(x)) x = z;
    }
  }

  Solution sol;
  sol.status = Status::Optimal;
  sol.x = x;
  sol.value = dot(lp.objective, x);

  // Certify the result against the original data.
  for (const auto& [a, b] : lp.constraints) {
    if (dot(a, x) > b + lp.feasibility_tol * (1.0 + std::abs(b)))
      fail(ErrorCode::NumericalFailure, "simplex returned an infeasible optimum");
  }
  return sol;
}

}  // namespace gaugekit::lp
