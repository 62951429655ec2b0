// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared pieces of the 1-D minimizers: tridiagonal solves, Gauss-Legendre
// rules and the preconditioned Armijo descent loop.

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <span>
#include <vector>

#include "sharpc/error.hpp"
#include "sharpc/oracle1d.hpp"

namespace sharpc::oracle1d::detail {

/// Solves the symmetric tridiagonal system with diagonal d and off-diagonal
/// e (e[i] couples i and i+1) in place of b.
inline void solve_tridiagonal(std::span<const double> d, std::span<const double> e, std::span<double> b) {
  const auto n = d.size();
  std::vector<double> c(n);
  double beta = d[0];
  b[0] /= beta;
  for (std::size_t i = 1; i < n; ++i) {
    c[i] = e[i - 1] / beta;
    beta = d[i] - e[i - 1] * c[i];
    b[i] = (b[i] - e[i - 1] * b[i - 1]) / beta;
  }
  for (std::size_t i = n - 1; i-- > 0;) b[i] -= c[i + 1] * b[i + 1];
}

struct GaussRule {
  std::vector<double> x;  // nodes on [0, 1]
  std::vector<double> w;  // weights summing to 1
};

/// m-point Gauss-Legendre rule on [0, 1] (Newton on P_m).
inline GaussRule gauss_legendre(int m) {
  GaussRule r{std::vector<double>(m), std::vector<double>(m)};
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= m; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = m * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[m - 1 - i] = 0.5 * (1.0 + z);
    r.w[m - 1 - i] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

struct DescentResult {
  double objective;
  int iterations;
  double kkt;
  bool converged;
};

/// Armijo backtracking along d = direction(u) from t = 1, u rescaled to
/// max |u| = 1 after every accepted step (F is scale invariant).
/// `direction(u, d)` fills the step and returns the slope g.d (< 0).
template <class Objective, class Direction>
DescentResult descend(std::vector<double>& u, Objective&& objective, Direction&& direction,
                      const RatioOptions& options) {
  std::vector<double> d(u.size());
  std::vector<double> trial(u.size());
  double f = objective(u);
  std::deque<double> history{f};
  double kkt = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const double slope = direction(u, d);
    kkt = std::sqrt(std::max(-slope, 0.0));
    if (!(slope < 0.0)) return {f, it, kkt, true};
    double t = 1.0;
    double ft = f;
    bool accepted = false;
    while (t >= 1e-12) {
      for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] + t * d[i];
      ft = objective(trial);
      if (ft <= f + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    // No decrease left at rounding level: the iterate is stationary.
    if (!accepted) return {f, it, kkt, true};
    double scale = 0.0;
    for (double v : trial) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = trial[i] / scale;
    f = ft;
    history.push_back(f);
    if (static_cast<int>(history.size()) > options.stall_window + 1) history.pop_front();
    if (static_cast<int>(history.size()) == options.stall_window + 1 &&
        std::abs(history.front() - f) < options.stall_tolerance * std::abs(f))
      return {f, it, kkt, true};
  }
  if (!options.allow_budget_exhaustion)
    throw ConvergenceError("quotient minimization: iteration budget exhausted");
  return {f, options.max_iterations, kkt, false};
}

}  // namespace sharpc::oracle1d::detail
