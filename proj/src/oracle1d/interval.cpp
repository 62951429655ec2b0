// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>

#include "descent.hpp"
#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/oracle1d.hpp"

namespace sharpc::oracle1d {

namespace {

constexpr double kPi = std::numbers::pi;

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

std::vector<double> grid(int n) {
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = static_cast<double>(i) / n;
  return x;
}

void project(std::vector<double>& u, Constraint c, const std::vector<double>& w) {
  if (c == Constraint::ZeroBoundary) {
    u.front() = 0.0;
    u.back() = 0.0;
  } else {
    const double mean = std::inner_product(w.begin(), w.end(), u.begin(), 0.0) / std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& v : u) v -= mean;
  }
}

}  // namespace

void validate(const RatioProblem& problem) {
  if (!(problem.p > 1.0)) throw DomainError("ratio problem: p must exceed 1");
  if (!std::isfinite(problem.q)) throw DomainError("ratio problem: q must be finite");
  if (problem.grid_size < 64) throw DomainError("ratio problem: grid size must be at least 64");
  const catalog::ExponentSpec spec{1, problem.p, problem.q, catalog::Context::OneDim};
  if (!catalog::is_admissible(spec)) throw InadmissibleError(catalog::admissibility_violation(spec));
}

IntervalQuotient::IntervalQuotient(double p, double q, int n) : p_(p), q_(q), n_(n), h_(1.0 / n), w_(n + 1, 1.0 / n) {
  if (n < 1) throw DomainError("IntervalQuotient: need at least one cell");
  w_.front() = w_.back() = 0.5 * h_;
}

double IntervalQuotient::energy(std::span<const double> u) const {
  double e = 0.0;
  for (int i = 0; i < n_; ++i) e += std::pow(std::abs((u[i + 1] - u[i]) / h_), p_);
  return h_ * e;
}

double IntervalQuotient::mass(std::span<const double> u) const {
  double m = 0.0;
  for (int i = 0; i <= n_; ++i) m += w_[i] * std::pow(std::abs(u[i]), q_);
  return m;
}

double IntervalQuotient::objective(std::span<const double> u) const {
  return std::log(energy(u)) / p_ - std::log(mass(u)) / q_;
}

double IntervalQuotient::constant(std::span<const double> u) const { return std::exp(-objective(u)); }

void IntervalQuotient::gradient(std::span<const double> u, std::span<double> g) const {
  const double e = energy(u);
  const double m = mass(u);
  std::fill(g.begin(), g.end(), 0.0);
  for (int i = 0; i < n_; ++i) {
    const double d = (u[i + 1] - u[i]) / h_;
    const double s = std::pow(std::abs(d), p_ - 1.0) * sign(d) / e;
    g[i] -= s;
    g[i + 1] += s;
  }
  for (int i = 0; i <= n_; ++i) g[i] -= w_[i] * std::pow(std::abs(u[i]), q_ - 1.0) * sign(u[i]) / m;
}

std::vector<double> default_start(Constraint constraint, int n) {
  if (constraint == Constraint::ZeroMean) return asymmetric_start(n);
  auto x = grid(n);
  for (auto& v : x) v = std::sin(kPi * v) + 0.1 * v * (1.0 - v);
  return x;
}

std::vector<double> antisymmetric_start(int n) {
  auto x = grid(n);
  for (auto& v : x) v = std::cos(kPi * v);
  return x;
}

std::vector<double> asymmetric_start(int n) {
  auto x = grid(n);
  for (auto& v : x) v = std::cos(kPi * v) + 0.3 * std::cos(2.0 * kPi * v);
  return x;
}

double antisymmetry_defect(std::span<const double> u) {
  double scale = 0.0;
  for (double v : u) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  const auto n = u.size();
  for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(u[i] + u[n - 1 - i]) / scale);
  return d;
}

RatioEstimate minimize_interval_ratio(const RatioProblem& problem, std::span<const double> start,
                                      const RatioOptions& options) {
  validate(problem);
  const int n = problem.grid_size;
  const IntervalQuotient quotient(problem.p, problem.q, n);
  const auto& w = quotient.weights();
  const double wsum = std::accumulate(w.begin(), w.end(), 0.0);
  const double p = problem.p;
  const double h = 1.0 / n;

  std::vector<double> u = start.empty() ? default_start(problem.constraint, n) : std::vector<double>(start.begin(), start.end());
  if (static_cast<int>(u.size()) != n + 1) throw DomainError("minimize_interval_ratio: start has the wrong length");
  project(u, problem.constraint, w);
  double umax = 0.0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  if (!(umax > 0.0) || !std::isfinite(umax)) throw DomainError("minimize_interval_ratio: start is infeasible (zero after projection)");
  for (auto& v : u) v /= umax;

  std::vector<double> g(n + 1), diag(n + 1), off(n), rhs(n + 1);
  // Lagged-diffusivity preconditioner: the Hessian of E^(1/p)-like energy
  // with |D|^(p-2) frozen (floored at 1e-3 max |D| so p < 2 stays finite).
  auto direction = [&](const std::vector<double>& x, std::vector<double>& d) {
    quotient.gradient(x, g);
    const double e = quotient.energy(x);
    double dmax = 0.0;
    for (int i = 0; i < n; ++i) dmax = std::max(dmax, std::abs(x[i + 1] - x[i]) / h);
    std::fill(diag.begin(), diag.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double dc = std::max(std::abs(x[i + 1] - x[i]) / h, 1e-3 * dmax);
      const double c = (p - 1.0) * std::pow(dc, p - 2.0) / (h * e);
      diag[i] += c;
      diag[i + 1] += c;
      off[i] = -c;
    }
    std::fill(d.begin(), d.end(), 0.0);
    if (problem.constraint == Constraint::ZeroBoundary) {
      for (int i = 1; i < n; ++i) d[i] = -g[i];
      detail::solve_tridiagonal(std::span(diag).subspan(1, n - 1), std::span(off).subspan(1, n - 2),
                                std::span(d).subspan(1, n - 1));
    } else {
      // Project the gradient onto the zero-mean tangent space; the singular
      // Neumann system is consistent, so node 0 is pinned and the weighted
      // mean removed afterwards.
      const double mu = std::accumulate(g.begin(), g.end(), 0.0) / wsum;
      for (int i = 1; i <= n; ++i) d[i] = mu * w[i] - g[i];
      detail::solve_tridiagonal(std::span(diag).subspan(1, n), std::span(off).subspan(1, n - 1), std::span(d).subspan(1, n));
      const double mean = std::inner_product(w.begin(), w.end(), d.begin(), 0.0) / wsum;
      for (auto& v : d) v -= mean;
    }
    return std::inner_product(g.begin(), g.end(), d.begin(), 0.0);
  };

  const auto result = detail::descend(u, [&](const std::vector<double>& x) { return quotient.objective(x); }, direction, options);

  RatioEstimate est;
  est.value = quotient.constant(u);
  est.grid = grid(n);
  est.extremal = std::move(u);
  est.iterations = result.iterations;
  est.kkt_residual = result.kkt;
  est.converged = result.converged;
  return est;
}

SymmetryClassification classify_extremal_symmetry(double p, double q, int n, const RatioOptions& options) {
  const RatioProblem problem{p, q, Constraint::ZeroMean, n};
  SymmetryClassification c;
  c.from_antisymmetric = minimize_interval_ratio(problem, antisymmetric_start(n), options);
  c.from_asymmetric = minimize_interval_ratio(problem, asymmetric_start(n), options);
  const double h = 1.0 / n;
  const bool asymmetric_wins = c.from_asymmetric.value > c.from_antisymmetric.value * (1.0 + h * h);
  c.best = asymmetric_wins ? c.from_asymmetric : c.from_antisymmetric;
  c.constant = c.best.value;
  c.defect = antisymmetry_defect(c.best.extremal);
  c.antisymmetric = c.defect <= kAntisymmetryTolerance;
  c.gap = c.constant - catalog::schmidt_constant(p, q);
  return c;
}

void write_extremal_csv(const RatioEstimate& estimate, std::ostream& out) {
  out << "x,u\n" << std::setprecision(17);
  for (std::size_t i = 0; i < estimate.extremal.size(); ++i) out << estimate.grid[i] << ',' << estimate.extremal[i] << '\n';
}

}  // namespace sharpc::oracle1d
