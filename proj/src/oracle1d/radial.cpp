// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "descent.hpp"
#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/oracle1d.hpp"

namespace sharpc::oracle1d {

namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

constexpr int kGaussPoints = 4;

// Quotient data on r_i = R i / N with cellwise Gauss points for Q.
struct RadialQuotient {
  int n_dim;
  double p;
  double q;
  int cells;
  double h;
  std::vector<double> r;
  std::vector<double> volume;  // V_i
  detail::GaussRule rule;
  std::vector<double> qweight;  // per (cell, point): h w_k rho^(n-1)

  RadialQuotient(int n, double p_, double cutoff, int cells_)
      : n_dim(n), p(p_), q(n * p_ / (n - p_)), cells(cells_), h(cutoff / cells_), r(cells_ + 1),
        volume(cells_), rule(detail::gauss_legendre(kGaussPoints)), qweight(static_cast<std::size_t>(cells_) * kGaussPoints) {
    for (int i = 0; i <= cells; ++i) r[i] = cutoff * i / cells;
    for (int i = 0; i < cells; ++i) {
      volume[i] = (std::pow(r[i + 1], n) - std::pow(r[i], n)) / n;
      for (int k = 0; k < kGaussPoints; ++k)
        qweight[i * kGaussPoints + k] = h * rule.w[k] * std::pow(r[i] + h * rule.x[k], n - 1);
    }
  }

  double energy(const std::vector<double>& u) const {
    double e = 0.0;
    for (int i = 0; i < cells; ++i) e += volume[i] * std::pow(std::abs((u[i + 1] - u[i]) / h), p);
    return e;
  }

  double mass(const std::vector<double>& u, int from = 0) const {
    double m = 0.0;
    for (int i = from; i < cells; ++i)
      for (int k = 0; k < kGaussPoints; ++k) {
        const double v = u[i] * (1.0 - rule.x[k]) + u[i + 1] * rule.x[k];
        m += qweight[i * kGaussPoints + k] * std::pow(std::abs(v), q);
      }
    return m;
  }

  double objective(const std::vector<double>& u) const { return std::log(energy(u)) / p - std::log(mass(u)) / q; }

  // Fills g and returns E; each power is evaluated once per point.
  double gradient(const std::vector<double>& u, std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    double e = 0.0;
    double m = 0.0;
    std::vector<double>& sd = scratch_d;
    std::vector<double>& sq = scratch_q;
    for (int i = 0; i < cells; ++i) {
      const double d = (u[i + 1] - u[i]) / h;
      const double a = std::pow(std::abs(d), p - 1.0);
      e += volume[i] * a * std::abs(d);
      sd[i] = volume[i] * a * sign(d) / h;
      for (int k = 0; k < kGaussPoints; ++k) {
        const double v = u[i] * (1.0 - rule.x[k]) + u[i + 1] * rule.x[k];
        const double b = qweight[i * kGaussPoints + k] * std::pow(std::abs(v), q - 1.0);
        m += b * std::abs(v);
        sq[i * kGaussPoints + k] = b * sign(v);
      }
    }
    for (int i = 0; i < cells; ++i) {
      g[i] -= sd[i] / e;
      g[i + 1] += sd[i] / e;
      for (int k = 0; k < kGaussPoints; ++k) {
        const double t = sq[i * kGaussPoints + k] / m;
        g[i] -= t * (1.0 - rule.x[k]);
        g[i + 1] -= t * rule.x[k];
      }
    }
    return e;
  }

  std::vector<double> scratch_d = std::vector<double>(cells);
  std::vector<double> scratch_q = std::vector<double>(static_cast<std::size_t>(cells) * kGaussPoints);
};

}  // namespace

RatioEstimate minimize_radial_sobolev(int n, double p, double cutoff, int cells, const RatioOptions& options) {
  if (n < 2) throw DomainError("minimize_radial_sobolev: dimension must be at least 2");
  if (!(p > 1.0) || !(p < n)) throw InadmissibleError("minimize_radial_sobolev: requires 1 < p < n");
  if (!(cutoff > 0.0)) throw DomainError("minimize_radial_sobolev: cutoff must be positive");
  if (cells < 64) throw DomainError("minimize_radial_sobolev: need at least 64 cells");

  RadialQuotient quotient(n, p, cutoff, cells);
  const double h = quotient.h;
  std::vector<double> u(cells + 1);
  for (int i = 0; i <= cells; ++i) u[i] = std::exp(-quotient.r[i]);
  u[cells] = 0.0;

  std::vector<double> g(cells + 1), diag(cells), off(cells);
  auto direction = [&](const std::vector<double>& x, std::vector<double>& d) {
    const double e = quotient.gradient(x, g);
    double dmax = 0.0;
    for (int i = 0; i < cells; ++i) dmax = std::max(dmax, std::abs(x[i + 1] - x[i]) / h);
    std::fill(diag.begin(), diag.end(), 0.0);
    for (int i = 0; i < cells; ++i) {
      const double dc = std::max(std::abs(x[i + 1] - x[i]) / h, 1e-3 * dmax);
      const double c = (p - 1.0) * std::pow(dc, p - 2.0) * quotient.volume[i] / (h * h * e);
      diag[i] += c;
      if (i + 1 < cells) {
        diag[i + 1] += c;
        off[i] = -c;
      }
    }
    for (int i = 0; i < cells; ++i) d[i] = -g[i];
    d[cells] = 0.0;
    detail::solve_tridiagonal(diag, std::span(off).first(cells - 1), std::span(d).first(cells));
    double slope = 0.0;
    for (int i = 0; i < cells; ++i) slope += g[i] * d[i];
    return slope;
  };

  const auto result = detail::descend(u, [&](const std::vector<double>& x) { return quotient.objective(x); }, direction, options);

  RatioEstimate est;
  est.value = std::pow(catalog::unit_sphere_measure(n - 1), -1.0 / n) * std::exp(-result.objective);
  est.grid = quotient.r;
  est.extremal = std::move(u);
  est.iterations = result.iterations;
  est.kkt_residual = result.kkt;
  est.converged = result.converged;
  const int tail_from = static_cast<int>(std::floor(0.5 * cells));
  est.boundary_affected = quotient.mass(est.extremal, tail_from) > 1e-3 * quotient.mass(est.extremal);
  return est;
}

}  // namespace sharpc::oracle1d
