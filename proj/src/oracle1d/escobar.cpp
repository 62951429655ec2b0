// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <functional>

#include "descent.hpp"
#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/oracle1d.hpp"

namespace sharpc::oracle1d {

namespace {

constexpr int kPoints = 8;
constexpr double kCutoffFactor = 1e4;

// Composite Gauss-Legendre of f over the images of `cells` equal cells of
// [0, 1] under the map s -> x(s), with Jacobian dx/ds.
double composite(const std::function<double(double)>& f, const std::function<double(double)>& x,
                 const std::function<double(double)>& dx, int cells, const detail::GaussRule& rule) {
  double sum = 0.0;
  for (int i = 0; i < cells; ++i)
    for (int k = 0; k < kPoints; ++k) {
      const double s = (i + rule.x[k]) / cells;
      sum += rule.w[k] / cells * f(x(s)) * dx(s);
    }
  return sum;
}

// int_s^inf r^-m dr
double power_tail(double t, double m) { return std::pow(t, 1.0 - m) / (m - 1.0); }

}  // namespace

double escobar_trace_ratio(int n, double p, double a, int cells) {
  if (n < 2) throw DomainError("escobar_trace_ratio: dimension must be at least 2");
  if (!(p > 1.0) || !(p < n)) throw InadmissibleError("escobar_trace_ratio: requires 1 < p < n");
  if (!(a > 0.0)) throw DomainError("escobar_trace_ratio: offset must be positive");
  if (cells < 16) throw DomainError("escobar_trace_ratio: need at least 16 cells");

  const auto rule = detail::gauss_legendre(kPoints);
  const double k = (n - p) / (p - 1.0);
  const double p2 = (n - 1.0) * p / (n - p);
  const double omega = catalog::unit_sphere_measure(n - 2);
  const double t = kCutoffFactor * a;
  const int half = cells / 2;
  const double span = std::log(t / a);
  auto log_map = [&](double s) { return a * std::exp(span * s); };
  auto log_jac = [&](double s) { return a * span * std::exp(span * s); };

  // Boundary plane: omega_{n-2} int_0^inf (rho^2 + a^2)^(-alpha) rho^(n-2) d rho.
  const double alpha = 0.5 * k * p2;
  auto plane_f = [&](double rho) { return std::pow(rho * rho + a * a, -alpha) * std::pow(rho, n - 2); };
  double plane = composite(plane_f, [&](double s) { return a * s; }, [&](double) { return a; }, half, rule) +
                 composite(plane_f, log_map, log_jac, cells - half, rule);
  const double m0 = 2.0 * alpha - (n - 2.0);
  const double a2 = a * a;
  plane += power_tail(t, m0) - alpha * a2 * power_tail(t, m0 + 2.0) +
           0.5 * alpha * (alpha + 1.0) * a2 * a2 * power_tail(t, m0 + 4.0);
  const double plane_neglected = alpha * (alpha + 1.0) * (alpha + 2.0) / 6.0 * a2 * a2 * a2 * power_tail(t, m0 + 6.0);
  plane *= omega;

  // Half-space, spherical shells about x*: the shell of radius rho meets the
  // half-space in a cap of measure rho^(n-1) sigma(rho), with
  //   sigma(rho) = sigma_inf - omega_{n-2} int_0^asin(a/rho) cos^(n-2) phi d phi.
  const double sigma_inf = 0.5 * catalog::unit_sphere_measure(n - 1);
  const auto cap_rule = detail::gauss_legendre(20);
  auto sigma = [&](double rho) {
    const double top = std::asin(std::min(1.0, a / rho));
    double s = 0.0;
    for (int i = 0; i < 20; ++i) s += cap_rule.w[i] * std::pow(std::cos(top * cap_rule.x[i]), n - 2);
    return sigma_inf - omega * top * s;
  };
  const double beta = (n - 1.0) / (p - 1.0);
  auto half_f = [&](double rho) { return std::pow(rho, -beta) * sigma(rho); };
  // rho = a (1 + s^2) on [a, 2a] absorbs the square-root onset of the cap.
  double halfspace = composite(half_f, [&](double s) { return a * (1.0 + s * s); }, [&](double s) { return 2.0 * a * s; },
                               half, rule);
  const double span2 = std::log(t / (2.0 * a));
  halfspace += composite(half_f, [&](double s) { return 2.0 * a * std::exp(span2 * s); },
                         [&](double s) { return 2.0 * a * span2 * std::exp(span2 * s); }, cells - half, rule);
  // Tail: int_0^x (1 - s^2)^g ds = x - g x^3/3 + g(g-1)/2 x^5/5 - ..., x = a/rho.
  const double g = 0.5 * (n - 3.0);
  halfspace += sigma_inf * power_tail(t, beta) -
               omega * (a * power_tail(t, beta + 1.0) - g / 3.0 * a2 * a * power_tail(t, beta + 3.0) +
                        g * (g - 1.0) / 10.0 * a2 * a2 * a * power_tail(t, beta + 5.0));
  const double half_neglected =
      omega * std::abs(g * (g - 1.0) * (g - 2.0)) / 42.0 * a2 * a2 * a2 * a * power_tail(t, beta + 7.0);
  halfspace *= std::pow(k, p);

  if (omega * plane_neglected > 1e-10 * plane || std::pow(k, p) * half_neglected > 1e-10 * halfspace)
    throw ConvergenceError("escobar_trace_ratio: tail expansion not accurate enough");
  return std::pow(plane, 1.0 / p2) / std::pow(halfspace, 1.0 / p);
}

}  // namespace sharpc::oracle1d
