// SPDX-License-Identifier: Apache-2.0
#include "sharpc/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sharpc/error.hpp"

namespace sharpc::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
  // z = x - 1
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

// Error-free transforms for the double-double series.
struct DD {
  double hi;
  double lo;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DD div(DD a, double b) {
  const double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  DD r = two_sum(a.hi, -p.hi);
  r.lo += a.lo - p.lo;
  const double q2 = (r.hi + r.lo) / b;
  return quick_two_sum(q1, q2);
}

double bessel_series(int order, double x) {
  const double y = 0.5 * x;  // exact
  const DD y2 = two_prod(y, y);
  const DD neg_y2{-y2.hi, -y2.lo};
  DD term = order == 0 ? DD{1.0, 0.0} : DD{y, 0.0};
  DD sum = term;
  for (int k = 1; k < 200; ++k) {
    term = div(mul(term, neg_y2), static_cast<double>(k) * static_cast<double>(k + order));
    sum = add(sum, term);
    if (std::abs(term.hi) < 1e-34 * std::max(1.0, std::abs(sum.hi)) + 1e-300) break;
  }
  return sum.hi + sum.lo;
}

double bessel_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 80; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = a * (mu - odd * odd) / (8.0 * k * x);
    // Stop at the smallest term; the series diverges past it.
    if (std::abs(next) >= std::abs(prev) && k > 1) break;
    a = next;
    prev = next;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * a;
    } else {
      q += sign * a;
    }
    if (std::abs(a) < 1e-17) break;
  }
  const double chi = x - (0.5 * order + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
  if (x < 0.5) return gamma(x + 1.0) / x;
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: arguments must be positive");
  if (a + b < 150.0) return gamma(a) * gamma(b) / gamma(a + b);
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double frak_f(double s) {
  if (s < 0.0 || std::isnan(s)) throw DomainError("frak_f: argument must be non-negative");
  if (s == 0.0) return 1.0;
  return std::exp(log_gamma(s + 1.0) - s * std::log(s));
}

double bessel_j(int order, double x) {
  if (order != 0 && order != 1) throw DomainError("bessel_j: only orders 0 and 1 are supported");
  if (x < 0.0) return order == 0 ? bessel_j(0, -x) : -bessel_j(1, -x);
  if (x < 12.0) return bessel_series(order, x);
  return bessel_asymptotic(order, x);
}

double bessel_zero(int order, int k) {
  if (order != 0 && order != 1) throw DomainError("bessel_zero: only orders 0 and 1 are supported");
  if (k < 1) throw DomainError("bessel_zero: index must be >= 1");
  // McMahon's first-order estimate; zeros are at least ~2.9 apart.
  const double b = (k + 0.5 * order - 0.25) * std::numbers::pi;
  const double guess = b - (4.0 * order * order - 1.0) / (8.0 * b);
  return find_root([order](double z) { return bessel_j(order, z); }, {guess - 0.4, guess + 0.4, 1e-14});
}

double bessel_derivative_zero(int order, int k) {
  if (order != 0 && order != 1) throw DomainError("bessel_derivative_zero: only orders 0 and 1 are supported");
  if (k < 1) throw DomainError("bessel_derivative_zero: index must be >= 1");
  if (order == 0) return bessel_zero(1, k);
  const double b = (k - 0.25) * std::numbers::pi;
  const double guess = b - 7.0 / (8.0 * b);
  return find_root([](double z) { return bessel_j(0, z) - bessel_j(1, z) / z; }, {guess - 0.4, guess + 0.4, 1e-14});
}

RootResult find_root_ex(const std::function<double(double)>& f, Bracket bracket) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo < hi)) throw DomainError("find_root: bracket must satisfy lo < hi");
  if (!(bracket.tol > 0.0)) throw DomainError("find_root: tolerance must be positive");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi))
    throw DomainError("find_root: no sign change on bracket");

  for (int it = 1; it <= kRootIterationCap; ++it) {
    if (hi - lo <= 2.0 * bracket.tol) return {0.5 * (lo + hi), it};
    double x = 0.5 * (lo + hi);
    // Odd iterations try a secant step; it must land well inside the bracket.
    if (it % 2 == 1) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      const double margin = 1e-3 * (hi - lo);
      if (s > lo + margin && s < hi - margin) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return {x, it};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  if (hi - lo <= 2.0 * bracket.tol) return {0.5 * (lo + hi), kRootIterationCap};
  throw ConvergenceError("find_root: iteration budget exhausted");
}

}  // namespace sharpc::specfun
