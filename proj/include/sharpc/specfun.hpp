// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace sharpc::specfun {

/// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
/// Relative error below 1e-13 on [0.1, 50]. Throws DomainError for x <= 0.
double gamma(double x);

/// log Gamma for x > 0; used where Gamma itself would overflow.
double log_gamma(double x);

/// Euler beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta(double a, double b);

/// F(s) = Gamma(s + 1) / s^s with F(0) = 1 by continuity.
double frak_f(double s);

/// Bessel function of the first kind J_order(x), order in {0, 1}.
///
/// Below x = 12 the power series is summed in double-double arithmetic (the
/// terms reach ~4e3 at x = 12, so plain doubles would lose four digits to
/// cancellation); from x = 12 on, the Hankel asymptotic expansion truncated
/// at its smallest term. Both branches stay within 1e-12 absolute up to 30.
double bessel_j(int order, double x);

/// k-th positive zero of J_order, k >= 1, to 1e-13 absolute.
double bessel_zero(int order, int k);

/// k-th positive zero of the derivative J'_order, k >= 1, order in {0, 1}.
/// J0' = -J1, so order 0 gives the zeros of J1; J1' = J0 - J1/x.
double bessel_derivative_zero(int order, int k);

struct Bracket {
  double lo;
  double hi;
  double tol;  // absolute, on the root location
};

struct RootResult {
  double root;
  int iterations;
};

/// Bracketed root: bisection interleaved with secant steps, capped at 200
/// iterations. Throws DomainError if f does not change sign on the bracket
/// and ConvergenceError if the cap is hit.
RootResult find_root_ex(const std::function<double(double)>& f, Bracket bracket);

inline double find_root(const std::function<double(double)>& f, Bracket bracket) {
  return find_root_ex(f, bracket).root;
}

inline constexpr int kRootIterationCap = 200;

}  // namespace sharpc::specfun
