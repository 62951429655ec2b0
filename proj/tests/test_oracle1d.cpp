// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/oracle1d.hpp"

using namespace sharpc;
using namespace sharpc::oracle1d;
using doctest::Approx;
using std::numbers::pi;

namespace {

std::vector<double> random_feasible(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  for (auto& v : u) v = d(rng);
  u.front() = u.back() = 0.0;
  return u;
}

std::vector<double> sample(int n, double (*f)(double)) {
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) u[static_cast<std::size_t>(i)] = f(static_cast<double>(i) / n);
  return u;
}

}  // namespace

TEST_CASE("analytic gradient matches central differences") {
  std::mt19937_64 rng(11);
  for (double p : {1.5, 2.0, 3.0})
    for (double q : {1.5, 2.0, 4.0, 7.0}) {
      CAPTURE(p);
      CAPTURE(q);
      const int n = 64;
      const IntervalQuotient f(p, q, n);
      const auto u = random_feasible(n, rng);
      std::vector<double> g(u.size());
      f.gradient(u, g);
      double gnorm = 0.0;
      for (double v : g) gnorm = std::max(gnorm, std::abs(v));
      for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        const double step = 1e-6;
        auto up = u, dn = u;
        up[i] += step;
        dn[i] -= step;
        const double fd = (f.objective(up) - f.objective(dn)) / (2 * step);
        CHECK(std::abs(fd - g[i]) <= 1e-5 * gnorm);
      }
    }
}

TEST_CASE("interval oracle reproduces the sharp constants") {
  CHECK(minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, 1024}).value == Approx(1 / pi).epsilon(1e-3));
  CHECK(minimize_interval_ratio({2, 2, Constraint::ZeroMean, 1024}).value == Approx(1 / pi).epsilon(1e-3));
  CHECK(minimize_interval_ratio({2, 4, Constraint::ZeroBoundary, 1024}).value ==
        Approx(catalog::schmidt_constant(2, 4)).epsilon(1e-3));
}

TEST_CASE("returned extremal reproduces the value and beats test functions") {
  for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{1.5, 3.0}, std::pair{3.0, 1.0}}) {
    const RatioProblem prob{p, q, Constraint::ZeroBoundary, 512};
    const auto est = minimize_interval_ratio(prob);
    const IntervalQuotient f(p, q, prob.grid_size);
    CHECK(est.converged);
    CHECK(f.constant(est.extremal) == Approx(est.value).epsilon(1e-12));
    CHECK(*std::max_element(est.extremal.begin(), est.extremal.end(),
                            [](double a, double b) { return std::abs(a) < std::abs(b); }) != 0.0);
    const double best = f.objective(est.extremal);
    for (auto w : {sample(prob.grid_size, [](double x) { return std::sin(pi * x); }),
                   sample(prob.grid_size, [](double x) { return x * (1 - x); }),
                   sample(prob.grid_size, [](double x) { return x * (1 - x) * (1 - x); }),
                   sample(prob.grid_size, [](double x) { return std::min(x, 1 - x); })})
      CHECK(f.objective(w) >= best - 1e-9);
  }
}

TEST_CASE("reflected start gives the same constant") {
  const RatioProblem prob{2, 3, Constraint::ZeroBoundary, 512};
  auto u0 = sample(prob.grid_size, [](double x) { return x * (1 - x) * (1 - x) * (1 + 3 * x); });
  auto u1 = u0;
  std::reverse(u1.begin(), u1.end());
  CHECK(minimize_interval_ratio(prob, u0).value == Approx(minimize_interval_ratio(prob, u1).value).epsilon(1e-10));
}

TEST_CASE("discrete constants converge at least linearly") {
  std::vector<double> c;
  for (int n : {64, 128, 256, 512}) c.push_back(minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, n}).value);
  const double d1 = std::abs(c[1] - c[0]), d2 = std::abs(c[2] - c[1]), d3 = std::abs(c[3] - c[2]);
  CHECK(d2 < d1);
  CHECK(d3 < d2);
  CHECK(std::log2(d2 / d3) >= 1.0);
}

TEST_CASE("antisymmetry of the zero-mean extremal") {
  CHECK(antisymmetry_defect(antisymmetric_start(256)) < 1e-12);
  CHECK(antisymmetry_defect(asymmetric_start(256)) > 0.1);
  const auto below = classify_extremal_symmetry(2, 4, 512);
  CHECK(below.antisymmetric);
  CHECK(std::abs(below.gap) <= 1e-3);
  const auto above = classify_extremal_symmetry(2, 10, 512);
  CHECK_FALSE(above.antisymmetric);
  CHECK(above.gap > 1e-3);
  CHECK(above.defect > kAntisymmetryTolerance);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(validate({1.0, 2, Constraint::ZeroBoundary, 256}), DomainError);
  CHECK_THROWS_AS(validate({2, 2, Constraint::ZeroBoundary, 32}), DomainError);
  CHECK_THROWS_AS(validate({2, 0.5, Constraint::ZeroBoundary, 256}), InadmissibleError);
  CHECK_THROWS_AS(minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, 256}, std::vector<double>(10, 1.0)),
                  DomainError);
  RatioOptions tight;
  tight.max_iterations = 2;
  CHECK_THROWS_AS(minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, 256}, {}, tight), ConvergenceError);
  tight.allow_budget_exhaustion = true;
  CHECK_FALSE(minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, 256}, {}, tight).converged);
}

TEST_CASE("radial oracle") {
  const auto est = minimize_radial_sobolev(3, 2, 50, 1024);
  CHECK(est.value == Approx(catalog::sobolev_constant(3, 2)).epsilon(0.01));
  CHECK(est.value <= catalog::sobolev_constant(3, 2));
  CHECK_FALSE(est.boundary_affected);
  // The quotient is dilation invariant: the same grid on a ball ten times
  // smaller gives the same discrete optimum.
  CHECK(minimize_radial_sobolev(3, 2, 5, 1024).value == Approx(est.value).epsilon(1e-9));
  CHECK_THROWS_AS(minimize_radial_sobolev(3, 3, 50, 256), InadmissibleError);
}

TEST_CASE("trace extremal quadrature") {
  for (double a : {0.1, 1.0, 10.0})
    CHECK(escobar_trace_ratio(3, 2, a) == Approx(std::pow(pi, -0.25)).epsilon(1e-10));
  CHECK(escobar_trace_ratio(4, 2, 1.0) == Approx(catalog::trace_sobolev_constant(4, 2)).epsilon(1e-9));
  CHECK(escobar_trace_ratio(3, 1.5, 1.0) == Approx(catalog::trace_sobolev_constant(3, 1.5)).epsilon(1e-9));
  CHECK_THROWS_AS(escobar_trace_ratio(3, 3, 1.0), InadmissibleError);
  CHECK_THROWS_AS(escobar_trace_ratio(3, 2, 0.0), DomainError);
}

TEST_CASE("extremal CSV") {
  const auto est = minimize_interval_ratio({2, 2, Constraint::ZeroBoundary, 64});
  std::ostringstream os;
  write_extremal_csv(est, os);
  const std::string s = os.str();
  CHECK(s.rfind("x,u\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 66);
}
