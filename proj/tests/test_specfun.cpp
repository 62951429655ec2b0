// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sharpc/error.hpp"
#include "sharpc/specfun.hpp"

namespace sf = sharpc::specfun;
using sf::beta;
using sf::bessel_derivative_zero;
using sf::bessel_j;
using sf::bessel_zero;
using sf::find_root;
using sf::find_root_ex;
using sf::frak_f;
using sf::kRootIterationCap;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("gamma at integers and half-integers") {
  CHECK(sf::gamma(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(sf::gamma(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK(sf::gamma(0.5) == Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(sf::gamma(1.5) == Approx(std::sqrt(pi) / 2).epsilon(1e-14));
  CHECK(sf::log_gamma(100.0) == Approx(359.13420536957540).epsilon(1e-14));
  CHECK_THROWS_AS(sf::gamma(0.0), sharpc::DomainError);
  CHECK_THROWS_AS(sf::gamma(-1.5), sharpc::DomainError);
}

TEST_CASE("gamma recurrence on [0.5, 20]") {
  for (double x = 0.5; x <= 20.0; x += 0.125) {
    CAPTURE(x);
    CHECK(std::abs(sf::gamma(x + 1) / (x * sf::gamma(x)) - 1.0) < 1e-11);
  }
}

TEST_CASE("gamma agrees with the standard library") {
  for (double x = 0.05; x < 30.0; x *= 1.3) {
    CAPTURE(x);
    CHECK(sf::gamma(x) == Approx(std::tgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("beta values and symmetry") {
  CHECK(beta(1, 1) == Approx(1.0).epsilon(1e-14));
  CHECK(beta(1.5, 2.5) == Approx(pi / 16).epsilon(1e-14));
  CHECK(beta(0.5, 0.5) == Approx(pi).epsilon(1e-14));
  for (double a : {0.3, 1.0, 2.7, 9.5})
    for (double b : {0.5, 1.25, 4.0, 15.0}) CHECK(beta(a, b) == beta(b, a));
}

TEST_CASE("frak_f") {
  CHECK(frak_f(0.0) == 1.0);
  CHECK(frak_f(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(frak_f(0.5) == Approx(std::sqrt(pi / 2)).epsilon(1e-14));
  CHECK_THROWS_AS(frak_f(-0.1), sharpc::DomainError);
}

TEST_CASE("Bessel functions on both branches") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-10);
  // Reference digits from 30-digit evaluations.
  CHECK(bessel_j(0, 1.0) == Approx(0.76519768655796655).epsilon(1e-14));
  CHECK(bessel_j(1, 1.0) == Approx(0.44005058574493352).epsilon(1e-14));
  CHECK(bessel_j(0, 11.5) == Approx(-0.067653948111665228).epsilon(1e-11));
  CHECK(bessel_j(0, 20.0) == Approx(0.16702466434058316).epsilon(1e-12));
  CHECK(bessel_j(1, 20.0) == Approx(0.066833124175850045).epsilon(1e-12));
  // The branches meet at x = 12 without a visible seam.
  for (int order : {0, 1}) {
    const double below = bessel_j(order, std::nextafter(12.0, 0.0));
    const double above = bessel_j(order, 12.0);
    CHECK(std::abs(below - above) < 1e-12);
  }
  CHECK_THROWS_AS(bessel_j(2, 1.0), sharpc::DomainError);
  CHECK(bessel_j(0, -1.5) == bessel_j(0, 1.5));
  CHECK(bessel_j(1, -1.5) == -bessel_j(1, 1.5));
}

TEST_CASE("Bessel zeros and interlacing") {
  CHECK(bessel_zero(0, 1) == Approx(2.4048255577).epsilon(1e-10));
  CHECK(bessel_zero(1, 1) == Approx(3.8317059702).epsilon(1e-10));
  CHECK(bessel_zero(0, 2) == Approx(5.5200781103).epsilon(1e-10));
  for (int k = 1; k <= 5; ++k) {
    CHECK(bessel_zero(0, k) < bessel_zero(1, k));
    CHECK(bessel_zero(1, k) < bessel_zero(0, k + 1));
    CHECK(std::abs(bessel_j(0, bessel_zero(0, k))) < 1e-12);
    CHECK(std::abs(bessel_j(1, bessel_zero(1, k))) < 1e-12);
  }
}

TEST_CASE("zeros of Bessel derivatives") {
  CHECK(bessel_derivative_zero(1, 1) == Approx(1.8411837813406593).epsilon(1e-13));
  CHECK(bessel_derivative_zero(1, 2) == Approx(5.3314427735250326).epsilon(1e-13));
  CHECK(bessel_derivative_zero(0, 1) == bessel_zero(1, 1));
}

TEST_CASE("find_root") {
  CHECK(find_root([](double z) { return z - 1; }, {0, 2, 1e-14}) == Approx(1.0).epsilon(1e-14));

  const auto one_leg = [](double z) { return std::tan(z) + std::tanh(z); };
  const double z1 = find_root(one_leg, {pi / 2 + 1e-6, pi, 1e-14});
  CHECK(z1 == Approx(2.3650204).epsilon(1e-7));
  CHECK(z1 * std::tanh(z1) == Approx(2.3236).epsilon(5e-5 / 2.3236));
  CHECK(std::abs(one_leg(z1)) < 1e-9);

  const auto two_legs = [](double z) { return std::tan(z) * std::tanh(z) - 1; };
  const double z2 = find_root(two_legs, {1e-6, pi / 2 - 1e-6, 1e-14});
  CHECK(2 * z2 * std::tanh(z2) == Approx(1.3765).epsilon(5e-5 / 1.3765));
  CHECK(std::abs(two_legs(z2)) < 1e-9);

  CHECK_THROWS_AS(find_root([](double z) { return z * z + 1; }, {-1, 1, 1e-12}), sharpc::DomainError);
  const auto r = find_root_ex([](double z) { return std::cbrt(z - 0.3); }, {0, 1, 1e-14});
  CHECK(r.iterations <= kRootIterationCap);
  CHECK(r.root == Approx(0.3).epsilon(1e-12));
}
