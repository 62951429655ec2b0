// SPDX-License-Identifier: Apache-2.0
#include "sharpc/extrapolate.hpp"

#include <algorithm>
#include <cmath>

#include "sharpc/error.hpp"

namespace sharpc::fem {

Extrapolation extrapolate(std::vector<HSample> samples) {
  if (samples.size() < 3) throw DomainError("extrapolate: need at least three samples");
  std::sort(samples.begin(), samples.end(), [](const HSample& a, const HSample& b) { return a.h > b.h; });
  const auto n = samples.size();
  const HSample& s1 = samples[n - 3];
  const HSample& s2 = samples[n - 2];
  const HSample& s3 = samples[n - 1];
  if (!(s3.h > 0.0) || s2.h == s3.h) throw DomainError("extrapolate: mesh sizes must be positive and distinct");
  const double rho = s1.h / s2.h;
  if (std::abs(s2.h / s3.h - rho) > 1e-9 * rho) throw DomainError("extrapolate: refinement ratio is not constant");

  const double d1 = s1.lambda - s2.lambda;
  const double d2 = s2.lambda - s3.lambda;
  if (d1 == 0.0 || d2 == 0.0 || (d1 > 0.0) != (d2 > 0.0) || std::abs(d2) >= std::abs(d1))
    throw DomainError("extrapolate: samples are not monotonically converging");
  const double r = std::log(d1 / d2) / std::log(rho);
  return {s3.lambda - d2 / (std::pow(rho, r) - 1.0), r};
}

}  // namespace sharpc::fem
