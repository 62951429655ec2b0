// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace sharpc::fem {

struct HSample {
  double h;
  double lambda;
};

struct Extrapolation {
  double extrapolated;
  double observed_order;
};

/// Richardson extrapolation under lambda_h = lambda + c h^r from the last
/// three samples, which must share one refinement ratio. Samples are sorted
/// by decreasing h. Throws DomainError for fewer than three samples, a
/// varying ratio, or differences that are zero, change sign or fail to
/// shrink.
Extrapolation extrapolate(std::vector<HSample> samples);

struct EigenEstimate {
  std::vector<HSample> samples;  // decreasing h
  double extrapolated = 0.0;
  double observed_order = 0.0;
  double residual = 0.0;  // largest sample residual
};

}  // namespace sharpc::fem
