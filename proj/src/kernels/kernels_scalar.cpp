// SPDX-License-Identifier: Apache-2.0
#include <cstddef>

#include "sharpc/kernels.hpp"

namespace sharpc::kernels::scalar {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + b * y[i];
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
  const std::int32_t n = a.rows();
  for (std::int32_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::int32_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) s += a.val[k] * x[a.col[k]];
    y[r] = s;
  }
}

}  // namespace sharpc::kernels::scalar
