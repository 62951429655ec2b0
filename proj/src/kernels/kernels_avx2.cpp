// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2 -mfma; only reached through dispatch after a CPUID check.
#include <immintrin.h>

#include <cstddef>

#include "sharpc/kernels.hpp"

namespace sharpc::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  const double* py = y.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i + 4), _mm256_loadu_pd(py + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i + 8), _mm256_loadu_pd(py + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i + 12), _mm256_loadu_pd(py + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
  double s = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) s += px[i] * py[i];
  return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(py + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
  for (; i < n; ++i) py[i] += a * px[i];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(py + i, _mm256_fmadd_pd(vb, _mm256_loadu_pd(py + i), _mm256_loadu_pd(px + i)));
  for (; i < n; ++i) py[i] = x[i] + b * py[i];
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
  const std::int32_t n = a.rows();
  const std::int32_t* rp = a.row_ptr.data();
  const std::int32_t* ci = a.col.data();
  const double* va = a.val.data();
  const double* px = x.data();
  for (std::int32_t r = 0; r < n; ++r) {
    std::int32_t k = rp[r];
    const std::int32_t end = rp[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ci + k));
      const __m256d xv = _mm256_i32gather_pd(px, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(va + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += va[k] * px[ci[k]];
    y[r] = s;
  }
}

}  // namespace sharpc::kernels::avx2
