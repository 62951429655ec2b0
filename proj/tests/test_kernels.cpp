// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "sharpc/error.hpp"
#include "sharpc/kernels.hpp"

using namespace sharpc::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Random sparse square matrix in CSR form with a few entries per row.
struct Csr {
  std::vector<std::int32_t> row_ptr{0}, col;
  std::vector<double> val;
  CsrView view() const { return {row_ptr, col, val}; }
};

Csr random_csr(std::int32_t n, std::mt19937_64& rng) {
  Csr a;
  std::uniform_int_distribution<std::int32_t> pick(0, n - 1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (std::int32_t i = 0; i < n; ++i) {
    const int count = 1 + static_cast<int>(rng() % 9);
    for (int k = 0; k < count; ++k) {
      a.col.push_back(pick(rng));
      a.val.push_back(d(rng));
    }
    a.row_ptr.push_back(static_cast<std::int32_t>(a.col.size()));
  }
  return a;
}

}  // namespace

TEST_CASE("scalar kernels compute the textbook results") {
  const std::vector<double> x{1, 2, 3}, y{4, 5, 6};
  CHECK(scalar::dot(x, y) == 32.0);
  std::vector<double> z = y;
  scalar::axpy(2.0, x, z);
  CHECK(z == std::vector<double>{6, 9, 12});
  z = y;
  scalar::xpby(x, -1.0, z);
  CHECK(z == std::vector<double>{-3, -3, -3});
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  if (!backend_supported(Backend::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(7);
  // Lengths straddle the 4-wide and 16-wide unrolls, including remainders.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 15u, 16u, 17u, 33u, 1000u, 4099u}) {
    CAPTURE(n);
    const auto x = random_vector(n, rng);
    const auto y = random_vector(n, rng);
    const double ds = scalar::dot(x, y), dv = avx2::dot(x, y);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += std::abs(x[i] * y[i]);
    CHECK(std::abs(ds - dv) <= 1e-13 * (scale + 1.0));

    // axpy and xpby have no reductions, so FMA contraction is the only source
    // of difference: one rounding per element.
    auto ys = y, yv = y;
    scalar::axpy(0.37, x, ys);
    avx2::axpy(0.37, x, yv);
    for (std::size_t i = 0; i < n; ++i) CHECK(ys[i] == doctest::Approx(yv[i]).epsilon(1e-15));
    ys = y;
    yv = y;
    scalar::xpby(x, -1.3, ys);
    avx2::xpby(x, -1.3, yv);
    for (std::size_t i = 0; i < n; ++i) CHECK(ys[i] == doctest::Approx(yv[i]).epsilon(1e-15));
  }
  for (std::int32_t n : {1, 7, 64, 513}) {
    const auto a = random_csr(n, rng);
    const auto x = random_vector(static_cast<std::size_t>(n), rng);
    std::vector<double> ys(static_cast<std::size_t>(n)), yv(static_cast<std::size_t>(n));
    scalar::spmv(a.view(), x, ys);
    avx2::spmv(a.view(), x, yv);
    for (std::int32_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yv[i]) <= 1e-13);
  }
}

TEST_CASE("backend can be switched and the dispatcher follows it") {
  const Backend saved = active_backend();
  CHECK(backend_supported(Backend::Scalar));
  set_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  const std::vector<double> x{1, 2, 3, 4, 5}, y{5, 4, 3, 2, 1};
  CHECK(dot(x, y) == 35.0);
  if (backend_supported(Backend::Avx2)) {
    set_backend(Backend::Avx2);
    CHECK(dot(x, y) == 35.0);
  } else {
    CHECK_THROWS_AS(set_backend(Backend::Avx2), sharpc::DomainError);
  }
  set_backend(saved);
  CHECK(backend_name(Backend::Scalar) == "scalar");
}
