// SPDX-License-Identifier: Apache-2.0
#pragma once

// Dense and sparse vector kernels used by the eigen- and linear solvers.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The variant is chosen once at startup from CPUID and can
// be overridden for equivalence testing. Reductions in the SIMD variant use
// four independent accumulators, so results agree with the scalar reference
// to rounding, not bit-for-bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace sharpc::kernels {

enum class Backend { Scalar, Avx2 };

/// Compressed-row view of a square matrix (full pattern, not just a triangle).
struct CsrView {
  std::span<const std::int32_t> row_ptr;  // size rows + 1
  std::span<const std::int32_t> col;
  std::span<const double> val;
  std::int32_t rows() const { return static_cast<std::int32_t>(row_ptr.size()) - 1; }
};

bool backend_supported(Backend b);
Backend active_backend();
/// Throws DomainError if `b` is not supported on this CPU/build.
void set_backend(Backend b);
std::string_view backend_name(Backend b);

double dot(std::span<const double> x, std::span<const double> y);
/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);
/// y = x + b * y
void xpby(std::span<const double> x, double b, std::span<double> y);
/// y = A x
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double b, std::span<double> y);
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);
}  // namespace scalar

namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double b, std::span<double> y);
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);
}  // namespace avx2

}  // namespace sharpc::kernels
