// SPDX-License-Identifier: Apache-2.0
#include <atomic>

#include "sharpc/error.hpp"
#include "sharpc/kernels.hpp"

namespace sharpc::kernels {

#if !defined(SHARPC_HAVE_AVX2_TU)
// Keep the avx2 namespace linkable on builds without the AVX2 translation
// unit; backend_supported(Avx2) is false there so these are never called.
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y) { return scalar::dot(x, y); }
void axpy(double a, std::span<const double> x, std::span<double> y) { scalar::axpy(a, x, y); }
void xpby(std::span<const double> x, double b, std::span<double> y) { scalar::xpby(x, b, y); }
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) { scalar::spmv(a, x, y); }
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(SHARPC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool backend_supported(Backend b) {
  if (b == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) throw DomainError("kernel backend not supported on this CPU: " + std::string(backend_name(b)));
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

double dot(std::span<const double> x, std::span<const double> y) {
  return active_backend() == Backend::Avx2 ? avx2::dot(x, y) : scalar::dot(x, y);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  if (active_backend() == Backend::Avx2)
    avx2::axpy(a, x, y);
  else
    scalar::axpy(a, x, y);
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  if (active_backend() == Backend::Avx2)
    avx2::xpby(x, b, y);
  else
    scalar::xpby(x, b, y);
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
  if (active_backend() == Backend::Avx2)
    avx2::spmv(a, x, y);
  else
    scalar::spmv(a, x, y);
}

}  // namespace sharpc::kernels
