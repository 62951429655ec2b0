// SPDX-License-Identifier: Apache-2.0
#include "sharpc/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "sharpc/error.hpp"
#include "sharpc/kernels.hpp"

namespace sharpc::fem {

namespace {

// Breadth-first level structure from `start`; returns the visit order and the
// last vertex reached (a far vertex, used to find a pseudo-peripheral start).
std::vector<std::int32_t> bfs_order(const CsrMatrix& a, std::int32_t start, std::vector<char>& seen,
                                    const std::vector<std::int32_t>& degree) {
  std::vector<std::int32_t> order;
  std::deque<std::int32_t> queue{start};
  seen[start] = 1;
  std::vector<std::int32_t> nbrs;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    order.push_back(v);
    nbrs.clear();
    for (auto k = a.row_ptr()[v]; k < a.row_ptr()[v + 1]; ++k) {
      const auto w = a.col()[k];
      if (!seen[w]) {
        seen[w] = 1;
        nbrs.push_back(w);
      }
    }
    std::stable_sort(nbrs.begin(), nbrs.end(), [&](auto x, auto y) { return degree[x] < degree[y]; });
    queue.insert(queue.end(), nbrs.begin(), nbrs.end());
  }
  return order;
}

}  // namespace

std::vector<std::int32_t> reverse_cuthill_mckee(const CsrMatrix& a) {
  const auto n = a.rows();
  std::vector<std::int32_t> degree(n);
  for (std::int32_t i = 0; i < n; ++i) degree[i] = a.row_ptr()[i + 1] - a.row_ptr()[i];
  std::vector<char> placed(n, 0);
  std::vector<std::int32_t> perm;
  perm.reserve(n);
  for (std::int32_t seed = 0; seed < n; ++seed) {
    if (placed[seed]) continue;
    // Component: pick its minimum-degree vertex, then walk to a far vertex twice.
    std::vector<char> probe = placed;
    auto comp = bfs_order(a, seed, probe, degree);
    std::int32_t start = *std::min_element(comp.begin(), comp.end(), [&](auto x, auto y) { return degree[x] < degree[y]; });
    for (int sweep = 0; sweep < 2; ++sweep) {
      probe = placed;
      start = bfs_order(a, start, probe, degree).back();
    }
    const auto order = bfs_order(a, start, placed, degree);
    perm.insert(perm.end(), order.begin(), order.end());
  }
  std::reverse(perm.begin(), perm.end());
  return perm;
}

EnvelopeCholesky::EnvelopeCholesky(const CsrMatrix& a) : n_(a.rows()), perm_(reverse_cuthill_mckee(a)) {
  std::vector<std::int32_t> inv(n_);
  for (std::int32_t i = 0; i < n_; ++i) inv[perm_[i]] = i;

  first_.assign(n_, 0);
  for (std::int32_t i = 0; i < n_; ++i) {
    std::int32_t f = i;
    const auto old = perm_[i];
    for (auto k = a.row_ptr()[old]; k < a.row_ptr()[old + 1]; ++k) f = std::min(f, inv[a.col()[k]]);
    first_[i] = f;
  }
  offset_.assign(n_ + 1, 0);
  for (std::int32_t i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + static_cast<std::size_t>(i - first_[i] + 1);
  values_.assign(offset_[n_], 0.0);
  for (std::int32_t i = 0; i < n_; ++i) {
    const auto old = perm_[i];
    for (auto k = a.row_ptr()[old]; k < a.row_ptr()[old + 1]; ++k) {
      const auto j = inv[a.col()[k]];
      if (j <= i) values_[offset_[i] + (j - first_[i])] = a.val()[k];
    }
  }

  for (std::int32_t i = 0; i < n_; ++i) {
    double* row_i = values_.data() + offset_[i];
    const auto fi = first_[i];
    for (std::int32_t j = fi; j < i; ++j) {
      const double* row_j = values_.data() + offset_[j];
      const auto k0 = std::max(fi, first_[j]);
      const auto len = static_cast<std::size_t>(j - k0);
      const double s = kernels::dot({row_i + (k0 - fi), len}, {row_j + (k0 - first_[j]), len});
      row_i[j - fi] = (row_i[j - fi] - s) / row_j[j - first_[j]];
    }
    const auto len = static_cast<std::size_t>(i - fi);
    const double d = row_i[i - fi] - kernels::dot({row_i, len}, {row_i, len});
    if (!(d > 0.0)) throw DomainError("EnvelopeCholesky: matrix is not positive definite");
    row_i[i - fi] = std::sqrt(d);
  }
}

void EnvelopeCholesky::solve(std::span<const double> b, std::span<double> x) const {
  std::vector<double> z(n_);
  for (std::int32_t i = 0; i < n_; ++i) z[i] = b[perm_[i]];
  for (std::int32_t i = 0; i < n_; ++i) {
    const double* row = values_.data() + offset_[i];
    const auto fi = first_[i];
    const auto len = static_cast<std::size_t>(i - fi);
    z[i] = (z[i] - kernels::dot({row, len}, {z.data() + fi, len})) / row[i - fi];
  }
  for (std::int32_t i = n_ - 1; i >= 0; --i) {
    const double* row = values_.data() + offset_[i];
    const auto fi = first_[i];
    z[i] /= row[i - fi];
    kernels::axpy(-z[i], {row, static_cast<std::size_t>(i - fi)}, {z.data() + fi, static_cast<std::size_t>(i - fi)});
  }
  for (std::int32_t i = 0; i < n_; ++i) x[perm_[i]] = z[i];
}

CgResult conjugate_gradient(const CsrMatrix& a, std::span<const double> b, std::span<double> x, double tol,
                            int max_iterations) {
  const auto n = static_cast<std::size_t>(a.rows());
  const auto diag = a.diagonal();
  std::vector<double> r(n), z(n), p(n), ap(n);
  a.multiply(x, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  const double bnorm = std::sqrt(kernels::dot(b, b));
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return {0, 0.0};
  }
  for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = kernels::dot(r, z);
  for (int it = 1; it <= max_iterations; ++it) {
    a.multiply(p, ap);
    const double alpha = rz / kernels::dot(p, ap);
    kernels::axpy(alpha, p, x);
    kernels::axpy(-alpha, ap, r);
    const double rel = std::sqrt(kernels::dot(r, r)) / bnorm;
    if (rel <= tol) return {it, rel};
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
    const double rz_new = kernels::dot(r, z);
    kernels::xpby(z, rz_new / rz, p);
    rz = rz_new;
  }
  throw ConvergenceError("conjugate_gradient: iteration budget exhausted");
}

SpdSolver::SpdSolver(const SparseSymmetric& a, SolverOptions options)
    : csr_(a.to_csr()), options_(options), direct_(a.dim() <= options.direct_threshold) {
  if (direct_) factor_.emplace(csr_);
}

void SpdSolver::solve(std::span<const double> b, std::span<double> x) const {
  if (direct_) {
    factor_->solve(b, x);
    return;
  }
  std::fill(x.begin(), x.end(), 0.0);
  conjugate_gradient(csr_, b, x, options_.cg_tolerance, 20 * csr_.rows() + 100);
}

}  // namespace sharpc::fem
