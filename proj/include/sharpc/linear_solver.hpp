// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sharpc/sparse.hpp"

namespace sharpc::fem {

/// Reverse Cuthill-McKee ordering of the matrix graph; perm[new] = old.
std::vector<std::int32_t> reverse_cuthill_mckee(const CsrMatrix& a);

/// Envelope (skyline) Cholesky factorization A = L L^T of an SPD matrix
/// after RCM reordering. Throws DomainError if a pivot is not positive.
class EnvelopeCholesky {
 public:
  explicit EnvelopeCholesky(const CsrMatrix& a);

  std::int32_t dim() const { return n_; }
  std::size_t envelope_size() const { return values_.size(); }
  void solve(std::span<const double> b, std::span<double> x) const;

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> perm_;     // perm_[new] = old
  std::vector<std::int32_t> first_;    // first column stored in row i
  std::vector<std::size_t> offset_;    // start of row i in values_
  std::vector<double> values_;         // row i holds L(i, first_[i] .. i)
};

struct CgResult {
  int iterations;
  double relative_residual;
};

/// Jacobi-preconditioned conjugate gradients; x holds the initial guess.
/// Throws ConvergenceError if the relative residual does not reach `tol`.
CgResult conjugate_gradient(const CsrMatrix& a, std::span<const double> b, std::span<double> x, double tol = 1e-13,
                            int max_iterations = 20000);

struct SolverOptions {
  /// Systems up to this dimension are factored directly; larger ones use CG.
  std::int32_t direct_threshold = 60000;
  double cg_tolerance = 1e-13;
};

/// SPD solver choosing direct factorization or CG by size.
class SpdSolver {
 public:
  SpdSolver(const SparseSymmetric& a, SolverOptions options = {});
  void solve(std::span<const double> b, std::span<double> x) const;
  bool direct() const { return direct_; }
  std::string method() const { return direct_ ? "envelope-cholesky" : "jacobi-cg"; }

 private:
  CsrMatrix csr_;
  SolverOptions options_;
  bool direct_;
  std::optional<EnvelopeCholesky> factor_;
};

}  // namespace sharpc::fem
