// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "sharpc/error.hpp"
#include "sharpc/fem.hpp"
#include "sharpc/kernels.hpp"

namespace sharpc::fem {

namespace {

using Dense = std::vector<std::vector<double>>;

// Cyclic Jacobi on a small symmetric matrix: eigenvalues ascending, columns
// of the returned matrix are the eigenvectors.
std::pair<std::vector<double>, Dense> symmetric_eigen(Dense a) {
  const auto m = a.size();
  Dense v(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * total) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a[x][x] < a[y][y]; });
  std::vector<double> values(m);
  Dense vectors(m, std::vector<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    values[j] = a[order[j]][order[j]];
    for (std::size_t i = 0; i < m; ++i) vectors[i][j] = v[i][order[j]];
  }
  return {values, vectors};
}

// Rayleigh-Ritz for the pencil (ga, gw) of Gram matrices. Directions on which
// gw is numerically zero are dropped. Returns Ritz values and coefficient
// columns normalized so that C^T gw C = I.
std::pair<std::vector<double>, Dense> rayleigh_ritz(const Dense& ga, const Dense& gw) {
  const auto m = ga.size();
  auto [wd, wv] = symmetric_eigen(gw);
  const double cutoff = 1e-12 * std::max(wd.back(), 0.0);
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < m; ++j)
    if (wd[j] > cutoff && wd[j] > 0.0) kept.push_back(j);
  if (kept.empty()) throw ConvergenceError("eigensolver: iteration block collapsed");
  const auto r = kept.size();
  Dense t(m, std::vector<double>(r));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) t[i][k] = wv[i][kept[k]] / std::sqrt(wd[kept[k]]);
  Dense reduced(r, std::vector<double>(r, 0.0));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s += t[i][k] * ga[i][j] * t[j][l];
      reduced[k][l] = s;
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < k; ++l) reduced[k][l] = reduced[l][k] = 0.5 * (reduced[k][l] + reduced[l][k]);
  auto [theta, z] = symmetric_eigen(reduced);
  Dense c(m, std::vector<double>(r, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t k = 0; k < r; ++k) c[i][l] += t[i][k] * z[k][l];
  return {theta, c};
}

// Solves A y = b. With constant deflation A is singular with kernel spanned
// by constants and b is orthogonal to them; vertex 0 is pinned to zero.
class PencilSolver {
 public:
  PencilSolver(const SparseSymmetric& a, bool pinned, const SolverOptions& options) : pinned_(pinned) {
    if (pinned_) {
      std::vector<bool> keep(a.dim(), true);
      keep[0] = false;
      solver_.emplace(a.principal_submatrix(keep), options);
    } else {
      solver_.emplace(a, options);
    }
  }

  void solve(std::span<const double> b, std::span<double> y) const {
    if (!pinned_) {
      solver_->solve(b, y);
      return;
    }
    y[0] = 0.0;
    solver_->solve(b.subspan(1), y.subspan(1));
  }

  std::string method() const { return solver_->method(); }

 private:
  bool pinned_;
  std::optional<SpdSolver> solver_;
};

}  // namespace

std::string to_string(BoundaryCondition::Type type) {
  switch (type) {
    case BoundaryCondition::Type::Dirichlet:
      return "dirichlet";
    case BoundaryCondition::Type::Neumann:
      return "neumann";
    case BoundaryCondition::Type::Robin:
      return "robin";
  }
  return "?";
}

EigenSample solve_pencil(const SparseSymmetric& a, const SparseSymmetric& w, Deflation deflation,
                         const EigenOptions& options) {
  const auto n = static_cast<std::size_t>(a.dim());
  if (w.dim() != a.dim()) throw DomainError("solve_pencil: dimension mismatch");
  const bool deflate = deflation == Deflation::Constants;
  const std::size_t available = deflate ? n - 1 : n;
  if (n == 0 || available == 0) throw DomainError("solve_pencil: empty reduced system");
  const auto m = std::min<std::size_t>(static_cast<std::size_t>(std::max(options.block_size, 1)), available);

  const CsrMatrix acsr = a.to_csr();
  const CsrMatrix wcsr = w.to_csr();

  // W-orthogonal projection off the constants.
  std::vector<double> wc(n);
  double cwc = 0.0;
  if (deflate) {
    const std::vector<double> ones(n, 1.0);
    wcsr.multiply(ones, wc);
    cwc = std::accumulate(wc.begin(), wc.end(), 0.0);
    if (!(cwc > 0.0)) throw DomainError("solve_pencil: weight form vanishes on constants");
  }
  auto project = [&](std::vector<double>& x) {
    if (!deflate) return;
    const double s = kernels::dot(wc, x) / cwc;
    for (auto& v : x) v -= s;
  };

  const PencilSolver solver(a, deflate, options.solver);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Dense x(m, std::vector<double>(n));
  for (auto& col : x) {
    for (auto& v : col) v = unif(rng);
    project(col);
  }

  Dense y(m, std::vector<double>(n)), ay(m, std::vector<double>(n)), wy(m, std::vector<double>(n));
  std::vector<double> b(n);
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t j = 0; j < m; ++j) {
      wcsr.multiply(x[j], b);
      solver.solve(b, y[j]);
      project(y[j]);
      acsr.multiply(y[j], ay[j]);
      wcsr.multiply(y[j], wy[j]);
    }
    Dense ga(m, std::vector<double>(m)), gw(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        ga[i][j] = ga[j][i] = 0.5 * (kernels::dot(y[i], ay[j]) + kernels::dot(y[j], ay[i]));
        gw[i][j] = gw[j][i] = 0.5 * (kernels::dot(y[i], wy[j]) + kernels::dot(y[j], wy[i]));
      }
    const auto [theta, c] = rayleigh_ritz(ga, gw);

    // New block X = Y C; the first column carries the wanted Ritz pair.
    const auto r = theta.size();
    for (std::size_t l = 0; l < m; ++l) std::fill(x[l].begin(), x[l].end(), 0.0);
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t i = 0; i < m; ++i) kernels::axpy(c[i][l], y[i], x[l]);
    for (std::size_t l = r; l < m; ++l) {
      for (auto& v : x[l]) v = unif(rng);
      project(x[l]);
    }

    std::vector<double> ax(n, 0.0), wx(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      kernels::axpy(c[i][0], ay[i], ax);
      kernels::axpy(c[i][0], wy[i], wx);
    }
    const double lambda = theta[0];
    if (!(lambda > 0.0)) throw ConvergenceError("solve_pencil: non-positive Ritz value");
    std::vector<double> res = ax;
    kernels::axpy(-lambda, wx, res);
    const double residual = std::sqrt(kernels::dot(res, res)) / (lambda * std::sqrt(kernels::dot(wx, wx)));
    if (residual <= options.tol) {
      EigenSample out;
      out.lambda = lambda;
      out.residual = residual;
      out.iterations = it;
      out.seed = options.seed;
      out.method = "block-inverse-iteration/" + solver.method();
      out.eigenvector = x[0];
      const auto big = std::max_element(out.eigenvector.begin(), out.eigenvector.end(),
                                        [](double p, double q) { return std::abs(p) < std::abs(q); });
      if (*big < 0.0)
        for (auto& v : out.eigenvector) v = -v;
      return out;
    }
  }
  throw ConvergenceError("solve_pencil: residual target not reached within the iteration budget");
}

EigenSample eigen_smallest(const Mesh& mesh, const AssembledForms& forms, const BoundaryCondition& bc,
                           const EigenOptions& options) {
  EigenSample s;
  switch (bc.type) {
    case BoundaryCondition::Type::Neumann:
      s = solve_pencil(forms.stiffness, forms.mass, Deflation::Constants, options);
      break;
    case BoundaryCondition::Type::Robin:
      if (forms.boundary_mass.empty()) throw DomainError("eigen_smallest: Robin condition needs a boundary form");
      s = solve_pencil(forms.stiffness.plus(forms.boundary_mass), forms.mass, Deflation::None, options);
      break;
    case BoundaryCondition::Type::Dirichlet: {
      const TagSet present = mesh.tags();
      for (const auto tag : bc.tags)
        if (!present.contains(tag)) throw DomainError("eigen_smallest: mesh has no boundary tagged '" + to_string(tag) + "'");
      const auto fixed = mesh.boundary_vertex_mask(bc.tags.empty() ? present : bc.tags);
      std::vector<bool> keep(fixed.size());
      for (std::size_t i = 0; i < fixed.size(); ++i) keep[i] = !fixed[i];
      s = solve_pencil(forms.stiffness.principal_submatrix(keep), forms.mass.principal_submatrix(keep),
                       Deflation::None, options);
      std::vector<double> full(fixed.size(), 0.0);
      std::size_t k = 0;
      for (std::size_t i = 0; i < full.size(); ++i)
        if (keep[i]) full[i] = s.eigenvector[k++];
      s.eigenvector = std::move(full);
      break;
    }
  }
  s.h = mesh.h;
  return s;
}

EigenSample eigen_steklov(const Mesh& mesh, const AssembledForms& forms, const EigenOptions& options) {
  if (forms.tags.empty() || forms.boundary_mass.empty())
    throw DomainError("eigen_steklov: the Steklov boundary portion is empty");
  EigenSample s = solve_pencil(forms.stiffness, forms.boundary_mass, Deflation::Constants, options);
  s.h = mesh.h;
  return s;
}

}  // namespace sharpc::fem
