// SPDX-License-Identifier: Apache-2.0
#pragma once

// Piecewise-linear finite elements for the smallest eigenvalue of the
// Laplacian on planar meshes: Dirichlet, Neumann, Robin and mixed Steklov
// conditions.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sharpc/catalog.hpp"
#include "sharpc/linear_solver.hpp"
#include "sharpc/mesh.hpp"
#include "sharpc/sparse.hpp"

namespace sharpc::fem {

using Local3 = std::array<std::array<double, 3>, 3>;
using Local2 = std::array<std::array<double, 2>, 2>;

/// Element stiffness of the linear hat functions on triangle (a, b, c):
/// K_ij = e_i . e_j / (4A), e_i the edge opposite vertex i. Off-diagonal
/// entries equal -cot(angle opposite the edge) / 2.
Local3 local_stiffness(Point a, Point b, Point c);
/// Consistent element mass (A/12) [[2,1,1],[1,2,1],[1,1,2]].
Local3 local_mass(double area);
/// Consistent mass of a boundary edge of length L: (L/6) [[2,1],[1,2]].
Local2 local_boundary_mass(double length);

struct AssembledForms {
  SparseSymmetric stiffness;
  SparseSymmetric mass;
  SparseSymmetric boundary_mass;  // over the edges tagged in `tags`; empty if none
  TagSet tags;
};

/// Global stiffness, mass and boundary mass over the edges whose tag is in
/// `g`. Throws DomainError if `g` names a tag the mesh does not carry.
AssembledForms assemble(const Mesh& mesh, const TagSet& g = {});

struct BoundaryCondition {
  enum class Type { Dirichlet, Neumann, Robin };
  Type type = Type::Dirichlet;
  TagSet tags;  // Dirichlet portion; empty means the whole boundary

  static BoundaryCondition dirichlet(TagSet tags = {}) { return {Type::Dirichlet, std::move(tags)}; }
  static BoundaryCondition neumann() { return {Type::Neumann, {}}; }
  /// Uses the boundary mass of the assembled forms as the Robin term.
  static BoundaryCondition robin() { return {Type::Robin, {}}; }
};

std::string to_string(BoundaryCondition::Type type);

struct EigenOptions {
  double tol = 1e-10;  // relative residual target
  int max_iterations = 500;
  std::uint64_t seed = 20240611;
  int block_size = 4;
  SolverOptions solver;
};

struct EigenSample {
  double h = 0.0;
  double lambda = 0.0;
  double residual = 0.0;  // |A u - lambda W u| / (lambda |W u|)
  int iterations = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::vector<double> eigenvector;  // one entry per mesh vertex (or pencil row)
};

/// How the pencil's null space is handled.
enum class Deflation {
  None,       // A is positive definite
  Constants,  // A annihilates constants; iterate W-orthogonally to them
};

/// Smallest eigenpair of A u = lambda W u (smallest positive with constant
/// deflation) by block inverse iteration with Rayleigh-Ritz, shift 0.
/// Throws ConvergenceError if the residual target is not met in budget.
EigenSample solve_pencil(const SparseSymmetric& a, const SparseSymmetric& w, Deflation deflation,
                         const EigenOptions& options = {});

/// Smallest Dirichlet/Robin eigenvalue or smallest positive Neumann one.
EigenSample eigen_smallest(const Mesh& mesh, const AssembledForms& forms, const BoundaryCondition& bc,
                           const EigenOptions& options = {});

/// Smallest positive lambda of K u = lambda B u, B assembled over the
/// Steklov portion; the rest of the boundary is natural (zero flux).
/// Throws DomainError if the forms carry no boundary portion.
EigenSample eigen_steklov(const Mesh& mesh, const AssembledForms& forms, const EigenOptions& options = {});

struct EigenProblem {
  enum class Kind { Dirichlet, Neumann, Robin, Steklov };
  Kind kind = Kind::Dirichlet;
  /// Steklov portion, Robin portion or Dirichlet portion; empty means the
  /// whole boundary (not allowed for Steklov).
  TagSet g;
};

std::string to_string(EigenProblem::Kind kind);

/// Boundary portion of the right isosceles triangle for a Steklov selector.
TagSet steklov_tags(catalog::SteklovSelector selector);

struct EigenRun {
  std::vector<EigenSample> samples;  // decreasing h
  Mesh finest;
};

/// Solves on every h (sorted decreasing). Polygonal domains whose sizes
/// halve step by step are refined from the coarsest mesh, so the discrete
/// spaces are nested and lambda_h cannot increase; the disk (and any other
/// sequence) is meshed afresh for each h.
EigenRun run_h_sequence(const catalog::CatalogDomain& domain, const EigenProblem& problem, std::vector<double> hs,
                        const EigenOptions& options = {});

}  // namespace sharpc::fem
