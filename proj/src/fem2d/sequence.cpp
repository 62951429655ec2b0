// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "sharpc/error.hpp"
#include "sharpc/fem.hpp"

namespace sharpc::fem {

std::string to_string(EigenProblem::Kind kind) {
  switch (kind) {
    case EigenProblem::Kind::Dirichlet:
      return "dirichlet";
    case EigenProblem::Kind::Neumann:
      return "neumann";
    case EigenProblem::Kind::Robin:
      return "robin";
    case EigenProblem::Kind::Steklov:
      return "steklov";
  }
  return "?";
}

TagSet steklov_tags(catalog::SteklovSelector selector) {
  switch (selector) {
    case catalog::SteklovSelector::Hypotenuse:
      return {BoundaryTag::Hypotenuse};
    case catalog::SteklovSelector::OneLeg:
      return {BoundaryTag::Leg1};
    case catalog::SteklovSelector::TwoLegs:
      return {BoundaryTag::Leg1, BoundaryTag::Leg2};
  }
  return {};
}

EigenRun run_h_sequence(const catalog::CatalogDomain& domain, const EigenProblem& problem, std::vector<double> hs,
                        const EigenOptions& options) {
  if (hs.empty()) throw DomainError("run_h_sequence: no mesh sizes given");
  std::sort(hs.begin(), hs.end(), std::greater<>());
  for (double h : hs)
    if (!(h > 0.0)) throw DomainError("run_h_sequence: mesh sizes must be positive");
  if (problem.kind == EigenProblem::Kind::Steklov && problem.g.empty())
    throw DomainError("run_h_sequence: Steklov problems need a boundary portion");

  const bool disk = std::holds_alternative<catalog::Disk>(domain.shape());
  bool nested = !disk;
  for (std::size_t i = 1; i < hs.size(); ++i) nested = nested && std::abs(hs[i - 1] / hs[i] - 2.0) < 1e-9;

  EigenRun run;
  Mesh mesh;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    mesh = (i > 0 && nested) ? refine(mesh) : build_mesh(domain, hs[i]);
    const TagSet g = problem.g.empty() && problem.kind == EigenProblem::Kind::Robin ? mesh.tags() : problem.g;
    const auto forms = assemble(mesh, problem.kind == EigenProblem::Kind::Dirichlet ? TagSet{} : g);
    EigenSample s;
    switch (problem.kind) {
      case EigenProblem::Kind::Dirichlet:
        s = eigen_smallest(mesh, forms, BoundaryCondition::dirichlet(problem.g), options);
        break;
      case EigenProblem::Kind::Neumann:
        s = eigen_smallest(mesh, forms, BoundaryCondition::neumann(), options);
        break;
      case EigenProblem::Kind::Robin:
        s = eigen_smallest(mesh, forms, BoundaryCondition::robin(), options);
        break;
      case EigenProblem::Kind::Steklov:
        s = eigen_steklov(mesh, forms, options);
        break;
    }
    s.eigenvector.clear();
    s.eigenvector.shrink_to_fit();
    run.samples.push_back(std::move(s));
  }
  run.finest = std::move(mesh);
  return run;
}

}  // namespace sharpc::fem
