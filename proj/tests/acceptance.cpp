// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sharpc/catalog.hpp"
#include "sharpc/extrapolate.hpp"
#include "sharpc/fem.hpp"
#include "sharpc/oracle1d.hpp"
#include "sharpc/report.hpp"
#include "sharpc/verify.hpp"

using namespace sharpc;
using catalog::BoundaryKind;
using catalog::CatalogDomain;
using catalog::SteklovSelector;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(double x, double c) { return std::abs(x - c) / std::abs(c); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every FEM sequence is kept for the one-sided bound check.
struct FemRun {
  std::string label;
  double exact;
  std::vector<fem::EigenSample> samples;
};
std::vector<FemRun> polygon_runs;

double extrapolated(const fem::EigenRun& run) {
  std::vector<fem::HSample> hs;
  for (const auto& s : run.samples) hs.push_back({s.h, s.lambda});
  return fem::extrapolate(hs).extrapolated;
}

Outcome planar_eigenvalues() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_polygon = 0, worst_disk = 0;
  for (const auto& d : {CatalogDomain::square(1), CatalogDomain::right_iso_triangle(1), CatalogDomain::right30_triangle(1),
                        CatalogDomain::equilateral_triangle(1), CatalogDomain::disk(1)})
    for (auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
      const bool dir = kind == BoundaryKind::Dirichlet;
      const auto run = fem::run_h_sequence(
          d, {dir ? fem::EigenProblem::Kind::Dirichlet : fem::EigenProblem::Kind::Neumann, {}}, verify::default_h_sequence());
      const double exact = catalog::lambda1(d, kind);
      const double err = rel(extrapolated(run), exact);
      const bool disk = std::holds_alternative<catalog::Disk>(d.shape());
      (disk ? worst_disk : worst_polygon) = std::max(disk ? worst_disk : worst_polygon, err);
      if (!disk) polygon_runs.push_back({d.name() + " " + catalog::to_string(kind), exact, run.samples});
    }
  const double t = seconds_since(t0);
  return {worst_polygon <= 5e-3 && worst_disk <= 1e-2 && t < 300,
          "worst polygon error " + fmt("%.2e", worst_polygon) + ", disk " + fmt("%.2e", worst_disk) + ", " +
              fmt("%.1f s", t)};
}

Outcome steklov_eigenvalues() {
  const double reference[] = {1.4142, 2.3236, 1.3765};
  const SteklovSelector sels[] = {SteklovSelector::Hypotenuse, SteklovSelector::OneLeg, SteklovSelector::TwoLegs};
  double worst_digits = 0, worst_fem = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = catalog::steklov_lambda1_triangle(1, sels[i]);
    worst_digits = std::max(worst_digits, std::abs(exact - reference[i]));
    const auto run = fem::run_h_sequence(CatalogDomain::right_iso_triangle(1),
                                         {fem::EigenProblem::Kind::Steklov, fem::steklov_tags(sels[i])},
                                         verify::default_h_sequence());
    worst_fem = std::max(worst_fem, rel(extrapolated(run), reference[i]));
    polygon_runs.push_back({"right-iso-triangle steklov " + catalog::to_string(sels[i]), exact, run.samples});
  }
  return {worst_digits <= 5e-5 && worst_fem <= 1e-2,
          "reference digits off by " + fmt("%.1e", worst_digits) + ", FEM " + fmt("%.2e", worst_fem)};
}

Outcome schmidt_grid() {
  double worst = 0;
  int checked = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    std::vector<double> qs{1, 2, p, 2 * p, 3 * p};
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (double q : qs) {
      const double c1 = catalog::schmidt_constant(p, q);
      worst = std::max(worst, std::abs(oracle1d::minimize_interval_ratio({p, q, oracle1d::Constraint::ZeroBoundary, 2048}).value - c1));
      worst = std::max(worst, std::abs(oracle1d::classify_extremal_symmetry(p, q, 2048).constant - c1));
      checked += 2;
    }
  }
  return {worst <= 1e-3, std::to_string(checked) + " oracle runs, worst |C_h - C1| " + fmt("%.2e", worst)};
}

Outcome symmetry() {
  const auto a4 = oracle1d::classify_extremal_symmetry(2, 4, 2048);
  const auto a6 = oracle1d::classify_extremal_symmetry(2, 6, 2048);
  const auto b10 = oracle1d::classify_extremal_symmetry(2, 10, 2048);
  const bool ok = a4.antisymmetric && std::abs(a4.gap) <= 1e-3 && a6.antisymmetric && std::abs(a6.gap) <= 1e-3 &&
                  !b10.antisymmetric && b10.gap > 1e-3;
  return {ok, "gap(2,4) " + fmt("%.1e", a4.gap) + ", gap(2,6) " + fmt("%.1e", a6.gap) + ", gap(2,10) " +
                  fmt("%.4f", b10.gap) + " with defect " + fmt("%.3f", b10.defect)};
}

Outcome sobolev() {
  double worst = 0;
  bool clean = true;
  for (auto [n, p] : {std::pair{3, 2.0}, std::pair{4, 2.0}, std::pair{3, 1.5}}) {
    const auto est = oracle1d::minimize_radial_sobolev(n, p, 50, 4096);
    worst = std::max(worst, rel(est.value, catalog::sobolev_constant(n, p)));
    clean = clean && !est.boundary_affected;
  }
  const double p1 = catalog::sobolev_constant(2, 1);
  const bool exact = rel(p1, 1 / (2 * std::sqrt(kPi))) <= 1e-15;
  return {worst <= 1e-2 && clean && exact, "worst radial error " + fmt("%.2e", worst) + ", p=1 value " + fmt("%.16g", p1)};
}

Outcome trace() {
  const double c = std::pow(kPi, -0.25);
  std::vector<double> v;
  for (double a : {0.1, 1.0, 10.0}) v.push_back(oracle1d::escobar_trace_ratio(3, 2, a));
  double worst = 0, spread = 0;
  for (double x : v) {
    worst = std::max(worst, rel(x, c));
    spread = std::max(spread, std::abs(x - v[1]));
  }
  bool ones = true;
  for (int n = 2; n <= 6; ++n) ones = ones && catalog::trace_sobolev_constant(n, 1) == 1.0;
  return {worst <= 1e-3 && spread <= 1e-3 && ones,
          "worst error " + fmt("%.1e", worst) + ", offset spread " + fmt("%.1e", spread) + ", C3(n,1) = 1 exact"};
}

Outcome bounds() {
  const auto records = verify::run_suite(verify::Suite::Bounds, {});
  int failed = 0;
  for (const auto& r : records) failed += r.status == report::Status::FAIL;
  return {failed == 0 && !records.empty(), std::to_string(records.size()) + " records, " + std::to_string(failed) + " failed"};
}

Outcome one_sided() {
  int violations = 0, checks = 0;
  for (const auto& run : polygon_runs) {
    double previous = INFINITY;
    for (const auto& s : run.samples) {
      const double slack = std::max(s.residual, 1e-9);
      violations += s.lambda < run.exact * (1 - slack);
      violations += s.lambda > previous * (1 + slack);
      previous = s.lambda;
      checks += 2;
    }
  }
  return {violations == 0 && checks > 0, std::to_string(checks) + " comparisons over " +
                                             std::to_string(polygon_runs.size()) + " sequences, " +
                                             std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"planar first eigenvalues", planar_eigenvalues}, {"mixed Steklov eigenvalues", steklov_eigenvalues},
      {"Schmidt constant grid", schmidt_grid}, {"zero-mean symmetry breaking", symmetry},
      {"Sobolev constant", sobolev},          {"trace constant", trace},
      {"bounds property suite", bounds},      {"one-sided FEM bound", one_sided},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu %-30s %s  (%s)\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
