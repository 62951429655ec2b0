// SPDX-License-Identifier: Apache-2.0
#include "sharpc/verify.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/extrapolate.hpp"
#include "sharpc/fem.hpp"
#include "sharpc/oracle1d.hpp"

namespace sharpc::verify {

namespace {

using catalog::BoundaryKind;
using catalog::CatalogDomain;
using catalog::SteklovSelector;
using report::make_record;
using report::param;
using report::Relation;
using report::ReportRecord;
using Records = std::vector<ReportRecord>;

constexpr double kPi = std::numbers::pi;
constexpr int kGrid = 2048;
constexpr double kFemSlack = 1e-9;

std::vector<CatalogDomain> table_domains(double a) {
  return {CatalogDomain::square(a), CatalogDomain::right_iso_triangle(a), CatalogDomain::right30_triangle(a),
          CatalogDomain::equilateral_triangle(a), CatalogDomain::disk(a)};
}

std::string fem_method(const fem::EigenRun& run) {
  return "p1-fem/" + run.samples.back().method + "+richardson";
}

std::vector<fem::HSample> h_samples(const fem::EigenRun& run) {
  std::vector<fem::HSample> hs;
  for (const auto& s : run.samples) hs.push_back({s.h, s.lambda});
  return hs;
}

// ---------------------------------------------------------------------------

std::vector<Task> tables_tasks(double tol) {
  std::vector<Task> tasks;
  for (const auto& d : table_domains(1.0))
    for (const auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann})
      tasks.push_back([d, kind, tol]() -> Records {
        const fem::EigenProblem problem{
            kind == BoundaryKind::Dirichlet ? fem::EigenProblem::Kind::Dirichlet : fem::EigenProblem::Kind::Neumann, {}};
        const auto run = fem::run_h_sequence(d, problem, default_h_sequence());
        const auto ex = fem::extrapolate(h_samples(run));
        return {make_record("lambda1", {param("domain", d.name()), param("bc", catalog::to_string(kind))},
                            catalog::lambda1(d, kind), ex.extrapolated, fem_method(run), tol)};
      });
  for (const auto sel : {SteklovSelector::Hypotenuse, SteklovSelector::OneLeg, SteklovSelector::TwoLegs})
    tasks.push_back([sel, tol]() -> Records {
      const auto d = CatalogDomain::right_iso_triangle(1.0);
      const auto run = fem::run_h_sequence(d, {fem::EigenProblem::Kind::Steklov, fem::steklov_tags(sel)}, default_h_sequence());
      const auto ex = fem::extrapolate(h_samples(run));
      return {make_record("steklov_lambda1", {param("domain", d.name()), param("g", catalog::to_string(sel))},
                          catalog::steklov_lambda1_triangle(1.0, sel), ex.extrapolated, fem_method(run), tol)};
    });
  return tasks;
}

// ---------------------------------------------------------------------------

std::vector<double> exponent_grid(double p) {
  std::vector<double> qs{1.0, 2.0, p, 2.0 * p, 3.0 * p};
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

std::vector<Task> oned_tasks(double tol) {
  std::vector<Task> tasks;
  for (const double p : {1.5, 2.0, 3.0})
    for (const double q : exponent_grid(p))
      tasks.push_back([p, q, tol]() -> Records {
        const auto params = report::Parameters{param("p", p), param("q", q), param("N", kGrid)};
        const double c1 = catalog::schmidt_constant(p, q);
        const auto zb = oracle1d::minimize_interval_ratio({p, q, oracle1d::Constraint::ZeroBoundary, kGrid});
        Records out{make_record("schmidt_zero_boundary", params, c1, zb.value, "interval-descent", tol)};
        if (q <= 3.0 * p) {
          const auto zm = oracle1d::classify_extremal_symmetry(p, q, kGrid);
          const auto exact = catalog::one_d_poincare_constant(p, q);
          out.push_back(make_record("poincare_zero_mean", params, exact.value, zm.constant, "interval-descent/two-start", tol));
        }
        return out;
      });
  for (const double q : {4.0, 6.0, 10.0})
    tasks.push_back([q, tol]() -> Records {
      const double p = 2.0;
      const auto params = report::Parameters{param("p", p), param("q", q), param("N", kGrid)};
      const auto c = oracle1d::classify_extremal_symmetry(p, q, kGrid);
      const double c1 = catalog::schmidt_constant(p, q);
      const bool breaking = q > 3.0 * p;
      const std::string method = "interval-descent/two-start";
      return {make_record(breaking ? "zero_mean_strict_gap" : "zero_mean_gap", params, c1, c.constant, method, tol,
                          breaking ? Relation::Exceeds : Relation::Match),
              make_record(breaking ? "extremal_not_antisymmetric" : "extremal_antisymmetric", params,
                          oracle1d::kAntisymmetryTolerance, c.defect, method, 0.0,
                          breaking ? Relation::Exceeds : Relation::UpperBound, 0.0)};
    });
  return tasks;
}

// ---------------------------------------------------------------------------

std::vector<Task> sobolev_tasks(double tol) {
  std::vector<Task> tasks;
  constexpr double kCutoff = 50.0;
  constexpr int kCells = 4096;
  auto radial_record = [tol](int n, double p, double cutoff) {
    const auto est = oracle1d::minimize_radial_sobolev(n, p, cutoff, kCells);
    auto r = make_record("sobolev_constant", {param("n", n), param("p", p), param("R", cutoff), param("N", kCells)},
                         catalog::sobolev_constant(n, p), est.value,
                         est.converged ? "radial-descent" : "radial-descent (iteration budget reached)", tol);
    if (est.boundary_affected) {
      r.method += "; cutoff too small";
      r.status = report::Status::FAIL;
    }
    return std::pair{r, est.value};
  };
  for (const auto& [n, p] : std::vector<std::pair<int, double>>{{3, 2.0}, {4, 2.0}, {3, 1.5}})
    tasks.push_back([=]() -> Records { return {radial_record(n, p, kCutoff).first}; });
  tasks.push_back([=]() -> Records {
    const auto a = radial_record(3, 2.0, kCutoff);
    const auto b = radial_record(3, 2.0, 2.0 * kCutoff);
    return {make_record("radial_cutoff_invariance", {param("n", 3), param("p", 2.0), param("R", 2.0 * kCutoff)},
                        a.second, b.second, "radial-descent, R vs 2R", 1e-3)};
  });
  tasks.push_back([]() -> Records {
    return {make_record("sobolev_constant", {param("n", 2), param("p", 1.0)}, 1.0 / (2.0 * std::sqrt(kPi)),
                        catalog::sobolev_constant(2, 1.0), "catalog p=1 branch", 1e-15)};
  });
  return tasks;
}

// ---------------------------------------------------------------------------

std::vector<Task> trace_tasks(double tol) {
  std::vector<Task> tasks;
  tasks.push_back([tol]() -> Records {
    Records out;
    const double c3 = catalog::trace_sobolev_constant(3, 2.0);
    const double ref = oracle1d::escobar_trace_ratio(3, 2.0, 1.0);
    for (const double a : {0.1, 1.0, 10.0}) {
      const double v = oracle1d::escobar_trace_ratio(3, 2.0, a);
      out.push_back(make_record("trace_constant", {param("n", 3), param("p", 2.0), param("a", a)}, c3, v,
                                "escobar-quadrature", tol));
      if (a != 1.0)
        out.push_back(make_record("trace_offset_invariance", {param("n", 3), param("p", 2.0), param("a", a)}, ref, v,
                                  "escobar-quadrature, a vs 1", tol));
    }
    return out;
  });
  tasks.push_back([tol]() -> Records {
    Records out;
    for (const auto& [n, p] : std::vector<std::pair<int, double>>{{2, 1.5}, {3, 1.5}, {4, 2.0}, {5, 3.0}})
      out.push_back(make_record("trace_constant", {param("n", n), param("p", p), param("a", 1.0)},
                                catalog::trace_sobolev_constant(n, p), oracle1d::escobar_trace_ratio(n, p, 1.0),
                                "escobar-quadrature", tol));
    for (int n = 2; n <= 5; ++n)
      out.push_back(make_record("trace_constant", {param("n", n), param("p", 1.0)}, 1.0,
                                catalog::trace_sobolev_constant(n, 1.0), "catalog p=1 branch", 0.0));
    return out;
  });
  return tasks;
}

// ---------------------------------------------------------------------------

Records geometric_bound_records(double a) {
  Records out;
  std::vector<CatalogDomain> domains = table_domains(a);
  domains.push_back(CatalogDomain::rectangle(a, 2.0 * a));
  domains.push_back(CatalogDomain::product(CatalogDomain::interval(a), CatalogDomain::interval(2.0 * a)));
  for (const auto& d : domains) {
    const auto b = catalog::geometric_bounds(d);
    const double ld = catalog::lambda1(d, BoundaryKind::Dirichlet);
    const double ln = catalog::lambda1(d, BoundaryKind::Neumann);
    const auto params = report::Parameters{param("domain", d.name())};
    const bool disk = std::holds_alternative<catalog::Disk>(d.shape());
    out.push_back(make_record("faber_krahn", params, b.fk_lower, ld, "catalog", 1e-12,
                              disk ? Relation::Match : Relation::LowerBound));
    out.push_back(make_record("szego_weinberger", params, b.sw_upper, ln, "catalog", 1e-12,
                              disk ? Relation::Match : Relation::UpperBound));
    out.push_back(make_record("payne_weinberger", params, b.pw_lower, ln, "catalog", 0.0, Relation::LowerBound));
  }
  return out;
}

Records catalog_invariant_records() {
  Records out;
  // Domain monotonicity of the rectangle's Dirichlet eigenvalue.
  for (const double a : {0.5, 1.0, 2.0}) {
    const double base = catalog::lambda1(CatalogDomain::rectangle(a, 1.0), BoundaryKind::Dirichlet);
    const double wider = catalog::lambda1(CatalogDomain::rectangle(1.1 * a, 1.0), BoundaryKind::Dirichlet);
    out.push_back(make_record("rectangle_dirichlet_decreasing", {param("a", a), param("b", 1.0), param("factor", 1.1)},
                              wider, base, "catalog", 0.0, Relation::Exceeds));
  }
  // Product rule against the equivalent rectangle.
  for (const auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
    const auto prod = CatalogDomain::product(CatalogDomain::interval(1.0), CatalogDomain::interval(2.0));
    out.push_back(make_record("product_rule", {param("domain", prod.name()), param("bc", catalog::to_string(kind))},
                              catalog::lambda1(CatalogDomain::rectangle(1.0, 2.0), kind), catalog::lambda1(prod, kind),
                              "catalog", 0.0));
  }
  // Duality C1(p, q) = C1(q', p').
  for (const double p : {1.5, 2.0, 3.0, 4.0})
    for (const double q : {1.5, 2.0, 3.0, 6.0}) {
      const double qc = q / (q - 1.0);
      out.push_back(make_record("schmidt_duality", {param("p", p), param("q", q)}, catalog::schmidt_constant(p, q),
                                catalog::schmidt_constant(qc, catalog::Exponent(p).conjugate()), "catalog", 1e-12));
    }
  // Scaling law in the interval length.
  for (const double l : {0.5, 2.0, 3.0}) {
    const double p = 2.0;
    const double q = 4.0;
    out.push_back(make_record("schmidt_scaling", {param("p", p), param("q", q), param("l", l)},
                              std::pow(l, 1.0 + 1.0 / q - 1.0 / p) * catalog::schmidt_constant(p, q),
                              catalog::schmidt_constant(p, q, l), "catalog", 1e-14));
  }
  // Quadratic constants are lambda^{-1/2}.
  for (const auto& d : table_domains(1.0))
    for (const auto kind : {catalog::EigenKind::dirichlet(), catalog::EigenKind::neumann()}) {
      const double c = catalog::sharp_constant_quadratic(d, kind);
      const double l = catalog::lambda1(
          d, kind.type == catalog::EigenKind::Type::Dirichlet ? BoundaryKind::Dirichlet : BoundaryKind::Neumann);
      out.push_back(make_record("quadratic_constant_identity",
                                {param("domain", d.name()),
                                 param("bc", kind.type == catalog::EigenKind::Type::Dirichlet ? "dirichlet" : "neumann")},
                                1.0, c * c * l, "catalog", 1e-14));
    }
  // Product Poincare upper bound on the unit square.
  const double c = 1.0 / kPi;
  out.push_back(make_record("product_poincare_upper", {param("c1", c), param("c2", c)},
                            catalog::product_poincare_upper(c, c),
                            std::pow(catalog::lambda1(CatalogDomain::square(1.0), BoundaryKind::Neumann), -0.5),
                            "catalog", 0.0, Relation::UpperBound));
  return out;
}

// Rayleigh-Ritz one-sided bound and monotonicity under refinement.
Records fem_bound_records(const CatalogDomain& d, const fem::EigenProblem& problem, double exact, const std::string& label) {
  const auto run = fem::run_h_sequence(d, problem, default_h_sequence());
  Records out;
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    const auto& s = run.samples[i];
    const auto params = report::Parameters{param("domain", d.name()), param("bc", label), param("h", s.h)};
    out.push_back(make_record("fem_rayleigh_ritz_bound", params, exact, s.lambda, "p1-fem", 0.0, Relation::LowerBound,
                              kFemSlack));
    if (i > 0)
      out.push_back(make_record("fem_refinement_monotone", params, run.samples[i - 1].lambda, s.lambda, "p1-fem", 0.0,
                                Relation::UpperBound, kFemSlack));
  }
  return out;
}

std::vector<Task> bounds_tasks() {
  std::vector<Task> tasks;
  for (const double a : {0.5, 1.0, 2.0}) tasks.push_back([a]() { return geometric_bound_records(a); });
  tasks.push_back([]() { return catalog_invariant_records(); });
  for (const auto& d : table_domains(1.0)) {
    if (std::holds_alternative<catalog::Disk>(d.shape())) continue;  // polygonal geometry error, no one-sided bound
    for (const auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann})
      tasks.push_back([d, kind]() {
        const fem::EigenProblem problem{
            kind == BoundaryKind::Dirichlet ? fem::EigenProblem::Kind::Dirichlet : fem::EigenProblem::Kind::Neumann, {}};
        return fem_bound_records(d, problem, catalog::lambda1(d, kind), catalog::to_string(kind));
      });
  }
  for (const auto sel : {SteklovSelector::Hypotenuse, SteklovSelector::OneLeg, SteklovSelector::TwoLegs})
    tasks.push_back([sel]() {
      return fem_bound_records(CatalogDomain::right_iso_triangle(1.0),
                               {fem::EigenProblem::Kind::Steklov, fem::steklov_tags(sel)},
                               catalog::steklov_lambda1_triangle(1.0, sel), "steklov-" + catalog::to_string(sel));
    });
  return tasks;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "tables") return Suite::Tables;
  if (name == "oned") return Suite::OneD;
  if (name == "sobolev") return Suite::Sobolev;
  if (name == "trace") return Suite::Trace;
  if (name == "bounds") return Suite::Bounds;
  if (name == "all") return Suite::All;
  throw DomainError("unknown suite '" + name + "' (expected tables, oned, sobolev, trace, bounds or all)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Tables:
      return "tables";
    case Suite::OneD:
      return "oned";
    case Suite::Sobolev:
      return "sobolev";
    case Suite::Trace:
      return "trace";
    case Suite::Bounds:
      return "bounds";
    case Suite::All:
      return "all";
  }
  return "?";
}

double default_tolerance(Suite suite) {
  switch (suite) {
    case Suite::OneD:
    case Suite::Trace:
      return 1e-3;
    default:
      return 0.01;
  }
}

std::vector<double> default_h_sequence() { return {0.1, 0.05, 0.025, 0.0125}; }

std::vector<report::ReportRecord> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Records> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const std::exception& e) {
      ReportRecord r;
      r.quantity = "task_error";
      r.parameters = {param("task", static_cast<double>(i))};
      r.method = e.what();
      r.status = report::Status::FAIL;
      results[i] = {r};
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, tasks.size()); ++w)
      pool.emplace_back([&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  Records out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return out;
}

std::vector<Task> suite_tasks(Suite suite, const VerifyOptions& options) {
  const double tol = options.tol.value_or(default_tolerance(suite));
  switch (suite) {
    case Suite::Tables:
      return tables_tasks(tol);
    case Suite::OneD:
      return oned_tasks(tol);
    case Suite::Sobolev:
      return sobolev_tasks(tol);
    case Suite::Trace:
      return trace_tasks(tol);
    case Suite::Bounds:
      return bounds_tasks();
    case Suite::All: {
      std::vector<Task> all;
      for (const auto s : {Suite::Tables, Suite::OneD, Suite::Sobolev, Suite::Trace, Suite::Bounds}) {
        auto part = suite_tasks(s, options);
        all.insert(all.end(), part.begin(), part.end());
      }
      return all;
    }
  }
  return {};
}

std::vector<report::ReportRecord> run_suite(Suite suite, const VerifyOptions& options) {
  return run_tasks(suite_tasks(suite, options), options.jobs);
}

}  // namespace sharpc::verify
