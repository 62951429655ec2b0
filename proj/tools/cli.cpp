// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sharpc/catalog.hpp"
#include "sharpc/error.hpp"
#include "sharpc/extrapolate.hpp"
#include "sharpc/fem.hpp"
#include "sharpc/oracle1d.hpp"
#include "sharpc/report.hpp"
#include "sharpc/verify.hpp"

namespace sharpc::cli {

namespace {

using catalog::CatalogDomain;
using report::make_record;
using report::param;
using report::ReportRecord;

catalog::Exponent parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return catalog::Exponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError("not an exponent: '" + s + "'");
  return catalog::Exponent(v);
}

CatalogDomain make_domain(const std::string& name, double a, std::optional<double> b) {
  if (name == "square") return CatalogDomain::square(a);
  if (name == "rectangle") return CatalogDomain::rectangle(a, b.value_or(a));
  if (name == "right-iso-triangle") return CatalogDomain::right_iso_triangle(a);
  if (name == "right30-triangle") return CatalogDomain::right30_triangle(a);
  if (name == "equilateral-triangle") return CatalogDomain::equilateral_triangle(a);
  if (name == "disk") return CatalogDomain::disk(a);
  if (name == "interval") return CatalogDomain::interval(a);
  throw DomainError("unknown domain '" + name + "'");
}

std::optional<catalog::SteklovSelector> parse_selector(const std::string& g) {
  if (g == "hypotenuse") return catalog::SteklovSelector::Hypotenuse;
  if (g == "leg" || g == "one-leg" || g == "leg1") return catalog::SteklovSelector::OneLeg;
  if (g == "legs" || g == "two-legs" || g == "leg1,leg2") return catalog::SteklovSelector::TwoLegs;
  return std::nullopt;
}

fem::TagSet parse_tags(const std::string& g) {
  if (const auto sel = parse_selector(g)) return fem::steklov_tags(*sel);
  fem::TagSet tags;
  std::stringstream ss(g);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) tags.insert(fem::parse_tag(item));
  return tags;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw DomainError("not a number list: '" + s + "'");
    v.push_back(x);
  }
  return v;
}

void emit(const std::vector<ReportRecord>& records, const std::string& format, std::ostream& out) {
  report::write_records(records, report::parse_format(format), out);
}

// ---------------------------------------------------------------------------

struct ConstantArgs {
  std::string kind;
  double p = 2.0;
  std::string q = "2";
  int n = 2;
  double l = 1.0;
  std::string domain = "square";
  double a = 1.0;
  std::optional<double> b;
  std::string bc = "dirichlet";
  std::string g = "hypotenuse";
};

std::vector<ReportRecord> cmd_constant(const ConstantArgs& c) {
  const auto info = [](std::string quantity, report::Parameters params, double value, std::string method) {
    return make_record(std::move(quantity), std::move(params), value, std::nullopt, std::move(method), 0.0);
  };
  if (c.kind == "schmidt") {
    const auto q = parse_exponent(c.q);
    return {info("schmidt_constant", {param("p", c.p), param("q", q.to_string()), param("l", c.l)},
                 catalog::schmidt_constant(c.p, q, c.l), "closed form")};
  }
  if (c.kind == "poincare") {
    const auto q = parse_exponent(c.q);
    const auto r = catalog::one_d_poincare_constant(c.p, q);
    return {info("poincare_zero_mean", {param("p", c.p), param("q", q.to_string()), param("exact", r.exact ? "true" : "false")},
                 r.value, r.exact ? "closed form" : "closed form (strict lower bound)")};
  }
  if (c.kind == "sobolev")
    return {info("sobolev_constant", {param("n", c.n), param("p", c.p)}, catalog::sobolev_constant(c.n, c.p), "closed form")};
  if (c.kind == "trace")
    return {info("trace_constant", {param("n", c.n), param("p", c.p)}, catalog::trace_sobolev_constant(c.n, c.p),
                 "closed form")};
  if (c.kind == "steklov-triangle") {
    const auto sel = parse_selector(c.g);
    if (!sel) throw DomainError("unknown Steklov portion '" + c.g + "' (expected hypotenuse, leg or legs)");
    return {info("steklov_lambda1", {param("a", c.a), param("g", catalog::to_string(*sel))},
                 catalog::steklov_lambda1_triangle(c.a, *sel), "closed form")};
  }
  if (c.kind == "quadratic") {
    const auto d = make_domain(c.domain, c.a, c.b);
    catalog::EigenKind kind;
    if (c.bc == "dirichlet") kind = catalog::EigenKind::dirichlet();
    else if (c.bc == "neumann") kind = catalog::EigenKind::neumann();
    else if (c.bc == "robin") kind = catalog::EigenKind::robin();
    else if (c.bc == "steklov") {
      const auto sel = parse_selector(c.g);
      if (!sel) throw DomainError("unknown Steklov portion '" + c.g + "'");
      kind = catalog::EigenKind::steklov(*sel);
    } else {
      throw DomainError("unknown boundary condition '" + c.bc + "'");
    }
    return {info("quadratic_constant", {param("domain", d.name()), param("bc", c.bc)},
                 catalog::sharp_constant_quadratic(d, kind), "lambda1^(-1/2)")};
  }
  throw DomainError("unknown constant kind '" + c.kind + "'");
}

// ---------------------------------------------------------------------------

struct EigenArgs {
  std::string domain = "square";
  double a = 1.0;
  std::optional<double> b;
  std::string bc = "dirichlet";
  std::string g;
  std::string h = "0.1,0.05,0.025";
  bool extrapolate = false;
  std::string dump_mesh;
  double tol = 0.01;
  std::uint64_t seed = fem::EigenOptions{}.seed;
  int max_iterations = fem::EigenOptions{}.max_iterations;
};

std::vector<ReportRecord> cmd_eigen(const EigenArgs& e) {
  const auto d = make_domain(e.domain, e.a, e.b);
  if (!d.is_planar()) throw DomainError("eigen: planar domains only");
  fem::EigenProblem problem;
  if (e.bc == "dirichlet") problem.kind = fem::EigenProblem::Kind::Dirichlet;
  else if (e.bc == "neumann") problem.kind = fem::EigenProblem::Kind::Neumann;
  else if (e.bc == "robin") problem.kind = fem::EigenProblem::Kind::Robin;
  else if (e.bc == "steklov") problem.kind = fem::EigenProblem::Kind::Steklov;
  else throw DomainError("unknown boundary condition '" + e.bc + "'");
  if (!e.g.empty()) problem.g = parse_tags(e.g);
  if (problem.kind == fem::EigenProblem::Kind::Steklov && problem.g.empty())
    throw DomainError("steklov needs --g (hypotenuse, leg, legs or tag names)");

  // Closed form where the catalog has one.
  std::optional<double> exact;
  const bool disk = std::holds_alternative<catalog::Disk>(d.shape());
  if (problem.kind == fem::EigenProblem::Kind::Dirichlet && problem.g.empty())
    exact = catalog::lambda1(d, catalog::BoundaryKind::Dirichlet);
  if (problem.kind == fem::EigenProblem::Kind::Neumann) exact = catalog::lambda1(d, catalog::BoundaryKind::Neumann);
  if (problem.kind == fem::EigenProblem::Kind::Steklov && std::holds_alternative<catalog::RightIsoTriangle>(d.shape()))
    for (const auto sel : {catalog::SteklovSelector::Hypotenuse, catalog::SteklovSelector::OneLeg,
                           catalog::SteklovSelector::TwoLegs})
      if (fem::steklov_tags(sel) == problem.g) exact = catalog::steklov_lambda1_triangle(e.a, sel);

  fem::EigenOptions options;
  options.seed = e.seed;
  options.max_iterations = e.max_iterations;
  const auto run = fem::run_h_sequence(d, problem, parse_list(e.h), options);
  if (!e.dump_mesh.empty()) {
    std::ofstream f(e.dump_mesh);
    if (!f) throw DomainError("cannot write mesh to '" + e.dump_mesh + "'");
    fem::write_off(run.finest, f);
  }

  std::string g_label;
  for (const auto t : problem.g) g_label += (g_label.empty() ? "" : ",") + fem::to_string(t);
  auto params = [&](double h) {
    report::Parameters p{param("domain", d.name()), param("bc", e.bc)};
    if (!g_label.empty()) p.push_back(param("g", g_label));
    p.push_back(param("h", h));
    return p;
  };
  std::vector<ReportRecord> out;
  for (const auto& s : run.samples) {
    auto ps = params(s.h);
    ps.push_back(param("residual", s.residual));
    ps.push_back(param("seed", std::to_string(s.seed)));
    // Conforming elements overestimate on polygons; the disk is only close.
    out.push_back(make_record("lambda_h", std::move(ps), exact, s.lambda, "p1-fem/" + s.method, e.tol,
                              disk ? report::Relation::Match : report::Relation::LowerBound, 1e-9));
  }
  if (e.extrapolate) {
    std::vector<fem::HSample> hs;
    for (const auto& s : run.samples) hs.push_back({s.h, s.lambda});
    const auto ex = fem::extrapolate(hs);
    auto ps = params(run.samples.back().h);
    ps.push_back(param("observed_order", ex.observed_order));
    out.push_back(make_record("lambda_extrapolated", std::move(ps), exact, ex.extrapolated, "p1-fem+richardson", e.tol));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string kind = "interval";
  double p = 2.0;
  double q = 2.0;
  int n = 3;
  std::string constraint = "zero-boundary";
  int grid = 2048;
  double cutoff = 50.0;
  double a = 1.0;
  std::optional<double> tol;  // 0.01 radial, 1e-3 otherwise
  std::string dump_extremal;
};

std::vector<ReportRecord> cmd_oracle(const OracleArgs& o) {
  const double tol = o.tol.value_or(o.kind == "radial" ? 0.01 : 1e-3);
  std::optional<oracle1d::RatioEstimate> extremal;
  std::vector<ReportRecord> out;
  if (o.kind == "interval") {
    oracle1d::Constraint c;
    if (o.constraint == "zero-boundary") c = oracle1d::Constraint::ZeroBoundary;
    else if (o.constraint == "zero-mean") c = oracle1d::Constraint::ZeroMean;
    else throw DomainError("unknown constraint '" + o.constraint + "'");
    const auto est = oracle1d::minimize_interval_ratio({o.p, o.q, c, o.grid});
    const auto closed = c == oracle1d::Constraint::ZeroBoundary ? catalog::schmidt_constant(o.p, o.q)
                                                                : catalog::one_d_poincare_constant(o.p, o.q).value;
    out.push_back(make_record(c == oracle1d::Constraint::ZeroBoundary ? "schmidt_zero_boundary" : "poincare_zero_mean",
                              {param("p", o.p), param("q", o.q), param("N", o.grid), param("iterations", est.iterations)},
                              closed, est.value, "interval-descent", tol));
    extremal = est;
  } else if (o.kind == "symmetry") {
    const auto s = oracle1d::classify_extremal_symmetry(o.p, o.q, o.grid);
    out.push_back(make_record("zero_mean_constant",
                              {param("p", o.p), param("q", o.q), param("N", o.grid),
                               param("antisymmetric", s.antisymmetric ? "true" : "false"), param("defect", s.defect),
                               param("gap", s.gap)},
                              catalog::schmidt_constant(o.p, o.q), s.constant, "interval-descent/two-start", tol,
                              o.q > 3.0 * o.p ? report::Relation::Exceeds : report::Relation::Match));
    extremal = s.best;
  } else if (o.kind == "radial") {
    const auto est = oracle1d::minimize_radial_sobolev(o.n, o.p, o.cutoff, o.grid);
    auto r = make_record("sobolev_constant",
                         {param("n", o.n), param("p", o.p), param("R", o.cutoff), param("N", o.grid),
                          param("converged", est.converged ? "true" : "false")},
                         catalog::sobolev_constant(o.n, o.p), est.value, "radial-descent", tol);
    if (est.boundary_affected) {
      r.method += "; cutoff too small";
      r.status = report::Status::FAIL;
    }
    out.push_back(r);
    extremal = est;
  } else if (o.kind == "escobar") {
    out.push_back(make_record("trace_constant", {param("n", o.n), param("p", o.p), param("a", o.a), param("N", o.grid)},
                              catalog::trace_sobolev_constant(o.n, o.p), oracle1d::escobar_trace_ratio(o.n, o.p, o.a, o.grid),
                              "escobar-quadrature", tol));
  } else {
    throw DomainError("unknown oracle kind '" + o.kind + "'");
  }
  if (!o.dump_extremal.empty()) {
    if (!extremal) throw DomainError("this oracle has no extremal to export");
    std::ofstream f(o.dump_extremal);
    if (!f) throw DomainError("cannot write extremal to '" + o.dump_extremal + "'");
    oracle1d::write_extremal_csv(*extremal, f);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp constants of Poincare- and Sobolev-type inequalities: closed forms and numerical checks", "sharpc"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  ConstantArgs ca;
  auto* constant = app.add_subcommand("constant", "Evaluate a closed-form constant");
  constant->add_option("--kind", ca.kind, "schmidt, poincare, sobolev, trace, quadratic or steklov-triangle")->required();
  constant->add_option("--p", ca.p, "Exponent p");
  constant->add_option("--q", ca.q, "Exponent q (number or inf)");
  constant->add_option("--n", ca.n, "Dimension");
  constant->add_option("--l", ca.l, "Interval length");
  constant->add_option("--domain", ca.domain, "Domain name");
  constant->add_option("--a", ca.a, "Size parameter");
  constant->add_option("--b", ca.b, "Second rectangle side");
  constant->add_option("--bc", ca.bc, "dirichlet, neumann, robin or steklov");
  constant->add_option("--g", ca.g, "Steklov portion: hypotenuse, leg or legs");
  add_format(constant);

  EigenArgs ea;
  auto* eigen = app.add_subcommand("eigen", "Finite-element first eigenvalue on a planar domain");
  eigen->set_help_flag("--help", "Print this help message and exit");
  eigen->add_option("--domain", ea.domain, "square, rectangle, right-iso-triangle, right30-triangle, equilateral-triangle or disk");
  eigen->add_option("--a", ea.a, "Size parameter");
  eigen->add_option("--b", ea.b, "Second rectangle side");
  eigen->add_option("--bc", ea.bc, "dirichlet, neumann, robin or steklov");
  eigen->add_option("--g", ea.g, "Boundary portion: hypotenuse, leg, legs or comma-separated tags");
  eigen->add_option("--h", ea.h, "Comma-separated mesh sizes");
  eigen->add_flag("--extrapolate", ea.extrapolate, "Append a Richardson-extrapolated record");
  eigen->add_option("--dump-mesh", ea.dump_mesh, "Write the finest mesh as OFF text");
  eigen->add_option("--tol", ea.tol, "Relative tolerance for status");
  eigen->add_option("--seed", ea.seed, "Start-vector seed");
  eigen->add_option("--max-iterations", ea.max_iterations, "Eigen-iteration budget per mesh")->check(CLI::PositiveNumber);
  add_format(eigen);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Run one numerical oracle");
  oracle->add_option("--kind", oa.kind, "interval, symmetry, radial or escobar");
  oracle->add_option("--p", oa.p, "Exponent p");
  oracle->add_option("--q", oa.q, "Exponent q");
  oracle->add_option("--n", oa.n, "Dimension (radial, escobar)");
  oracle->add_option("--constraint", oa.constraint, "zero-boundary or zero-mean");
  oracle->add_option("--grid", oa.grid, "Grid cells");
  oracle->add_option("--cutoff", oa.cutoff, "Radial cutoff R");
  oracle->add_option("--a", oa.a, "Escobar offset");
  oracle->add_option("--tol", oa.tol, "Relative tolerance for status (default 0.01 radial, 1e-3 otherwise)");
  oracle->add_option("--dump-extremal", oa.dump_extremal, "Write the extremal as CSV (x,u)");
  add_format(oracle);

  std::string suite = "all";
  std::optional<double> vtol;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("--suite", suite, "tables, oned, sobolev, trace, bounds or all");
  verify->add_option("--tol", vtol, "Tolerance (default 0.01 FEM/radial, 1e-3 interval/trace)");
  verify->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (constant->parsed()) {
      emit(cmd_constant(ca), format, out);
      return kOk;
    }
    if (eigen->parsed()) {
      const auto records = cmd_eigen(ea);
      emit(records, format, out);
      return report::any_failed(records) ? kVerificationFailed : kOk;
    }
    if (oracle->parsed()) {
      const auto records = cmd_oracle(oa);
      emit(records, format, out);
      return report::any_failed(records) ? kVerificationFailed : kOk;
    }
    const auto records = verify::run_suite(verify::parse_suite(suite), {vtol, jobs});
    emit(records, format, out);
    return report::any_failed(records) ? kVerificationFailed : kOk;
  } catch (const InadmissibleError& e) {
    err << "inadmissible: " << e.what() << '\n';
    return kInadmissible;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sharpc::cli
