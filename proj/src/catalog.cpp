// SPDX-License-Identifier: Apache-2.0
#include "sharpc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sharpc/error.hpp"
#include "sharpc/specfun.hpp"

namespace sharpc::catalog {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

// q <= bound with a relative slack for rounding in np/(n-p).
bool within(Exponent q, Exponent bound, bool open) {
  if (bound.is_infinite()) return !(open && q.is_infinite());
  if (q.is_infinite()) return false;
  return q.value() <= bound.value() * (1.0 + 1e-12);
}

}  // namespace

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << value_;
  return os.str();
}

CriticalExponents critical_exponents(int n, double p) {
  CriticalExponents c;
  const double nd = static_cast<double>(n);
  if (p < nd) {
    c.p_star = Exponent(nd * p / (nd - p));
    c.p_dstar = Exponent((nd - 1.0) * p / (nd - p));
  }
  c.p_star_open = (p == nd && n > 1);
  c.p_dstar_open = (p == nd);
  return c;
}

std::string admissibility_violation(const ExponentSpec& spec) {
  std::ostringstream os;
  if (spec.n < 1) return "dimension n must be >= 1";
  if (!(spec.p >= 1.0) || !std::isfinite(spec.p)) {
    os << "p must satisfy 1 <= p < inf (got " << spec.p << ")";
    return os.str();
  }
  if (!spec.q.is_infinite() && !(spec.q.value() >= 1.0)) {
    os << "q must satisfy q >= 1 (got " << spec.q.to_string() << ")";
    return os.str();
  }
  const CriticalExponents c = critical_exponents(spec.n, spec.p);
  switch (spec.context) {
    case Context::OneDim:
      if (spec.n != 1) return "one-dimensional context requires n = 1";
      [[fallthrough]];
    case Context::Interior:
      if (!within(spec.q, c.p_star, c.p_star_open)) {
        if (spec.p < spec.n)
          os << "q must satisfy q <= p* = np/(n-p) = " << c.p_star.to_string() << " when 1 <= p < n";
        else
          os << "q must be finite when p = n > 1";
        return os.str();
      }
      return {};
    case Context::Boundary:
      if (spec.n < 2) return "boundary inequality requires n >= 2";
      if (!within(spec.q, c.p_dstar, c.p_dstar_open)) {
        if (spec.p < spec.n)
          os << "q must satisfy q <= p** = (n-1)p/(n-p) = " << c.p_dstar.to_string() << " when 1 <= p < n";
        else
          os << "q must be finite when p = n";
        return os.str();
      }
      return {};
  }
  return {};
}

bool is_admissible(const ExponentSpec& spec) { return admissibility_violation(spec).empty(); }

// ---------------------------------------------------------------------------

CatalogDomain CatalogDomain::rectangle(double a, double b) {
  require_positive(a, "rectangle side a");
  require_positive(b, "rectangle side b");
  return CatalogDomain(Rectangle{a, b});
}

CatalogDomain CatalogDomain::right_iso_triangle(double leg) {
  require_positive(leg, "triangle leg");
  return CatalogDomain(RightIsoTriangle{leg});
}

CatalogDomain CatalogDomain::right30_triangle(double hypotenuse) {
  require_positive(hypotenuse, "triangle hypotenuse");
  return CatalogDomain(Right30Triangle{hypotenuse});
}

CatalogDomain CatalogDomain::equilateral_triangle(double side) {
  require_positive(side, "triangle side");
  return CatalogDomain(EquilateralTriangle{side});
}

CatalogDomain CatalogDomain::disk(double radius) {
  require_positive(radius, "disk radius");
  return CatalogDomain(Disk{radius});
}

CatalogDomain CatalogDomain::interval(double length) {
  require_positive(length, "interval length");
  return CatalogDomain(Interval{length});
}

CatalogDomain CatalogDomain::product(const CatalogDomain& left, const CatalogDomain& right) {
  return CatalogDomain(Product{std::make_shared<const CatalogDomain>(left), std::make_shared<const CatalogDomain>(right)});
}

int CatalogDomain::dimension() const {
  return std::visit(Overloaded{[](const Interval&) { return 1; },
                               [](const Product& p) { return p.left->dimension() + p.right->dimension(); },
                               [](const auto&) { return 2; }},
                    shape_);
}

double CatalogDomain::measure() const {
  return std::visit(Overloaded{[](const Rectangle& r) { return r.a * r.b; },
                               [](const RightIsoTriangle& t) { return 0.5 * t.leg * t.leg; },
                               [](const Right30Triangle& t) {
                                 return std::sqrt(3.0) / 8.0 * t.hypotenuse * t.hypotenuse;
                               },
                               [](const EquilateralTriangle& t) { return std::sqrt(3.0) / 4.0 * t.side * t.side; },
                               [](const Disk& d) { return kPi * d.radius * d.radius; },
                               [](const Interval& i) { return i.length; },
                               [](const Product& p) { return p.left->measure() * p.right->measure(); }},
                    shape_);
}

double CatalogDomain::diameter() const {
  return std::visit(Overloaded{[](const Rectangle& r) { return std::hypot(r.a, r.b); },
                               [](const RightIsoTriangle& t) { return std::sqrt(2.0) * t.leg; },
                               [](const Right30Triangle& t) { return t.hypotenuse; },
                               [](const EquilateralTriangle& t) { return t.side; },
                               [](const Disk& d) { return 2.0 * d.radius; },
                               [](const Interval& i) { return i.length; },
                               [](const Product& p) { return std::hypot(p.left->diameter(), p.right->diameter()); }},
                    shape_);
}

std::string CatalogDomain::name() const {
  std::ostringstream os;
  std::visit(Overloaded{[&](const Rectangle& r) { os << "rectangle(" << r.a << "x" << r.b << ")"; },
                        [&](const RightIsoTriangle& t) { os << "right-iso-triangle(" << t.leg << ")"; },
                        [&](const Right30Triangle& t) { os << "right30-triangle(" << t.hypotenuse << ")"; },
                        [&](const EquilateralTriangle& t) { os << "equilateral-triangle(" << t.side << ")"; },
                        [&](const Disk& d) { os << "disk(" << d.radius << ")"; },
                        [&](const Interval& i) { os << "interval(" << i.length << ")"; },
                        [&](const Product& p) { os << p.left->name() << "*" << p.right->name(); }},
             shape_);
  return os.str();
}

// ---------------------------------------------------------------------------

double lambda1(const CatalogDomain& domain, BoundaryKind kind) {
  const bool dirichlet = kind == BoundaryKind::Dirichlet;
  auto sq = [](double v) { return v * v; };
  return std::visit(
      Overloaded{
          [&](const Rectangle& r) {
            return dirichlet ? sq(kPi / r.a) + sq(kPi / r.b) : sq(kPi / std::max(r.a, r.b));
          },
          [&](const RightIsoTriangle& t) { return (dirichlet ? 5.0 : 1.0) * sq(kPi / t.leg); },
          [&](const Right30Triangle& t) { return (dirichlet ? 112.0 / 9.0 : 16.0 / 9.0) * sq(kPi / t.hypotenuse); },
          [&](const EquilateralTriangle& t) { return (dirichlet ? 16.0 / 3.0 : 16.0 / 9.0) * sq(kPi / t.side); },
          [&](const Disk& d) {
            const double j = dirichlet ? specfun::bessel_zero(0, 1) : specfun::bessel_derivative_zero(1, 1);
            return sq(j / d.radius);
          },
          [&](const Interval& i) { return sq(kPi / i.length); },
          [&](const Product& p) {
            const double l1 = lambda1(*p.left, kind);
            const double l2 = lambda1(*p.right, kind);
            return dirichlet ? l1 + l2 : std::min(l1, l2);
          }},
      domain.shape());
}

double table_printed_coefficient(const CatalogDomain& triangle, BoundaryKind kind) {
  const bool dirichlet = kind == BoundaryKind::Dirichlet;
  return std::visit(Overloaded{[&](const RightIsoTriangle&) { return dirichlet ? 5.0 : 1.0; },
                               [&](const Right30Triangle&) { return dirichlet ? 112.0 / 9.0 : 16.0 / 3.0; },
                               [&](const EquilateralTriangle&) { return dirichlet ? 16.0 / 3.0 : 16.0 / 9.0; },
                               [](const auto&) -> double {
                                 throw DomainError("table_printed_coefficient: triangles only");
                               }},
                    triangle.shape());
}

double steklov_root_one_leg() {
  // tan z + tanh z has a pole at pi/2 and changes sign once on (pi/2, pi).
  return specfun::find_root([](double z) { return std::tan(z) + std::tanh(z); },
                            {0.5 * kPi + 1e-6, kPi, 1e-14});
}

double steklov_root_two_legs() {
  return specfun::find_root([](double z) { return std::tan(z) * std::tanh(z) - 1.0; },
                            {1e-6, 0.5 * kPi - 1e-6, 1e-14});
}

double steklov_lambda1_triangle(double leg, SteklovSelector selector) {
  require_positive(leg, "triangle leg");
  switch (selector) {
    case SteklovSelector::Hypotenuse:
      return std::sqrt(2.0) / leg;
    case SteklovSelector::OneLeg: {
      const double z = steklov_root_one_leg();
      return z * std::tanh(z) / leg;
    }
    case SteklovSelector::TwoLegs: {
      const double z = steklov_root_two_legs();
      return 2.0 * z * std::tanh(z) / leg;
    }
  }
  throw DomainError("steklov_lambda1_triangle: unknown selector");
}

double sharp_constant_quadratic(const CatalogDomain& domain, EigenKind kind) {
  double lambda = 0.0;
  switch (kind.type) {
    case EigenKind::Type::Dirichlet:
      lambda = lambda1(domain, BoundaryKind::Dirichlet);
      break;
    case EigenKind::Type::Neumann:
      lambda = lambda1(domain, BoundaryKind::Neumann);
      break;
    case EigenKind::Type::Steklov: {
      const auto* t = std::get_if<RightIsoTriangle>(&domain.shape());
      if (t == nullptr) throw DomainError("Steklov closed form known only for the right isosceles triangle");
      lambda = steklov_lambda1_triangle(t->leg, kind.selector);
      break;
    }
    case EigenKind::Type::Robin:
      throw DomainError("no closed form for the Robin (Friedrichs) eigenvalue");
  }
  return 1.0 / std::sqrt(lambda);
}

// ---------------------------------------------------------------------------

double schmidt_constant(double p, Exponent q, double length) {
  require_positive(length, "interval length");
  const ExponentSpec spec{1, p, q, Context::OneDim};
  if (const std::string why = admissibility_violation(spec); !why.empty()) throw InadmissibleError(why);
  const double inv_q = q.reciprocal();
  const double inv_pc = Exponent(p).conjugate().reciprocal();  // 1/p' = 1 - 1/p
  const double c1 = specfun::frak_f(inv_q + inv_pc) / (2.0 * specfun::frak_f(inv_q) * specfun::frak_f(inv_pc));
  return c1 * std::pow(length, 1.0 + inv_q - 1.0 / p);
}

OneDimPoincare one_d_poincare_constant(double p, Exponent q) {
  const double value = schmidt_constant(p, q, 1.0);
  const bool exact = !q.is_infinite() && q.value() <= 3.0 * p;
  return {value, exact};
}

double unit_sphere_measure(int k) {
  if (k < 0) throw DomainError("unit_sphere_measure: k must be >= 0");
  const double h = 0.5 * (k + 1);
  return 2.0 * std::pow(kPi, h) / specfun::gamma(h);
}

double sobolev_constant(int n, double p) {
  if (n < 2) throw DomainError("sobolev_constant: n must be >= 2");
  if (!(p >= 1.0) || !(p < n)) throw InadmissibleError("sobolev_constant: requires 1 <= p < n");
  const double nd = n;
  const double omega = unit_sphere_measure(n - 1);
  if (p == 1.0) return std::pow(omega, -1.0 / nd) * std::pow(nd, (1.0 - nd) / nd);
  const double pc = p / (p - 1.0);
  return std::pow(omega, -1.0 / nd) * std::pow(nd, -1.0 / p) * std::pow((p - 1.0) / (nd - p), 1.0 / pc) *
         std::pow(specfun::beta(nd / p, nd / pc + 1.0), -1.0 / nd);
}

double trace_sobolev_constant(int n, double p) {
  if (n < 2) throw DomainError("trace_sobolev_constant: n must be >= 2");
  if (!(p >= 1.0) || !(p < n)) throw InadmissibleError("trace_sobolev_constant: requires 1 <= p < n");
  if (p == 1.0) return 1.0;
  const double nd = n;
  const double pc = p / (p - 1.0);
  const double bracket =
      0.5 * unit_sphere_measure(n - 2) * specfun::beta(0.5 * (nd - 1.0), (nd - 1.0) / (2.0 * (p - 1.0)));
  return std::pow((p - 1.0) / (nd - p), 1.0 / pc) * std::pow(bracket, -1.0 / ((nd - 1.0) * pc));
}

double sobolev_poincare_lower_bound(int n, double p) { return std::pow(2.0, 1.0 / n) * sobolev_constant(n, p); }

// ---------------------------------------------------------------------------

GeometricBounds geometric_bounds(const CatalogDomain& domain) {
  if (!domain.is_planar()) throw DomainError("geometric_bounds: planar domains only");
  const double area = domain.measure();
  const double j0 = specfun::bessel_zero(0, 1);
  const double j1 = specfun::bessel_derivative_zero(1, 1);
  GeometricBounds b{};
  // The equal-area disk has radius^2 = area / pi.
  if (const auto* d = std::get_if<Disk>(&domain.shape())) {
    b.fk_lower = (j0 / d->radius) * (j0 / d->radius);
    b.sw_upper = (j1 / d->radius) * (j1 / d->radius);
  } else {
    b.fk_lower = kPi * j0 * j0 / area;
    b.sw_upper = kPi * j1 * j1 / area;
  }
  const double diam = domain.diameter();
  b.pw_lower = (kPi / diam) * (kPi / diam);
  return b;
}

double product_poincare_upper(double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("product_poincare_upper: constants must be positive");
  return std::sqrt(2.0) * (c1 + c2);
}

std::string to_string(SteklovSelector selector) {
  switch (selector) {
    case SteklovSelector::Hypotenuse:
      return "hypotenuse";
    case SteklovSelector::OneLeg:
      return "leg";
    case SteklovSelector::TwoLegs:
      return "legs";
  }
  return "?";
}

std::string to_string(BoundaryKind kind) { return kind == BoundaryKind::Dirichlet ? "dirichlet" : "neumann"; }

}  // namespace sharpc::catalog
