// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form sharp constants, explicit first eigenvalues of the classical
// planar shapes, the exponent restrictions under which the gradient
// inequalities hold, and the isoperimetric-type eigenvalue bounds.

#include <limits>
#include <memory>
#include <string>
#include <variant>

namespace sharpc::catalog {

/// An exponent in [1, inf] with an explicit marker for infinity, so that
/// admissibility comparisons never depend on a large sentinel float.
class Exponent {
 public:
  constexpr Exponent(double value) : value_(value), infinite_(false) {}  // NOLINT(implicit)
  static constexpr Exponent infinity() { return Exponent(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; +inf as a double when infinite.
  constexpr double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }
  /// 1/q with 1/inf = 0.
  constexpr double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Hoelder conjugate p/(p-1), with 1' = inf and inf' = 1.
  constexpr Exponent conjugate() const {
    if (infinite_) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
  }

  friend constexpr bool operator==(Exponent a, Exponent b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Exponent() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

enum class Context { Interior, Boundary, OneDim };

struct ExponentSpec {
  int n = 1;
  double p = 2.0;
  Exponent q = 2.0;
  Context context = Context::Interior;

  Exponent p_conjugate() const { return Exponent(p).conjugate(); }
};

/// Largest admissible q. `*_open` means q must stay strictly below the
/// infinite marker (the p = n borderline).
struct CriticalExponents {
  Exponent p_star = Exponent::infinity();
  Exponent p_dstar = Exponent::infinity();
  bool p_star_open = false;
  bool p_dstar_open = false;
};

CriticalExponents critical_exponents(int n, double p);

/// True iff (n, p, q) satisfies the restriction block that matches the
/// context: Interior/OneDim use q <= p*, Boundary uses q <= p** (n >= 2).
bool is_admissible(const ExponentSpec& spec);

/// Human-readable reason for inadmissibility; empty when admissible.
std::string admissibility_violation(const ExponentSpec& spec);

// ---------------------------------------------------------------------------
// Domains

class CatalogDomain;

struct Rectangle {
  double a;
  double b;
};
struct RightIsoTriangle {
  double leg;
};
struct Right30Triangle {
  double hypotenuse;
};
struct EquilateralTriangle {
  double side;
};
struct Disk {
  double radius;
};
struct Interval {
  double length;
};
struct Product {
  std::shared_ptr<const CatalogDomain> left;
  std::shared_ptr<const CatalogDomain> right;
};

using Shape = std::variant<Rectangle, RightIsoTriangle, Right30Triangle, EquilateralTriangle, Disk,
                           Interval, Product>;

/// Immutable description of one of the tabulated shapes or a finite product
/// of them. Size parameters are validated on construction.
class CatalogDomain {
 public:
  static CatalogDomain rectangle(double a, double b);
  static CatalogDomain square(double a) { return rectangle(a, a); }
  static CatalogDomain right_iso_triangle(double leg);
  static CatalogDomain right30_triangle(double hypotenuse);
  static CatalogDomain equilateral_triangle(double side);
  static CatalogDomain disk(double radius);
  static CatalogDomain interval(double length);
  static CatalogDomain product(const CatalogDomain& left, const CatalogDomain& right);

  const Shape& shape() const { return shape_; }
  int dimension() const;
  /// n-dimensional measure (length, area, volume, ...).
  double measure() const;
  double diameter() const;
  bool is_planar() const { return dimension() == 2; }
  std::string name() const;

 private:
  explicit CatalogDomain(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

// ---------------------------------------------------------------------------
// Eigenvalues and quadratic-case constants

enum class SteklovSelector { Hypotenuse, OneLeg, TwoLegs };

enum class BoundaryKind { Dirichlet, Neumann };

struct EigenKind {
  enum class Type { Dirichlet, Neumann, Steklov, Robin };
  Type type = Type::Dirichlet;
  SteklovSelector selector = SteklovSelector::Hypotenuse;  // Steklov only

  static EigenKind dirichlet() { return {Type::Dirichlet, {}}; }
  static EigenKind neumann() { return {Type::Neumann, {}}; }
  static EigenKind robin() { return {Type::Robin, {}}; }
  static EigenKind steklov(SteklovSelector s) { return {Type::Steklov, s}; }
};

/// First Dirichlet eigenvalue, or first positive Neumann eigenvalue, of the
/// Laplacian. Intervals use (pi/l)^2 for both; products add Dirichlet
/// eigenvalues and take the minimum of the Neumann ones. The disk's Neumann
/// value is (j'_{1,1}/a)^2 with j'_{1,1} ~ 1.8412 the first zero of J1'; the
/// often-quoted (j_{1,1}/a)^2 ~ 14.682 is only the first radial one.
double lambda1(const CatalogDomain& domain, BoundaryKind kind);

/// Coefficient c in lambda1 = c (pi/a)^2 as printed in the classical table
/// for the three triangles (a = leg, hypotenuse or side). Differs from the
/// value lambda1 uses in exactly one cell: the 30-degree triangle's Neumann
/// entry is printed as 16/3, which is its second positive eigenvalue; the
/// first is 16/9 (the symmetric half of the equilateral triangle's first
/// Neumann pair).
double table_printed_coefficient(const CatalogDomain& triangle, BoundaryKind kind);

/// First positive eigenvalue of the mixed Steklov problem on the right
/// isosceles triangle with leg a, spectral condition on the selected sides.
double steklov_lambda1_triangle(double leg, SteklovSelector selector);

/// Smallest positive roots z1 of tan z + tanh z = 0 and z2 of tan z tanh z = 1.
double steklov_root_one_leg();
double steklov_root_two_legs();

/// lambda^{-1/2} for the eigenvalue selected by `kind`.
double sharp_constant_quadratic(const CatalogDomain& domain, EigenKind kind);

// ---------------------------------------------------------------------------
// One-dimensional and critical constants

/// Sharp constant for functions vanishing at both ends of (0, l):
///   C1(p, q) = F(1/q + 1/p') / (2 F(1/q) F(1/p')) * l^{1 + 1/q - 1/p}
/// with F(s) = Gamma(s+1)/s^s. p = 1 and q = inf go through F(0) = 1.
double schmidt_constant(double p, Exponent q, double length = 1.0);

struct OneDimPoincare {
  double value;
  bool exact;  // false: value is only a strict lower bound (q > 3p)
};

/// Zero-mean constant on (0, 1): equal to C1(p, q) when q <= 3p.
OneDimPoincare one_d_poincare_constant(double p, Exponent q);

/// Measure of the unit sphere S^k in R^{k+1}: 2 pi^{(k+1)/2} / Gamma((k+1)/2).
double unit_sphere_measure(int k);

/// Sobolev constant for q = p* in R^n, 1 <= p < n.
double sobolev_constant(int n, double p);

/// Trace-Sobolev constant on the half-space, 1 <= p < n.
double trace_sobolev_constant(int n, double p);

/// Lower bound 2^{1/n} C2(n, p) for the Sobolev-Poincare constant of a John
/// domain. Exposed for reporting only.
double sobolev_poincare_lower_bound(int n, double p);

// ---------------------------------------------------------------------------
// Bounds

struct GeometricBounds {
  double fk_lower;  // lambda1^D of the equal-area disk
  double sw_upper;  // lambda1^N of the equal-area disk
  double pw_lower;  // (pi / diameter)^2, convex domains
};

GeometricBounds geometric_bounds(const CatalogDomain& domain);

/// sqrt(2) (c1 + c2): upper bound for the Poincare constant (p = q) of a
/// product domain whose factors have constants c1 and c2.
double product_poincare_upper(double c1, double c2);

std::string to_string(SteklovSelector selector);
std::string to_string(BoundaryKind kind);

}  // namespace sharpc::catalog
