// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "sharpc/catalog.hpp"

namespace sharpc::fem {

/// Label of a geometric boundary feature. Right triangles use Leg1 (on the
/// x-axis), Leg2 (on the y-axis) and Hypotenuse; the equilateral triangle
/// uses Side1..Side3 counterclockwise from the base.
enum class BoundaryTag : std::uint8_t {
  Bottom,
  Right,
  Top,
  Left,
  Leg1,
  Leg2,
  Hypotenuse,
  Side1,
  Side2,
  Side3,
  Rim,
};

using TagSet = std::set<BoundaryTag>;

std::string to_string(BoundaryTag tag);
/// Throws DomainError on an unknown name.
BoundaryTag parse_tag(const std::string& name);

struct Point {
  double x;
  double y;
};

struct BoundaryEdge {
  std::array<std::int32_t, 2> v;  // oriented with the domain on the left
  BoundaryTag tag;
};

/// Conforming triangulation with counterclockwise triangles and tagged,
/// consistently oriented boundary edges.
struct Mesh {
  std::vector<Point> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
  std::vector<BoundaryEdge> boundary_edges;
  double h = 0.0;  // nominal mesh size the mesh was built or refined for

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertices.size()); }
  double area() const;
  double max_edge_length() const;
  TagSet tags() const;
  /// Vertices touched by a boundary edge whose tag is in `tags`.
  std::vector<bool> boundary_vertex_mask(const TagSet& tags) const;
};

/// Signed area of triangle t (positive for counterclockwise order).
double signed_area(const Mesh& mesh, std::size_t t);

/// Every max edge length produced by build_mesh is at most this times h.
inline constexpr double kMaxEdgeFactor = 2.0;

/// Builds a mesh of a planar catalog shape.
///  - rectangles: structured ceil(a/h) x ceil(b/h) grid, each cell split
///    along the same diagonal;
///  - triangles: uniform subdivision into N^2 similar triangles with
///    N = ceil(size/h), size being the leg, hypotenuse or side parameter;
///  - disk: concentric rings r_k = a k / K, K = round(a/h), ring k carrying
///    round(2 pi k) vertices, i.e. an inscribed polygon with ~2 pi a / h
///    rim edges.
/// Product(Interval, Interval) is meshed as the equivalent rectangle.
/// Throws MeshError when h exceeds the shortest side (radius for the disk).
Mesh build_mesh(const catalog::CatalogDomain& domain, double h);

/// Uniform midpoint refinement: every triangle split into four, h halved,
/// boundary tags inherited. New vertices lie on the straight edges.
Mesh refine(const Mesh& mesh);

/// Checks the structural invariants (positive areas, edge conformity,
/// closed boundary loops, one tag per boundary edge, boundary edges matching
/// exactly the edges used by one triangle). Returns the list of violations.
std::vector<std::string> check_invariants(const Mesh& mesh);

/// Throws MeshError with the first violation, if any.
void validate(const Mesh& mesh);

/// Geomview OFF text: "OFF", counts, vertices with z = 0, triangle faces.
void write_off(const Mesh& mesh, std::ostream& out);

}  // namespace sharpc::fem
