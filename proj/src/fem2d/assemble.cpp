// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "sharpc/error.hpp"
#include "sharpc/fem.hpp"

namespace sharpc::fem {

Local3 local_stiffness(Point a, Point b, Point c) {
  const std::array<Point, 3> p{a, b, c};
  std::array<Point, 3> e{};
  for (int i = 0; i < 3; ++i) {
    const Point& from = p[(i + 1) % 3];
    const Point& to = p[(i + 2) % 3];
    e[i] = {to.x - from.x, to.y - from.y};
  }
  const double area = 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
  if (!(area > 0.0)) throw MeshError("local_stiffness: triangle is degenerate or clockwise");
  Local3 k{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k[i][j] = (e[i].x * e[j].x + e[i].y * e[j].y) / (4.0 * area);
  return k;
}

Local3 local_mass(double area) {
  Local3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = area / 12.0 * (i == j ? 2.0 : 1.0);
  return m;
}

Local2 local_boundary_mass(double length) {
  return {{{length / 3.0, length / 6.0}, {length / 6.0, length / 3.0}}};
}

AssembledForms assemble(const Mesh& mesh, const TagSet& g) {
  const TagSet present = mesh.tags();
  for (const auto tag : g)
    if (!present.contains(tag)) throw DomainError("assemble: mesh has no boundary tagged '" + to_string(tag) + "'");

  const auto n = mesh.vertex_count();
  SymmetricBuilder k(n);
  SymmetricBuilder m(n);
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    const auto kl = local_stiffness(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]);
    const auto ml = local_mass(signed_area(mesh, t));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        k.add(tri[i], tri[j], kl[i][j]);
        m.add(tri[i], tri[j], ml[i][j]);
      }
  }
  SymmetricBuilder b(n);
  for (const auto& e : mesh.boundary_edges) {
    if (!g.contains(e.tag)) continue;
    const Point p = mesh.vertices[e.v[0]];
    const Point q = mesh.vertices[e.v[1]];
    const auto bl = local_boundary_mass(std::hypot(q.x - p.x, q.y - p.y));
    b.add(e.v[0], e.v[0], bl[0][0]);
    b.add(e.v[0], e.v[1], bl[0][1]);
    b.add(e.v[1], e.v[1], bl[1][1]);
  }
  return {std::move(k).build(), std::move(m).build(), std::move(b).build(), g};
}

}  // namespace sharpc::fem
