// SPDX-License-Identifier: Apache-2.0
#include "sharpc/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "sharpc/error.hpp"

namespace sharpc::fem {

namespace {

using catalog::CatalogDomain;

std::uint64_t edge_key(std::int32_t a, std::int32_t b) {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (hi << 32) | lo;
}

struct Segment {
  BoundaryTag tag;
  Point a;
  Point b;
};

double distance_to_line(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return std::abs(dx * (p.y - a.y) - dy * (p.x - a.x)) / std::hypot(dx, dy);
}

// Boundary edges are the triangle edges used exactly once, in the
// orientation the triangle gives them (domain on the left).
std::vector<std::array<std::int32_t, 2>> extract_boundary(const Mesh& mesh) {
  std::unordered_map<std::uint64_t, int> count;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) ++count[edge_key(t[k], t[(k + 1) % 3])];
  std::vector<std::array<std::int32_t, 2>> edges;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k)
      if (count[edge_key(t[k], t[(k + 1) % 3])] == 1) edges.push_back({t[k], t[(k + 1) % 3]});
  return edges;
}

void tag_boundary(Mesh& mesh, const std::vector<Segment>& segments, double scale) {
  const double tol = 1e-12 * scale;
  for (const auto& e : extract_boundary(mesh)) {
    const Point p = mesh.vertices[e[0]];
    const Point q = mesh.vertices[e[1]];
    bool tagged = false;
    for (const auto& s : segments) {
      if (distance_to_line(p, s.a, s.b) <= tol && distance_to_line(q, s.a, s.b) <= tol) {
        mesh.boundary_edges.push_back({e, s.tag});
        tagged = true;
        break;
      }
    }
    if (!tagged) throw MeshError("boundary edge does not lie on any geometric feature");
  }
}

Mesh rectangle_mesh(double a, double b, double h) {
  if (h > std::min(a, b)) throw MeshError("mesh size h exceeds the shortest rectangle side");
  const int nx = static_cast<int>(std::ceil(a / h - 1e-9));
  const int ny = static_cast<int>(std::ceil(b / h - 1e-9));
  Mesh m;
  m.h = h;
  auto id = [nx](int i, int j) { return static_cast<std::int32_t>(j * (nx + 1) + i); };
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) m.vertices.push_back({a * i / nx, b * j / ny});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      m.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      m.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  tag_boundary(m,
               {{BoundaryTag::Bottom, {0, 0}, {a, 0}},
                {BoundaryTag::Right, {a, 0}, {a, b}},
                {BoundaryTag::Top, {a, b}, {0, b}},
                {BoundaryTag::Left, {0, b}, {0, 0}}},
               std::max(a, b));
  return m;
}

// Uniform subdivision of the counterclockwise triangle (p0, p1, p2).
Mesh lattice_triangle(Point p0, Point p1, Point p2, int n, double h, const std::vector<Segment>& segments,
                      double scale) {
  Mesh m;
  m.h = h;
  std::vector<std::int32_t> index((n + 1) * (n + 1), -1);
  auto id = [&](int i, int j) { return index[i * (n + 1) + j]; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) {
      index[i * (n + 1) + j] = static_cast<std::int32_t>(m.vertices.size());
      const double s = static_cast<double>(i) / n;
      const double t = static_cast<double>(j) / n;
      m.vertices.push_back({p0.x + (p1.x - p0.x) * s + (p2.x - p0.x) * t, p0.y + (p1.y - p0.y) * s + (p2.y - p0.y) * t});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - i; ++j) {
      m.triangles.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      if (j < n - i - 1) m.triangles.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  tag_boundary(m, segments, scale);
  return m;
}

Mesh disk_mesh(double radius, double h) {
  if (h > radius) throw MeshError("mesh size h exceeds the disk radius");
  const int rings = std::max(1, static_cast<int>(std::lround(radius / h)));
  Mesh m;
  m.h = h;
  m.vertices.push_back({0.0, 0.0});
  std::vector<std::int32_t> first(rings + 1, 0);
  std::vector<int> count(rings + 1, 1);
  for (int k = 1; k <= rings; ++k) {
    first[k] = static_cast<std::int32_t>(m.vertices.size());
    count[k] = static_cast<int>(std::lround(2.0 * std::numbers::pi * k));
    const double r = radius * k / rings;
    for (int j = 0; j < count[k]; ++j) {
      const double th = 2.0 * std::numbers::pi * j / count[k];
      m.vertices.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  // Center fan.
  for (int j = 0; j < count[1]; ++j)
    m.triangles.push_back({0, first[1] + j, first[1] + (j + 1) % count[1]});
  // Stitch consecutive rings by merging their vertices in angular order.
  for (int k = 2; k <= rings; ++k) {
    const int mi = count[k - 1];
    const int mo = count[k];
    auto in = [&](int i) { return first[k - 1] + i % mi; };
    auto out = [&](int j) { return first[k] + j % mo; };
    int i = 0;
    int j = 0;
    while (i < mi || j < mo) {
      const double next_in = static_cast<double>(i + 1) / mi;
      const double next_out = static_cast<double>(j + 1) / mo;
      if (i == mi || (j < mo && next_out <= next_in)) {
        m.triangles.push_back({in(i), out(j), out(j + 1)});
        ++j;
      } else {
        m.triangles.push_back({in(i), out(j), in(i + 1)});
        ++i;
      }
    }
  }
  for (const auto& e : extract_boundary(m)) m.boundary_edges.push_back({e, BoundaryTag::Rim});
  return m;
}

}  // namespace

std::string to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Bottom:
      return "bottom";
    case BoundaryTag::Right:
      return "right";
    case BoundaryTag::Top:
      return "top";
    case BoundaryTag::Left:
      return "left";
    case BoundaryTag::Leg1:
      return "leg1";
    case BoundaryTag::Leg2:
      return "leg2";
    case BoundaryTag::Hypotenuse:
      return "hypotenuse";
    case BoundaryTag::Side1:
      return "side1";
    case BoundaryTag::Side2:
      return "side2";
    case BoundaryTag::Side3:
      return "side3";
    case BoundaryTag::Rim:
      return "rim";
  }
  return "?";
}

BoundaryTag parse_tag(const std::string& name) {
  static const std::map<std::string, BoundaryTag> names = {
      {"bottom", BoundaryTag::Bottom}, {"right", BoundaryTag::Right},
      {"top", BoundaryTag::Top},       {"left", BoundaryTag::Left},
      {"leg1", BoundaryTag::Leg1},     {"leg2", BoundaryTag::Leg2},
      {"hypotenuse", BoundaryTag::Hypotenuse}, {"side1", BoundaryTag::Side1},
      {"side2", BoundaryTag::Side2},   {"side3", BoundaryTag::Side3},
      {"rim", BoundaryTag::Rim}};
  const auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown boundary tag: " + name);
  return it->second;
}

double signed_area(const Mesh& mesh, std::size_t t) {
  const auto& tri = mesh.triangles[t];
  const Point a = mesh.vertices[tri[0]];
  const Point b = mesh.vertices[tri[1]];
  const Point c = mesh.vertices[tri[2]];
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double Mesh::area() const {
  double s = 0.0;
  for (std::size_t t = 0; t < triangles.size(); ++t) s += signed_area(*this, t);
  return s;
}

double Mesh::max_edge_length() const {
  double m = 0.0;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) {
      const Point a = vertices[t[k]];
      const Point b = vertices[t[(k + 1) % 3]];
      m = std::max(m, std::hypot(b.x - a.x, b.y - a.y));
    }
  return m;
}

TagSet Mesh::tags() const {
  TagSet s;
  for (const auto& e : boundary_edges) s.insert(e.tag);
  return s;
}

std::vector<bool> Mesh::boundary_vertex_mask(const TagSet& selected) const {
  std::vector<bool> mask(vertices.size(), false);
  for (const auto& e : boundary_edges)
    if (selected.contains(e.tag)) mask[e.v[0]] = mask[e.v[1]] = true;
  return mask;
}

Mesh build_mesh(const CatalogDomain& domain, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw MeshError("mesh size h must be positive");
  using namespace catalog;
  const double s3 = std::sqrt(3.0);
  const auto& shape = domain.shape();
  if (const auto* r = std::get_if<Rectangle>(&shape)) return rectangle_mesh(r->a, r->b, h);
  if (const auto* t = std::get_if<RightIsoTriangle>(&shape)) {
    const double l = t->leg;
    if (h > l) throw MeshError("mesh size h exceeds the triangle leg");
    const int n = static_cast<int>(std::ceil(l / h - 1e-9));
    return lattice_triangle({0, 0}, {l, 0}, {0, l}, n, h,
                            {{BoundaryTag::Leg1, {0, 0}, {l, 0}},
                             {BoundaryTag::Hypotenuse, {l, 0}, {0, l}},
                             {BoundaryTag::Leg2, {0, l}, {0, 0}}},
                            l);
  }
  if (const auto* t = std::get_if<Right30Triangle>(&shape)) {
    const double a = t->hypotenuse;
    if (h > 0.5 * a) throw MeshError("mesh size h exceeds the short leg");
    const int n = static_cast<int>(std::ceil(a / h - 1e-9));
    const Point p1{0.5 * s3 * a, 0.0};
    const Point p2{0.0, 0.5 * a};
    return lattice_triangle({0, 0}, p1, p2, n, h,
                            {{BoundaryTag::Leg1, {0, 0}, p1},
                             {BoundaryTag::Hypotenuse, p1, p2},
                             {BoundaryTag::Leg2, p2, {0, 0}}},
                            a);
  }
  if (const auto* t = std::get_if<EquilateralTriangle>(&shape)) {
    const double a = t->side;
    if (h > a) throw MeshError("mesh size h exceeds the triangle side");
    const int n = static_cast<int>(std::ceil(a / h - 1e-9));
    const Point p1{a, 0.0};
    const Point p2{0.5 * a, 0.5 * s3 * a};
    return lattice_triangle({0, 0}, p1, p2, n, h,
                            {{BoundaryTag::Side1, {0, 0}, p1},
                             {BoundaryTag::Side2, p1, p2},
                             {BoundaryTag::Side3, p2, {0, 0}}},
                            a);
  }
  if (const auto* d = std::get_if<Disk>(&shape)) return disk_mesh(d->radius, h);
  if (const auto* p = std::get_if<Product>(&shape)) {
    const auto* l = std::get_if<Interval>(&p->left->shape());
    const auto* r = std::get_if<Interval>(&p->right->shape());
    if (l != nullptr && r != nullptr) return rectangle_mesh(l->length, r->length, h);
  }
  throw MeshError("build_mesh: unsupported domain " + domain.name());
}

Mesh refine(const Mesh& mesh) {
  Mesh out;
  out.h = 0.5 * mesh.h;
  out.vertices = mesh.vertices;
  std::unordered_map<std::uint64_t, std::int32_t> mid;
  auto midpoint = [&](std::int32_t a, std::int32_t b) {
    const auto key = edge_key(a, b);
    if (const auto it = mid.find(key); it != mid.end()) return it->second;
    const Point pa = mesh.vertices[a];
    const Point pb = mesh.vertices[b];
    const auto id = static_cast<std::int32_t>(out.vertices.size());
    out.vertices.push_back({0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)});
    mid.emplace(key, id);
    return id;
  };
  out.triangles.reserve(4 * mesh.triangles.size());
  for (const auto& t : mesh.triangles) {
    const auto ab = midpoint(t[0], t[1]);
    const auto bc = midpoint(t[1], t[2]);
    const auto ca = midpoint(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({ab, t[1], bc});
    out.triangles.push_back({ca, bc, t[2]});
    out.triangles.push_back({ab, bc, ca});
  }
  for (const auto& e : mesh.boundary_edges) {
    const auto m = midpoint(e.v[0], e.v[1]);
    out.boundary_edges.push_back({{e.v[0], m}, e.tag});
    out.boundary_edges.push_back({{m, e.v[1]}, e.tag});
  }
  return out;
}

std::vector<std::string> check_invariants(const Mesh& mesh) {
  std::vector<std::string> issues;
  const auto nv = mesh.vertex_count();
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    for (auto v : mesh.triangles[t])
      if (v < 0 || v >= nv) {
        issues.push_back("triangle " + std::to_string(t) + " has an out-of-range vertex");
        return issues;
      }
    if (!(signed_area(mesh, t) > 0.0)) issues.push_back("triangle " + std::to_string(t) + " has non-positive area");
  }
  // Directed edge usage: interior edges appear once per direction.
  std::unordered_map<std::uint64_t, int> undirected;
  std::map<std::pair<std::int32_t, std::int32_t>, int> directed;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      ++undirected[edge_key(t[k], t[(k + 1) % 3])];
      ++directed[{t[k], t[(k + 1) % 3]}];
    }
  std::size_t once = 0;
  for (const auto& [key, c] : undirected) {
    if (c > 2) issues.push_back("an edge is shared by more than two triangles");
    if (c == 1) ++once;
  }
  for (const auto& [e, c] : directed)
    if (c > 1) issues.push_back("inconsistent triangle orientation across an edge");

  std::map<std::pair<std::int32_t, std::int32_t>, int> bset;
  std::vector<int> out_deg(nv, 0);
  std::vector<int> in_deg(nv, 0);
  for (const auto& e : mesh.boundary_edges) {
    if (e.v[0] < 0 || e.v[0] >= nv || e.v[1] < 0 || e.v[1] >= nv) {
      issues.push_back("boundary edge has an out-of-range vertex");
      return issues;
    }
    if (++bset[{e.v[0], e.v[1]}] > 1) issues.push_back("boundary edge listed twice");
    if (undirected[edge_key(e.v[0], e.v[1])] != 1) issues.push_back("boundary edge is not a single-triangle edge");
    if (!directed.contains({e.v[0], e.v[1]})) issues.push_back("boundary edge orientation does not match its triangle");
    ++out_deg[e.v[0]];
    ++in_deg[e.v[1]];
  }
  if (mesh.boundary_edges.size() != once) issues.push_back("boundary edge list does not cover the mesh boundary");
  for (std::int32_t v = 0; v < nv; ++v)
    if (out_deg[v] != in_deg[v]) {
      issues.push_back("boundary edges do not form closed loops");
      break;
    }
  return issues;
}

void validate(const Mesh& mesh) {
  const auto issues = check_invariants(mesh);
  if (!issues.empty()) throw MeshError(issues.front());
}

void write_off(const Mesh& mesh, std::ostream& out) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  out << std::setprecision(17);
  for (const auto& p : mesh.vertices) out << p.x << ' ' << p.y << " 0\n";
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace sharpc::fem
