// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "sharpc/error.hpp"
#include "sharpc/mesh.hpp"

using namespace sharpc;
using namespace sharpc::fem;
using catalog::CatalogDomain;
using doctest::Approx;

namespace {
std::size_t count_tag(const Mesh& m, BoundaryTag tag) {
  std::size_t c = 0;
  for (const auto& e : m.boundary_edges) c += e.tag == tag;
  return c;
}
}  // namespace

TEST_CASE("structured square mesh") {
  const Mesh m = build_mesh(CatalogDomain::square(1), 0.5);
  CHECK(m.vertices.size() == 9);
  CHECK(m.triangles.size() == 8);
  CHECK(m.boundary_edges.size() == 8);
  CHECK(m.area() == Approx(1.0).epsilon(1e-15));
  CHECK(m.tags() == TagSet{BoundaryTag::Bottom, BoundaryTag::Right, BoundaryTag::Top, BoundaryTag::Left});
  CHECK(check_invariants(m).empty());
}

TEST_CASE("triangle meshes are uniform subdivisions") {
  const Mesh iso = build_mesh(CatalogDomain::right_iso_triangle(1), 0.5);
  CHECK(iso.triangles.size() == 4);
  CHECK(iso.area() == Approx(0.5).epsilon(1e-15));
  CHECK(count_tag(iso, BoundaryTag::Hypotenuse) == 2);
  CHECK(count_tag(iso, BoundaryTag::Leg1) == 2);
  CHECK(count_tag(iso, BoundaryTag::Leg2) == 2);
  for (const auto& d : {CatalogDomain::right30_triangle(1), CatalogDomain::equilateral_triangle(1)}) {
    const Mesh m = build_mesh(d, 0.1);
    CHECK(m.area() == Approx(d.measure()).epsilon(1e-13));
    CHECK(check_invariants(m).empty());
    CHECK(m.max_edge_length() <= kMaxEdgeFactor * 0.1);
  }
  const Mesh eq = build_mesh(CatalogDomain::equilateral_triangle(1), 0.25);
  CHECK(eq.tags() == TagSet{BoundaryTag::Side1, BoundaryTag::Side2, BoundaryTag::Side3});
  CHECK(count_tag(eq, BoundaryTag::Side2) == 4);
}

TEST_CASE("disk mesh is an inscribed polygon") {
  const Mesh m = build_mesh(CatalogDomain::disk(1), 0.1);
  CHECK(m.boundary_edges.size() == 63);
  CHECK(m.tags() == TagSet{BoundaryTag::Rim});
  for (std::size_t t = 0; t < m.triangles.size(); ++t) CHECK(signed_area(m, t) > 0);
  CHECK(check_invariants(m).empty());
  // An inscribed 63-gon misses a little area.
  CHECK(m.area() < std::numbers::pi);
  CHECK(m.area() > 0.99 * std::numbers::pi);
}

TEST_CASE("refinement quadruples triangles and preserves area and tags") {
  const Mesh m = build_mesh(CatalogDomain::square(1), 0.5);
  const Mesh r = refine(m);
  CHECK(r.triangles.size() == 32);
  CHECK(r.vertices.size() == 25);
  CHECK(r.boundary_edges.size() == 16);
  CHECK(r.h == Approx(0.25));
  CHECK(r.area() == Approx(m.area()).epsilon(1e-15));
  CHECK(r.tags() == m.tags());
  CHECK(check_invariants(r).empty());
  const Mesh t = refine(build_mesh(CatalogDomain::right_iso_triangle(1), 0.5));
  CHECK(count_tag(t, BoundaryTag::Hypotenuse) == 4);
}

TEST_CASE("invariant checks catch broken meshes") {
  Mesh m = build_mesh(CatalogDomain::square(1), 0.5);
  std::swap(m.triangles[0][1], m.triangles[0][2]);
  CHECK_FALSE(check_invariants(m).empty());
  CHECK_THROWS_AS(validate(m), MeshError);

  Mesh open = build_mesh(CatalogDomain::square(1), 0.5);
  open.boundary_edges.pop_back();
  CHECK_FALSE(check_invariants(open).empty());
}

TEST_CASE("mesh size must fit the domain") {
  CHECK_THROWS_AS(build_mesh(CatalogDomain::square(1), 2.0), MeshError);
  CHECK_THROWS_AS(build_mesh(CatalogDomain::disk(0.5), 0.6), MeshError);
  CHECK_THROWS(build_mesh(CatalogDomain::interval(1), 0.1));
}

TEST_CASE("OFF output") {
  const Mesh m = build_mesh(CatalogDomain::right_iso_triangle(1), 0.5);
  std::ostringstream os;
  write_off(m, os);
  std::istringstream in(os.str());
  std::string magic;
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> magic >> nv >> nf >> ne;
  CHECK(magic == "OFF");
  CHECK(nv == m.vertices.size());
  CHECK(nf == 4);
}

TEST_CASE("tag names round-trip") {
  for (auto t : {BoundaryTag::Hypotenuse, BoundaryTag::Leg1, BoundaryTag::Rim, BoundaryTag::Side3})
    CHECK(parse_tag(to_string(t)) == t);
  CHECK_THROWS_AS(parse_tag("nowhere"), DomainError);
}
