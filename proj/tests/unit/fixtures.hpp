#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "vem6/mesh.hpp"

namespace fixtures {

using vem6::CellFace;
using vem6::Index;
using vem6::Point3;
using vem6::PolyMesh;
using vem6::Vector3;

// Orders each face (given as an unordered vertex set) counter-clockwise about
// its outward normal. Only valid for convex cells.
inline std::vector<PolyMesh::FaceLoop> orient_convex(const std::vector<Point3>& v,
                                                     std::vector<std::vector<Index>> faces) {
  Point3 inside = Point3::Zero();
  for (const auto& p : v) inside += p;
  inside /= static_cast<double>(v.size());
  for (auto& f : faces) {
    Point3 c = Point3::Zero();
    for (Index i : f) c += v[static_cast<std::size_t>(i)];
    c /= static_cast<double>(f.size());
    Vector3 n = (v[f[1]] - v[f[0]]).cross(v[f[2]] - v[f[0]]).normalized();
    if (n.dot(c - inside) < 0) n = -n;
    const Vector3 e1 = (v[f[0]] - c).normalized();
    const Vector3 e2 = n.cross(e1);
    std::sort(f.begin(), f.end(), [&](Index a, Index b) {
      const Vector3 da = v[a] - c, db = v[b] - c;
      return std::atan2(da.dot(e2), da.dot(e1)) < std::atan2(db.dot(e2), db.dot(e1));
    });
  }
  return faces;
}

inline PolyMesh convex_cell(const std::vector<Point3>& v, const std::vector<std::vector<Index>>& faces) {
  auto loops = orient_convex(v, faces);
  PolyMesh::CellFaces cell;
  for (std::size_t i = 0; i < loops.size(); ++i) cell.push_back({static_cast<Index>(i), 1});
  return PolyMesh::build(v, loops, {cell});
}

// Tetrahedron with vertices 0, e1, e2, e3.
inline PolyMesh unit_tet() {
  return convex_cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline PolyMesh regular_tet() {
  return convex_cell({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline PolyMesh triangular_prism() {
  return convex_cell({{0, 0, 0}, {1, 0, 0}, {0.3, 0.8, 0}, {0, 0, 0.7}, {1, 0, 0.7}, {0.3, 0.8, 0.7}},
                     {{0, 1, 2}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}});
}

// Unit cube with the corner (1,1,1) cut off: three pentagons, a triangle and
// three squares.
inline PolyMesh cut_cube() {
  return convex_cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                      {1, 1, 0.5}, {1, 0.5, 1}, {0.5, 1, 1}},
                     {{0, 1, 2, 3},          // z = 0
                      {0, 1, 4, 5},          // y = 0
                      {0, 2, 4, 6},          // x = 0
                      {1, 3, 5, 7, 8},       // x = 1
                      {2, 3, 6, 7, 9},       // y = 1
                      {4, 5, 6, 8, 9},       // z = 1
                      {7, 8, 9}});
}

// Irregular convex hexahedron-like cell (skewed prism with a quadrilateral base).
inline PolyMesh skewed_prism() {
  return convex_cell({{0, 0, 0}, {1.2, 0, 0}, {1.0, 0.9, 0}, {-0.1, 0.7, 0},
                      {0.2, 0.1, 0.8}, {1.4, 0.1, 0.8}, {1.2, 1.0, 0.8}, {0.1, 0.8, 0.8}},
                     {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

// Non-convex L-shaped prism: L = [0,4]x[0,1] u [0,1]x[1,4], z in [0,1].
// Its centroid (19/14, 19/14, 1/2) lies beyond both inner face planes.
inline PolyMesh l_prism() {
  std::vector<Point3> v;
  const double xy[6][2] = {{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 4}, {0, 4}};
  for (double z : {0.0, 1.0})
    for (auto& p : xy) v.emplace_back(p[0], p[1], z);
  std::vector<PolyMesh::FaceLoop> faces;
  faces.push_back({5, 4, 3, 2, 1, 0});  // bottom, normal -z
  faces.push_back({6, 7, 8, 9, 10, 11});  // top, normal +z
  for (Index i = 0; i < 6; ++i) {
    const Index j = (i + 1) % 6;
    faces.push_back({i, j, j + 6, i + 6});  // side, outward for a CCW base
  }
  PolyMesh::CellFaces cell;
  for (Index f = 0; f < 8; ++f) cell.push_back({f, 1});
  return PolyMesh::build(v, faces, {cell});
}

// A unit cube and, disjoint from it, the tetrahedron 0, e1, e2, e3 shifted by (2,0,0).
inline PolyMesh cube_and_tet() {
  std::vector<Point3> v;
  for (int k = 0; k < 8; ++k) v.emplace_back(k & 1, (k >> 1) & 1, (k >> 2) & 1);
  v.emplace_back(2, 0, 0);
  v.emplace_back(3, 0, 0);
  v.emplace_back(2, 1, 0);
  v.emplace_back(2, 0, 1);
  std::vector<std::vector<Index>> cube = {{0, 4, 6, 2}, {1, 3, 7, 5}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 2, 3, 1}, {4, 5, 7, 6}};
  std::vector<PolyMesh::FaceLoop> faces(cube.begin(), cube.end());
  std::vector<Point3> tv(v.begin() + 8, v.end());
  auto tet = orient_convex(tv, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  for (auto& f : tet) {
    for (Index& i : f) i += 8;
    faces.push_back(f);
  }
  PolyMesh::CellFaces c0, c1;
  for (Index f = 0; f < 6; ++f) c0.push_back({f, 1});
  for (Index f = 6; f < 10; ++f) c1.push_back({f, 1});
  return PolyMesh::build(v, faces, {c0, c1});
}

// Convex single-cell fixtures used by the element property tests.
inline std::vector<PolyMesh> element_fixtures() {
  std::vector<PolyMesh> out;
  out.push_back(vem6::generate_cube_mesh(1));
  out.push_back(unit_tet());
  out.push_back(triangular_prism());
  out.push_back(cut_cube());
  out.push_back(skewed_prism());
  return out;
}

// Full-mesh fixtures for global tests.
inline std::vector<PolyMesh> mesh_fixtures() {
  std::vector<PolyMesh> out;
  out.push_back(vem6::generate_cube_mesh(2));
  out.push_back(vem6::generate_tet_mesh(1));
  out.push_back(vem6::generate_tet_mesh(2));
  return out;
}

inline Eigen::VectorXd random_vector(Eigen::Index n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(gen);
  return v;
}

}  // namespace fixtures
