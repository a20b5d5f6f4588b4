#include "vem6/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vem6/gauss.hpp"

namespace vem6 {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxQuadOrder) throw std::invalid_argument("quadrature order out of range");
}

void append_tet(QuadRule& rule, const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                double volume, int order) {
  const int n = order / 2 + 2;  // one more point than exactness needs
  const auto& r1 = gauss_jacobi(n, 2);
  const auto& r2 = gauss_jacobi(n, 1);
  const auto& r3 = gauss_legendre(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double s1 = r1.points[i], s2 = r2.points[j], s3 = r3.points[k];
        const double l1 = s1, l2 = s2 * (1 - s1), l3 = s3 * (1 - s1) * (1 - s2);
        rule.points.push_back(a + l1 * (b - a) + l2 * (c - a) + l3 * (d - a));
        rule.weights.push_back(6.0 * volume * r1.weights[i] * r2.weights[j] * r3.weights[k]);
      }
}

void append_triangle(QuadRule& rule, const Point3& a, const Point3& b, const Point3& c, double area,
                     int order) {
  const int n = order / 2 + 2;  // one more point than exactness needs
  const auto& r1 = gauss_jacobi(n, 1);
  const auto& r2 = gauss_legendre(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double s1 = r1.points[i], s2 = r2.points[j];
      rule.points.push_back(a + s1 * (b - a) + s2 * (1 - s1) * (c - a));
      rule.weights.push_back(2.0 * area * r1.weights[i] * r2.weights[j]);
    }
}

}  // namespace

QuadRule quadrature_cell(const PolyMesh& mesh, Index ci, int order) {
  check_order(order);
  const Cell& cell = mesh.cell(ci);
  const Point3& xp = cell.centroid;
  const double tol = 1e-13 * std::pow(cell.diameter, 3);
  QuadRule rule;
  for (const CellFace& cf : cell.faces) {
    const Face& face = mesh.face(cf.face);
    const std::size_t m = face.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      Point3 v0 = mesh.vertex(face.vertices[i]);
      Point3 v1 = mesh.vertex(face.vertices[(i + 1) % m]);
      if (cf.sign < 0) std::swap(v0, v1);
      const double vol = (face.centroid - xp).dot((v0 - xp).cross(v1 - xp)) / 6.0;
      if (vol < -tol)
        throw GeometryError("cell " + std::to_string(ci) + ": inverted sub-tetrahedron in quadrature subdivision");
      if (vol <= tol) continue;
      append_tet(rule, xp, face.centroid, v0, v1, vol, order);
    }
  }
  return rule;
}

QuadRule quadrature_face(const PolyMesh& mesh, Index fi, int order) {
  check_order(order);
  const Face& face = mesh.face(fi);
  const double tol = 1e-13 * face.diameter * face.diameter;
  QuadRule rule;
  const std::size_t m = face.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point3& v0 = mesh.vertex(face.vertices[i]);
    const Point3& v1 = mesh.vertex(face.vertices[(i + 1) % m]);
    const double area = 0.5 * (v0 - face.centroid).cross(v1 - face.centroid).dot(face.normal);
    if (area < -tol)
      throw GeometryError("face " + std::to_string(fi) + ": inverted triangle in quadrature subdivision");
    if (area <= tol) continue;
    append_triangle(rule, face.centroid, v0, v1, area, order);
  }
  return rule;
}

}  // namespace vem6
