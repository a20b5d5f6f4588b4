#pragma once

#include <vector>

#include "vem6/mesh.hpp"

namespace vem6 {

/// Quadrature rule in physical coordinates.
struct QuadRule {
  std::vector<Point3> points;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t q = 0; q < points.size(); ++q) s += weights[q] * f(points[q]);
    return s;
  }
};

inline constexpr int kMaxQuadOrder = 10;

/// Rule exact to `order` on a cell, built on the subdivision
/// centroid -> face centroid -> edge with collapsed Gauss-Jacobi simplex
/// rules. Throws GeometryError naming the cell if a sub-tetrahedron is
/// inverted (cell not star-shaped about its centroid).
QuadRule quadrature_cell(const PolyMesh& mesh, Index cell, int order);

/// Rule exact to `order` on a face (fan from the face centroid).
QuadRule quadrature_face(const PolyMesh& mesh, Index face, int order);

}  // namespace vem6
