#pragma once

// Independent reference computations for the element tests. They work in
// unscaled face/cell coordinates and use plain dense solves.

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "vem6/gauss.hpp"
#include "vem6/mesh.hpp"
#include "vem6/quadrature.hpp"

namespace oracles {

using vem6::Face;
using vem6::Index;
using vem6::Point2;
using vem6::Point3;
using vem6::PolyMesh;
using vem6::Vector3;

struct FaceEdge {
  Point2 a, b;
  double length;
  Point2 normal;  // outward in the face plane
};

inline std::vector<FaceEdge> face_edges(const PolyMesh& mesh, const Face& f) {
  std::vector<FaceEdge> out;
  const std::size_t m = f.vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point2 a = f.to_local(mesh.vertex(f.vertices[k]));
    const Point2 b = f.to_local(mesh.vertex(f.vertices[(k + 1) % m]));
    const Point2 d = b - a;
    out.push_back({a, b, d.norm(), Point2(d.y(), -d.x()) / d.norm()});
  }
  return out;
}

// H^1 projection onto span{1, xi, eta} of a function with piecewise linear
// boundary trace given by vertex values; fixed by the boundary mean.
inline Eigen::Vector3d face_p1_projection(const PolyMesh& mesh, const Face& f, const std::vector<double>& values) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  a(1, 1) = f.area;
  a(2, 2) = f.area;
  const auto edges = face_edges(mesh, f);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const FaceEdge& e = edges[k];
    const double v0 = values[k], v1 = values[(k + 1) % edges.size()];
    const double mean = 0.5 * (v0 + v1) * e.length;
    const Point2 mid = 0.5 * (e.a + e.b);
    a(0, 0) += e.length;
    a(0, 1) += e.length * mid.x();
    a(0, 2) += e.length * mid.y();
    b[0] += mean;
    b[1] += mean * e.normal.x();
    b[2] += mean * e.normal.y();
  }
  return a.fullPivLu().solve(b);
}

// H^2 projection onto span{1, xi, eta, xi^2, xi eta, eta^2} (unscaled local
// coordinates) of a function whose traces are given exactly by psi and its
// face gradient; fixed by boundary moments against P_1.
inline Eigen::VectorXd face_p2_projection(const PolyMesh& mesh, const Face& f,
                                          const std::function<double(const Point2&)>& psi,
                                          const std::function<Point2(const Point2&)>& grad) {
  auto mono = [](const Point2& x) {
    Eigen::VectorXd v(6);
    v << 1, x.x(), x.y(), x.x() * x.x(), x.x() * x.y(), x.y() * x.y();
    return v;
  };
  const Eigen::Matrix2d hess[3] = {(Eigen::Matrix2d() << 2, 0, 0, 0).finished(),
                                   (Eigen::Matrix2d() << 0, 1, 1, 0).finished(),
                                   (Eigen::Matrix2d() << 0, 0, 0, 2).finished()};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(3 + i, 3 + j) = f.area * (hess[i].array() * hess[j].array()).sum();
  const auto& rule = vem6::gauss_legendre(5);
  for (const FaceEdge& e : face_edges(mesh, f))
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Point2 x = e.a + rule.points[q] * (e.b - e.a);
      const double w = rule.weights[q] * e.length;
      const Eigen::VectorXd m = mono(x);
      for (int p = 0; p < 3; ++p) {
        a.row(p) += w * m[p] * m.transpose();
        b[p] += w * m[p] * psi(x);
      }
      for (int i = 0; i < 3; ++i) b[3 + i] += w * (hess[i] * e.normal).dot(grad(x));
    }
  return a.fullPivLu().solve(b);
}

inline double eval_p2(const Eigen::VectorXd& c, const Point2& x) {
  return c[0] + c[1] * x.x() + c[2] * x.y() + c[3] * x.x() * x.x() + c[4] * x.x() * x.y() + c[5] * x.y() * x.y();
}

// Tensor Gauss-Legendre rule on an axis-aligned box.
inline vem6::QuadRule box_rule(const Point3& lo, const Point3& hi, int n) {
  const auto& g = vem6::gauss_legendre(n);
  vem6::QuadRule r;
  const Vector3 d = hi - lo;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        r.points.emplace_back(lo.x() + d.x() * g.points[i], lo.y() + d.y() * g.points[j], lo.z() + d.z() * g.points[k]);
        r.weights.push_back(d.prod() * g.weights[i] * g.weights[j] * g.weights[k]);
      }
  return r;
}

}  // namespace oracles
