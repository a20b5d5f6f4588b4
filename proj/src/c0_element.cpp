#include "vem6/c0_element.hpp"

#include <algorithm>
#include <string>

#include "vem6/local_solve.hpp"
#include "vem6/moments.hpp"
#include "vem6/quadrature.hpp"

namespace vem6 {

namespace {

Index local_index(const std::vector<Index>& sorted_vertices, Index v) {
  auto it = std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), v);
  return static_cast<Index>(it - sorted_vertices.begin());
}

}  // namespace

C0FaceOperator c0_face_projector(const PolyMesh& mesh, Index fi) {
  const Face& face = mesh.face(fi);
  const auto m = static_cast<Eigen::Index>(face.vertices.size());
  C0FaceOperator op{fi, face_basis(face, 1), Eigen::MatrixXd()};

  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(3, 3);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(3, m);
  const Point2 origin = Point2::Zero();
  const Eigen::MatrixX2d grads = op.basis.gradients(origin);  // constant for P_1
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b) lhs(a, b) = face.area * grads.row(a).dot(grads.row(b));

  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index k1 = (k + 1) % m;
    const Point2 p0 = face.to_local(mesh.vertex(face.vertices[static_cast<std::size_t>(k)]));
    const Point2 p1 = face.to_local(mesh.vertex(face.vertices[static_cast<std::size_t>(k1)]));
    const Point2 d = p1 - p0;
    const double len = d.norm();
    const Point2 normal(d.y() / len, -d.x() / len);
    // boundary-mean row: int_e m_b and trapezoid for the linear trace of v
    lhs.row(0) += len * op.basis.values(0.5 * (p0 + p1)).transpose();
    rhs(0, k) += 0.5 * len;
    rhs(0, k1) += 0.5 * len;
    // int_f grad v . grad p = sum_e (dp/dn) int_e v  (p harmonic)
    for (int a = 1; a < 3; ++a) {
      const double dn = grads.row(a).dot(normal);
      rhs(a, k) += 0.5 * len * dn;
      rhs(a, k1) += 0.5 * len * dn;
    }
  }
  op.projector = solve_projector_system(lhs, rhs, "face " + std::to_string(fi));
  return op;
}

Eigen::MatrixXd c0_cell_projector(const PolyMesh& mesh, Index ci, std::span<const C0FaceOperator> face_ops) {
  const Cell& cell = mesh.cell(ci);
  if (face_ops.size() != cell.faces.size())
    throw std::invalid_argument("c0_cell_projector: one face operator per cell face required");
  const auto n = static_cast<Eigen::Index>(cell.vertices.size());
  const CellBasis basis = cell_basis(cell, 1);
  const Eigen::MatrixX3d grads = basis.gradients(cell.centroid);

  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(4, 4);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(4, n);
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) lhs(a, b) = cell.volume * grads.row(a).dot(grads.row(b));

  for (std::size_t k = 0; k < cell.faces.size(); ++k) {
    const CellFace& cf = cell.faces[k];
    const Face& face = mesh.face(cf.face);
    const C0FaceOperator& op = face_ops[k];
    if (op.face != cf.face) throw std::invalid_argument("c0_cell_projector: face operator order mismatch");
    const Eigen::RowVectorXd mean = op.mean_functional(face.area);
    // P_1 monomials are linear, so their face integral is |f| m(x_f).
    lhs.row(0) += face.area * basis.values(face.centroid).transpose();
    for (std::size_t j = 0; j < face.vertices.size(); ++j) {
      const Index loc = local_index(cell.vertices, face.vertices[j]);
      rhs(0, loc) += mean[static_cast<Eigen::Index>(j)];
      for (int a = 1; a < 4; ++a)
        rhs(a, loc) += cf.sign * grads.row(a).dot(face.normal) * mean[static_cast<Eigen::Index>(j)];
    }
  }
  return solve_projector_system(lhs, rhs, "cell " + std::to_string(ci));
}

C0LocalElement c0_local_element(const PolyMesh& mesh, Index ci) {
  const Cell& cell = mesh.cell(ci);
  std::vector<C0FaceOperator> face_ops;
  face_ops.reserve(cell.faces.size());
  for (const CellFace& cf : cell.faces) face_ops.push_back(c0_face_projector(mesh, cf.face));

  C0LocalElement el;
  el.cell = ci;
  el.vertices = cell.vertices;
  el.basis = cell_basis(cell, 1);
  el.projector = c0_cell_projector(mesh, ci, face_ops);

  const auto n = el.size();
  const Eigen::MatrixX3d grads = el.basis.gradients(cell.centroid);
  el.gram = Eigen::MatrixXd::Zero(4, 4);
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) el.gram(a, b) = cell.volume * grads.row(a).dot(grads.row(b));
  el.dof_eval.resize(n, 4);
  for (Index i = 0; i < n; ++i) el.dof_eval.row(i) = el.basis.values(mesh.vertex(el.vertices[static_cast<std::size_t>(i)])).transpose();

  el.stabilization = cell.diameter;
  const Eigen::MatrixXd residual = Eigen::MatrixXd::Identity(n, n) - el.dof_eval * el.projector;
  el.stiffness = el.projector.transpose() * el.gram * el.projector +
                 el.stabilization * residual.transpose() * residual;
  el.stiffness = 0.5 * (el.stiffness + el.stiffness.transpose()).eval();
  return el;
}

Eigen::VectorXd c0_local_load(const PolyMesh& mesh, const C0LocalElement& el, const ScalarField& f, int order) {
  const QuadRule rule = quadrature_cell(mesh, el.cell, order);
  Eigen::Vector4d moments = Eigen::Vector4d::Zero();
  for (std::size_t q = 0; q < rule.points.size(); ++q)
    moments += rule.weights[q] * f(rule.points[q]) * el.basis.values(rule.points[q]);
  return -(el.projector.transpose() * moments);
}

Eigen::VectorXd c0_interpolate(const PolyMesh& mesh, const C0LocalElement& el, const ScalarField& f) {
  Eigen::VectorXd v(el.size());
  for (Index i = 0; i < el.size(); ++i) v[i] = f(mesh.vertex(el.vertices[static_cast<std::size_t>(i)]));
  return v;
}

}  // namespace vem6
