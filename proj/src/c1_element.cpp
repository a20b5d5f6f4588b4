#include "vem6/c1_element.hpp"

#include <algorithm>
#include <string>

#include "vem6/gauss.hpp"
#include "vem6/local_solve.hpp"
#include "vem6/moments.hpp"
#include "vem6/quadrature.hpp"

namespace vem6 {

namespace {

// Cubic Hermite basis on [0, 1] and its derivatives.
struct Hermite {
  double h0, h1, h2, h3;
};
Hermite hermite(double t) {
  return {1 - 3 * t * t + 2 * t * t * t, t - 2 * t * t + t * t * t, 3 * t * t - 2 * t * t * t, -t * t + t * t * t};
}
Hermite hermite_dt(double t) {
  return {-6 * t + 6 * t * t, 1 - 4 * t + 3 * t * t, 6 * t - 6 * t * t, -2 * t + 3 * t * t};
}

Index local_index(const std::vector<Index>& sorted_vertices, Index v) {
  auto it = std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), v);
  return static_cast<Index>(it - sorted_vertices.begin());
}

std::vector<EdgeTrace> edge_traces(const PolyMesh& mesh, const Face& face) {
  const int m = static_cast<int>(face.vertices.size());
  std::vector<EdgeTrace> traces(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    EdgeTrace& e = traces[static_cast<std::size_t>(k)];
    e.first = k;
    e.second = (k + 1) % m;
    const Point3& a = mesh.vertex(face.vertices[static_cast<std::size_t>(e.first)]);
    const Point3& b = mesh.vertex(face.vertices[static_cast<std::size_t>(e.second)]);
    e.length = (b - a).norm();
    e.tangent = (b - a) / e.length;
    e.normal = e.tangent.cross(face.normal);
    e.start = face.to_local(a);
    e.end = face.to_local(b);
  }
  return traces;
}

// Adds the row of a face functional into a cell functional.
void scatter(Eigen::MatrixXd& cell_rows, Eigen::Index row, const Eigen::RowVectorXd& face_row,
             const std::vector<Index>& face_to_cell) {
  for (std::size_t j = 0; j < face_to_cell.size(); ++j)
    for (int c = 0; c < kC1DofsPerVertex; ++c)
      cell_rows(row, face_to_cell[j] * kC1DofsPerVertex + c) += face_row[static_cast<Eigen::Index>(j) * kC1DofsPerVertex + c];
}

double frobenius(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) { return (a.array() * b.array()).sum(); }

}  // namespace

Eigen::RowVectorXd EdgeTrace::value(double t, int m) const {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(m * kC1DofsPerVertex);
  const Hermite h = hermite(t);
  row[first * 4] = h.h0;
  row[second * 4] = h.h2;
  for (int d = 0; d < 3; ++d) {
    row[first * 4 + 1 + d] = length * h.h1 * tangent[d];
    row[second * 4 + 1 + d] = length * h.h3 * tangent[d];
  }
  return row;
}

Eigen::RowVectorXd EdgeTrace::tangential_derivative(double t, int m) const {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(m * kC1DofsPerVertex);
  const Hermite h = hermite_dt(t);
  row[first * 4] = h.h0 / length;
  row[second * 4] = h.h2 / length;
  for (int d = 0; d < 3; ++d) {
    row[first * 4 + 1 + d] = h.h1 * tangent[d];
    row[second * 4 + 1 + d] = h.h3 * tangent[d];
  }
  return row;
}

Eigen::RowVectorXd EdgeTrace::normal_derivative(double t, int m) const {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(m * kC1DofsPerVertex);
  for (int d = 0; d < 3; ++d) {
    row[first * 4 + 1 + d] = (1 - t) * normal[d];
    row[second * 4 + 1 + d] = t * normal[d];
  }
  return row;
}

C1FaceDeltaOperator c1_face_delta_projector(const PolyMesh& mesh, Index fi) {
  const Face& face = mesh.face(fi);
  const int m = static_cast<int>(face.vertices.size());
  C1FaceDeltaOperator op{fi, face_basis(face, 2), Eigen::MatrixXd(), edge_traces(mesh, face)};

  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(6, 6);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(6, m * kC1DofsPerVertex);
  for (int b = 3; b < 6; ++b)
    for (int c = 3; c < 6; ++c)
      lhs(b, c) = face.area * (op.basis.hessian(b).array() * op.basis.hessian(c).array()).sum();

  const auto& rule = gauss_legendre(3);
  for (const EdgeTrace& e : op.edges) {
    const Point2 tau = (e.end - e.start) / e.length;
    const Point2 nrm(tau.y(), -tau.x());
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double t = rule.points[q];
      const double w = rule.weights[q] * e.length;
      const Point2 x = e.start + t * (e.end - e.start);
      const Eigen::VectorXd mv = op.basis.values(x);
      const Eigen::RowVectorXd psi = e.value(t, m);
      const Eigen::RowVectorXd dtau = e.tangential_derivative(t, m);
      const Eigen::RowVectorXd dn = e.normal_derivative(t, m);
      // boundary-moment rows against P_1(f)
      for (int p = 0; p < 3; ++p) {
        lhs.row(p) += w * mv[p] * mv.transpose();
        rhs.row(p) += w * mv[p] * psi;
      }
      // int_f hess psi : H = int_{df} (H n_e) . grad psi
      for (int b = 3; b < 6; ++b) {
        const Eigen::Matrix2d H = op.basis.hessian(b);
        const Point2 hn = H * nrm;
        rhs.row(b) += w * (hn.dot(tau) * dtau + hn.dot(nrm) * dn);
      }
    }
  }
  op.projector = solve_projector_system(lhs, rhs, "face " + std::to_string(fi));
  return op;
}

C1FaceNablaOperator c1_face_nabla_projector(const PolyMesh& mesh, Index fi) {
  const Face& face = mesh.face(fi);
  const C0FaceOperator scalar = c0_face_projector(mesh, fi);
  const auto m = static_cast<Eigen::Index>(face.vertices.size());
  C1FaceNablaOperator op{fi, scalar.basis, Eigen::MatrixXd::Zero(3, m * kC1DofsPerVertex)};
  for (Eigen::Index j = 0; j < m; ++j)
    for (int d = 0; d < 3; ++d) op.projector.col(j * kC1DofsPerVertex + 1 + d) = scalar.projector.col(j) * face.normal[d];
  return op;
}

Eigen::MatrixXd c1_cell_delta_projector(const PolyMesh& mesh, Index ci, std::span<const C1FaceDeltaOperator> delta_ops,
                                        std::span<const C1FaceNablaOperator> nabla_ops) {
  const Cell& cell = mesh.cell(ci);
  if (delta_ops.size() != cell.faces.size() || nabla_ops.size() != cell.faces.size())
    throw std::invalid_argument("c1_cell_delta_projector: missing face operator");
  const auto ndof = static_cast<Eigen::Index>(cell.vertices.size()) * kC1DofsPerVertex;
  const CellBasis basis = cell_basis(cell, 2);
  const auto& ex = exponents3(2);

  std::array<Eigen::Matrix3d, 10> hess;
  for (int a = 0; a < 10; ++a) hess[static_cast<std::size_t>(a)] = basis.hessian(a);

  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(10, 10);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(10, ndof);
  for (int a = 4; a < 10; ++a)
    for (int b = 4; b < 10; ++b) lhs(a, b) = cell.volume * frobenius(hess[static_cast<std::size_t>(a)], hess[static_cast<std::size_t>(b)]);

  const auto& rule = gauss_legendre(3);
  for (std::size_t k = 0; k < cell.faces.size(); ++k) {
    const CellFace& cf = cell.faces[k];
    const Face& face = mesh.face(cf.face);
    const C1FaceDeltaOperator& dop = delta_ops[k];
    const C1FaceNablaOperator& nop = nabla_ops[k];
    if (dop.face != cf.face || nop.face != cf.face)
      throw std::invalid_argument("c1_cell_delta_projector: face operator order mismatch");
    const int m = static_cast<int>(face.vertices.size());
    std::vector<Index> face_to_cell(face.vertices.size());
    for (std::size_t j = 0; j < face.vertices.size(); ++j) face_to_cell[j] = local_index(cell.vertices, face.vertices[j]);

    // Hessian rows: int_P hess psi : H = sum_f int_f (H n) . grad psi, split
    // into the normal part (exact face mean of d psi/dn) and the tangential
    // part, which integrates by parts to edge integrals of psi.
    const Eigen::RowVectorXd normal_mean = nop.mean_functional(face.area);
    std::vector<Eigen::RowVectorXd> edge_integrals;
    for (const EdgeTrace& e : dop.edges) {
      Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(m * kC1DofsPerVertex);
      for (std::size_t q = 0; q < rule.points.size(); ++q) acc += rule.weights[q] * e.length * e.value(rule.points[q], m);
      edge_integrals.push_back(std::move(acc));
    }
    for (int a = 4; a < 10; ++a) {
      const Eigen::Matrix3d& H = hess[static_cast<std::size_t>(a)];
      const double hnn = face.normal.dot(H * face.normal);
      const Vector3 w = cf.sign * (H * face.normal - hnn * face.normal);
      Eigen::RowVectorXd row = cf.sign * hnn * normal_mean;
      for (std::size_t e = 0; e < dop.edges.size(); ++e) row += w.dot(dop.edges[e].normal) * edge_integrals[e];
      scatter(rhs, a, row, face_to_cell);
    }

    // Boundary-moment rows: int_f psi q = int_f (face proj psi) q for q in P_1.
    const MomentTable fm = integrate_monomials_face(mesh, cf.face, 3);
    std::array<Poly2, 10> restricted;
    for (int a = 0; a < 10; ++a)
      restricted[static_cast<std::size_t>(a)] =
          restrict_to_face(basis, ex[static_cast<std::size_t>(a)], face.centroid, face.t1, face.t2, face.diameter);
    for (int b = 0; b < 4; ++b) {
      const Poly2& qb = restricted[static_cast<std::size_t>(b)];
      for (int c = 0; c < 10; ++c) lhs(b, c) += (qb * restricted[static_cast<std::size_t>(c)]).integrate(fm.values);
      Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(m * kC1DofsPerVertex);
      const auto& fex = exponents2(2);
      for (int c = 0; c < 6; ++c) {
        Poly2 mono;
        mono.coeff(exponent_index(fex[static_cast<std::size_t>(c)])) = 1.0;
        row += (qb * mono).integrate(fm.values) * dop.projector.row(c);
      }
      scatter(rhs, b, row, face_to_cell);
    }
  }
  return solve_projector_system(lhs, rhs, "cell " + std::to_string(ci));
}

C1LocalElement c1_local_element(const PolyMesh& mesh, Index ci) {
  const Cell& cell = mesh.cell(ci);
  std::vector<C1FaceDeltaOperator> delta_ops;
  std::vector<C1FaceNablaOperator> nabla_ops;
  for (const CellFace& cf : cell.faces) {
    delta_ops.push_back(c1_face_delta_projector(mesh, cf.face));
    nabla_ops.push_back(c1_face_nabla_projector(mesh, cf.face));
  }

  C1LocalElement el;
  el.cell = ci;
  el.vertices = cell.vertices;
  el.basis = cell_basis(cell, 2);
  el.projector = c1_cell_delta_projector(mesh, ci, delta_ops, nabla_ops);

  const Index ndof = el.size();
  el.gram = Eigen::MatrixXd::Zero(10, 10);
  for (int a = 4; a < 10; ++a)
    for (int b = 4; b < 10; ++b) el.gram(a, b) = cell.volume * frobenius(el.basis.hessian(a), el.basis.hessian(b));

  el.dof_eval.resize(ndof, 10);
  el.dof_scaling.resize(ndof);
  for (std::size_t i = 0; i < el.vertices.size(); ++i) {
    const Point3& x = mesh.vertex(el.vertices[i]);
    const auto r = static_cast<Eigen::Index>(i) * kC1DofsPerVertex;
    el.dof_eval.row(r) = el.basis.values(x).transpose();
    el.dof_eval.block(r + 1, 0, 3, 10) = el.basis.gradients(x).transpose();
    el.dof_scaling.segment(r, 4) << 1.0, cell.diameter, cell.diameter, cell.diameter;
  }

  el.stabilization = 1.0 / cell.diameter;
  const Eigen::MatrixXd residual = Eigen::MatrixXd::Identity(ndof, ndof) - el.dof_eval * el.projector;
  const Eigen::MatrixXd scaled = el.dof_scaling.asDiagonal() * residual;
  el.stiffness = el.projector.transpose() * el.gram * el.projector + el.stabilization * scaled.transpose() * scaled;
  el.stiffness = 0.5 * (el.stiffness + el.stiffness.transpose()).eval();
  return el;
}

Eigen::MatrixXd c1_coupling_matrix(const PolyMesh& mesh, const C0LocalElement& c0, const C1LocalElement& c1) {
  if (c0.cell != c1.cell) throw std::invalid_argument("c1_coupling_matrix: elements of different cells");
  const MomentTable moments = integrate_monomials_cell(mesh, c1.cell, 3);
  const auto& ex2 = exponents3(2);
  const auto& ex1 = exponents3(1);
  Eigen::MatrixXd mass(10, 4);
  for (std::size_t a = 0; a < ex2.size(); ++a)
    for (std::size_t b = 0; b < ex1.size(); ++b) {
      const Exponent3 e{ex2[a][0] + ex1[b][0], ex2[a][1] + ex1[b][1], ex2[a][2] + ex1[b][2]};
      mass(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = moments[static_cast<std::size_t>(exponent_index(e))];
    }
  return c1.projector.transpose() * mass * c0.projector;
}

Eigen::VectorXd c1_interpolate(const PolyMesh& mesh, const C1LocalElement& el, const ScalarField& value,
                               const VectorField& gradient) {
  Eigen::VectorXd v(el.size());
  for (std::size_t i = 0; i < el.vertices.size(); ++i) {
    const Point3& x = mesh.vertex(el.vertices[i]);
    const auto r = static_cast<Eigen::Index>(i) * kC1DofsPerVertex;
    v[r] = value(x);
    v.segment(r + 1, 3) = gradient(x);
  }
  return v;
}

Eigen::RowVectorXd c1_normal_flux_functional(const PolyMesh& mesh, const C1FaceNablaOperator& op, int sign,
                                             const ScalarField& g, int order) {
  const Face& face = mesh.face(op.face);
  const QuadRule rule = quadrature_face(mesh, op.face, order);
  Eigen::Vector3d weighted = Eigen::Vector3d::Zero();
  for (std::size_t q = 0; q < rule.points.size(); ++q)
    weighted += rule.weights[q] * g(rule.points[q]) * op.basis.values(face.to_local(rule.points[q]));
  return sign * (weighted.transpose() * op.projector);
}

}  // namespace vem6
