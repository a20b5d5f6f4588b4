#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vem6/mesh.hpp"
#include "vem6/polynomial.hpp"

namespace vem6 {

using ScalarField = std::function<double(const Point3&)>;

/// H^1 projector of a face onto P_1(f) from vertex values, fixed by the
/// boundary mean. Column j belongs to face.vertices[j]; rows are the
/// coefficients of 1, xi, eta in the scaled face basis.
struct C0FaceOperator {
  Index face = -1;
  FaceBasis basis;
  Eigen::MatrixXd projector;  // 3 x m

  /// int_f v, which by the enhancing constraint equals int_f (proj v).
  Eigen::RowVectorXd mean_functional(double area) const { return area * projector.row(0); }
};

C0FaceOperator c0_face_projector(const PolyMesh& mesh, Index face);

/// Lowest-order C^0 element on one cell: one dof per cell vertex.
struct C0LocalElement {
  Index cell = -1;
  std::vector<Index> vertices;  ///< global vertex ids, local dof order
  CellBasis basis;              ///< scaled P_1 monomials
  Eigen::MatrixXd projector;    ///< 4 x n; H^1 projector, equal to the L^2 one
  Eigen::MatrixXd gram;         ///< 4 x 4; int_P grad m_a . grad m_b
  Eigen::MatrixXd dof_eval;     ///< n x 4; m_b at the vertices
  Eigen::MatrixXd stiffness;    ///< n x n
  double stabilization = 0.0;   ///< s factor of the dof-dof stabilisation

  Index size() const { return static_cast<Index>(vertices.size()); }
};

/// H^1 projector of the cell onto P_1 from the face projectors (given in the
/// order of cell.faces). Fixed by int_{dP} (proj v - v) = 0.
Eigen::MatrixXd c0_cell_projector(const PolyMesh& mesh, Index cell, std::span<const C0FaceOperator> face_ops);

/// Projector, consistency and stabilisation parts of the local stiffness,
///   K = P^T G P + h_P (I - D P)^T (I - D P).
C0LocalElement c0_local_element(const PolyMesh& mesh, Index cell);

/// Local load -int_P f (proj v) for each basis function, by quadrature.
Eigen::VectorXd c0_local_load(const PolyMesh& mesh, const C0LocalElement& element, const ScalarField& f,
                              int order = 6);

/// Vertex values of a function (its dofs) in local order.
Eigen::VectorXd c0_interpolate(const PolyMesh& mesh, const C0LocalElement& element, const ScalarField& f);

}  // namespace vem6
