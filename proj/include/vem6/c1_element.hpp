#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vem6/c0_element.hpp"
#include "vem6/mesh.hpp"
#include "vem6/polynomial.hpp"

namespace vem6 {

/// Dofs per vertex of the C^1 space: value, d/dx, d/dy, d/dz.
inline constexpr int kC1DofsPerVertex = 4;

using VectorField = std::function<Vector3(const Point3&)>;

/// Linear functionals on the dofs of one face (4 per face vertex, in face
/// vertex order) describing the traces of a C^1 virtual function along one
/// edge: cubic Hermite values and tangential derivative, linear in-face
/// normal derivative.
struct EdgeTrace {
  double length = 0.0;
  Vector3 tangent = Vector3::Zero();  ///< 3-D unit tangent (CCW about the face normal)
  Vector3 normal = Vector3::Zero();   ///< 3-D in-plane outward normal
  Point2 start = Point2::Zero();      ///< local face coordinates of the start vertex
  Point2 end = Point2::Zero();
  int first = 0;                      ///< face-local index of the start vertex
  int second = 0;

  /// Rows over the face dofs at edge parameter t in [0, 1].
  Eigen::RowVectorXd value(double t, int face_vertices) const;
  Eigen::RowVectorXd tangential_derivative(double t, int face_vertices) const;
  Eigen::RowVectorXd normal_derivative(double t, int face_vertices) const;
};

/// H^2 face projector onto P_2(f) from value and gradient dofs of the face
/// vertices, fixed by boundary moments against P_1(f).
struct C1FaceDeltaOperator {
  Index face = -1;
  FaceBasis basis;              ///< degree 2
  Eigen::MatrixXd projector;    ///< 6 x 4m
  std::vector<EdgeTrace> edges; ///< one per face edge, in loop order
};

/// H^1 face projector onto P_1(f) of the normal derivative d psi / d n_f,
/// fixed by its boundary mean; int_f of the normal derivative is exact.
struct C1FaceNablaOperator {
  Index face = -1;
  FaceBasis basis;           ///< degree 1
  Eigen::MatrixXd projector; ///< 3 x 4m

  Eigen::RowVectorXd mean_functional(double area) const { return area * projector.row(0); }
};

C1FaceDeltaOperator c1_face_delta_projector(const PolyMesh& mesh, Index face);
C1FaceNablaOperator c1_face_nabla_projector(const PolyMesh& mesh, Index face);

/// Lowest-order C^1 element: value and gradient at each cell vertex.
/// Local dof 4 i + c belongs to vertex i, component c (value, x, y, z).
struct C1LocalElement {
  Index cell = -1;
  std::vector<Index> vertices;  ///< global vertex ids
  CellBasis basis;              ///< scaled P_2 monomials
  Eigen::MatrixXd projector;    ///< 10 x 4n; H^2 projector, equal to the L^2 one
  Eigen::MatrixXd gram;         ///< 10 x 10; int_P hess m_a : hess m_b
  Eigen::MatrixXd dof_eval;     ///< 4n x 10; dofs of each monomial
  Eigen::VectorXd dof_scaling;  ///< 4n; 1 on values, h_P on gradients
  Eigen::MatrixXd stiffness;    ///< 4n x 4n
  double stabilization = 0.0;   ///< 1 / h_P

  Index size() const { return static_cast<Index>(vertices.size()) * kC1DofsPerVertex; }
};

/// H^2 projector of the cell onto P_2 (face operators in cell.faces order).
Eigen::MatrixXd c1_cell_delta_projector(const PolyMesh& mesh, Index cell,
                                        std::span<const C1FaceDeltaOperator> delta_ops,
                                        std::span<const C1FaceNablaOperator> nabla_ops);

/// K = P^T G P + (1/h_P) (I - D P)^T S^2 (I - D P), S the dof scaling.
C1LocalElement c1_local_element(const PolyMesh& mesh, Index cell);

/// Local coupling block C[i][j] = int_P (proj_C1 phi_i)(proj_C0 chi_j):
/// rows are C^1 dofs, columns C^0 dofs.
Eigen::MatrixXd c1_coupling_matrix(const PolyMesh& mesh, const C0LocalElement& c0, const C1LocalElement& c1);

/// Values and gradients of a function at the cell vertices (its dofs).
Eigen::VectorXd c1_interpolate(const PolyMesh& mesh, const C1LocalElement& element, const ScalarField& value,
                               const VectorField& gradient);

/// Face-dof functionals for the boundary term int_f g (d psi / d n) with
/// n = sign * n_f, evaluated as int_f g proj(d psi / d n) by quadrature.
Eigen::RowVectorXd c1_normal_flux_functional(const PolyMesh& mesh, const C1FaceNablaOperator& op, int sign,
                                             const ScalarField& g, int order);

}  // namespace vem6
