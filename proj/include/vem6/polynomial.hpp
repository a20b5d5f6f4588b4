#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "vem6/common.hpp"

namespace vem6 {

/// Largest total degree handled by the monomial machinery.
inline constexpr int kMaxDegree = 6;

using Exponent3 = std::array<int, 3>;
using Exponent2 = std::array<int, 2>;

/// Dimension of P_k in one, two and three variables.
constexpr int dim_p1d(int k) { return k + 1; }
constexpr int dim_p2d(int k) { return (k + 1) * (k + 2) / 2; }
constexpr int dim_p3d(int k) { return (k + 1) * (k + 2) * (k + 3) / 6; }

/// Exponents ordered by total degree, then by decreasing power of x (then y):
/// 1, x, y, z, x^2, xy, xz, y^2, yz, z^2, ...
const std::vector<Exponent3>& exponents3(int degree);
const std::vector<Exponent2>& exponents2(int degree);
int exponent_index(const Exponent3& e);
int exponent_index(const Exponent2& e);

/// Scaled monomials m_a(x) = ((x - center) / scale)^a on a cell.
struct CellBasis {
  Point3 center = Point3::Zero();
  double scale = 1.0;
  int degree = 0;

  int size() const { return dim_p3d(degree); }
  Eigen::VectorXd values(const Point3& x) const;
  /// Row a holds grad m_a in physical coordinates.
  Eigen::MatrixX3d gradients(const Point3& x) const;
  /// Hessian of m_a in physical coordinates (degree <= 2 only: constant).
  Eigen::Matrix3d hessian(int a) const;
};

/// Scaled monomials on a face in its local frame,
/// m_a(xi, eta) with (xi, eta) = ((x - x_f) . t1, (x - x_f) . t2) / h_f.
struct FaceBasis {
  double scale = 1.0;
  int degree = 0;

  int size() const { return dim_p2d(degree); }
  /// `local` is the unscaled position in the face frame.
  Eigen::VectorXd values(const Point2& local) const;
  Eigen::MatrixX2d gradients(const Point2& local) const;
  Eigen::Matrix2d hessian(int a) const;
};

/// Dense polynomial in two variables with total degree <= kMaxDegree,
/// coefficients stored in exponents2 order.
class Poly2 {
 public:
  Poly2() : coeffs_(dim_p2d(kMaxDegree), 0.0) {}
  static Poly2 constant(double c);
  /// c0 + c1 xi + c2 eta
  static Poly2 linear(double c0, double c1, double c2);

  double coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  double& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  int degree() const;

  Poly2& operator+=(const Poly2& o);
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(double s) const;

  /// Sum of coefficients times the given moments (exponents2 order).
  double integrate(const std::vector<double>& moments) const;

 private:
  std::vector<double> coeffs_;
};

/// Restriction of the cell monomial m_a (basis `cell`) to the plane of a face,
/// expressed in the face's scaled coordinates.
Poly2 restrict_to_face(const CellBasis& cell, const Exponent3& a, const Point3& face_centroid,
                       const Vector3& t1, const Vector3& t2, double face_scale);

}  // namespace vem6
