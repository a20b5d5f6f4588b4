#include "vem6/polynomial.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace vem6 {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

const std::vector<Exponent3>& exponents3(int degree) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("monomial degree out of range");
  static const auto table = [] {
    std::vector<std::vector<Exponent3>> t(kMaxDegree + 1);
    std::vector<Exponent3> all;
    for (int d = 0; d <= kMaxDegree; ++d) {
      for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) all.push_back({a, b, d - a - b});
      t[static_cast<std::size_t>(d)] = all;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(degree)];
}

const std::vector<Exponent2>& exponents2(int degree) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("monomial degree out of range");
  static const auto table = [] {
    std::vector<std::vector<Exponent2>> t(kMaxDegree + 1);
    std::vector<Exponent2> all;
    for (int d = 0; d <= kMaxDegree; ++d) {
      for (int a = d; a >= 0; --a) all.push_back({a, d - a});
      t[static_cast<std::size_t>(d)] = all;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(degree)];
}

int exponent_index(const Exponent3& e) {
  const int d = e[0] + e[1] + e[2];
  // offset of degree d, then position within the degree block
  const int rest = d - e[0];
  return dim_p3d(d - 1) + rest * (rest + 1) / 2 + e[2];
}

int exponent_index(const Exponent2& e) {
  const int d = e[0] + e[1];
  return dim_p2d(d - 1) + e[1];
}

Eigen::VectorXd CellBasis::values(const Point3& x) const {
  const Vector3 y = (x - center) / scale;
  const auto& ex = exponents3(degree);
  Eigen::VectorXd v(static_cast<Eigen::Index>(ex.size()));
  for (std::size_t a = 0; a < ex.size(); ++a)
    v[static_cast<Eigen::Index>(a)] = ipow(y.x(), ex[a][0]) * ipow(y.y(), ex[a][1]) * ipow(y.z(), ex[a][2]);
  return v;
}

Eigen::MatrixX3d CellBasis::gradients(const Point3& x) const {
  const Vector3 y = (x - center) / scale;
  const auto& ex = exponents3(degree);
  Eigen::MatrixX3d g(static_cast<Eigen::Index>(ex.size()), 3);
  for (std::size_t a = 0; a < ex.size(); ++a) {
    const auto& e = ex[a];
    for (int i = 0; i < 3; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) {
        g(static_cast<Eigen::Index>(a), i) = 0.0;
        continue;
      }
      double p = e[static_cast<std::size_t>(i)] / scale;
      for (int j = 0; j < 3; ++j) p *= ipow(y[j], e[static_cast<std::size_t>(j)] - (i == j ? 1 : 0));
      g(static_cast<Eigen::Index>(a), i) = p;
    }
  }
  return g;
}

Eigen::Matrix3d CellBasis::hessian(int a) const {
  const auto& e = exponents3(kMaxDegree)[static_cast<std::size_t>(a)];
  if (e[0] + e[1] + e[2] > 2) throw std::invalid_argument("constant Hessian needs degree <= 2");
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  const double s2 = scale * scale;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent3 r = e;
      const double fi = r[static_cast<std::size_t>(i)]--;
      const double fj = r[static_cast<std::size_t>(j)]--;
      if (r[0] >= 0 && r[1] >= 0 && r[2] >= 0) h(i, j) = fi * fj / s2;
    }
  return h;
}

Eigen::VectorXd FaceBasis::values(const Point2& local) const {
  const Point2 y = local / scale;
  const auto& ex = exponents2(degree);
  Eigen::VectorXd v(static_cast<Eigen::Index>(ex.size()));
  for (std::size_t a = 0; a < ex.size(); ++a) v[static_cast<Eigen::Index>(a)] = ipow(y.x(), ex[a][0]) * ipow(y.y(), ex[a][1]);
  return v;
}

Eigen::MatrixX2d FaceBasis::gradients(const Point2& local) const {
  const Point2 y = local / scale;
  const auto& ex = exponents2(degree);
  Eigen::MatrixX2d g(static_cast<Eigen::Index>(ex.size()), 2);
  for (std::size_t a = 0; a < ex.size(); ++a) {
    const auto [p, q] = ex[a];
    g(static_cast<Eigen::Index>(a), 0) = p ? p * ipow(y.x(), p - 1) * ipow(y.y(), q) / scale : 0.0;
    g(static_cast<Eigen::Index>(a), 1) = q ? q * ipow(y.x(), p) * ipow(y.y(), q - 1) / scale : 0.0;
  }
  return g;
}

Eigen::Matrix2d FaceBasis::hessian(int a) const {
  const auto [p, q] = exponents2(kMaxDegree)[static_cast<std::size_t>(a)];
  if (p + q > 2) throw std::invalid_argument("constant Hessian needs degree <= 2");
  const double s2 = scale * scale;
  Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
  if (p == 2) h(0, 0) = 2.0 / s2;
  if (q == 2) h(1, 1) = 2.0 / s2;
  if (p == 1 && q == 1) h(0, 1) = h(1, 0) = 1.0 / s2;
  return h;
}

Poly2 Poly2::constant(double c) {
  Poly2 p;
  p.coeffs_[0] = c;
  return p;
}

Poly2 Poly2::linear(double c0, double c1, double c2) {
  Poly2 p;
  p.coeffs_[0] = c0;
  p.coeffs_[1] = c1;
  p.coeffs_[2] = c2;
  return p;
}

int Poly2::degree() const {
  const auto& ex = exponents2(kMaxDegree);
  int d = 0;
  for (std::size_t i = 0; i < ex.size(); ++i)
    if (coeffs_[i] != 0.0) d = std::max(d, ex[i][0] + ex[i][1]);
  return d;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Poly2 Poly2::operator*(double s) const {
  Poly2 r(*this);
  for (double& c : r.coeffs_) c *= s;
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  const auto& ex = exponents2(kMaxDegree);
  Poly2 r;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (o.coeffs_[j] == 0.0) continue;
      const Exponent2 e{ex[i][0] + ex[j][0], ex[i][1] + ex[j][1]};
      if (e[0] + e[1] > kMaxDegree) throw std::overflow_error("Poly2 product exceeds maximum degree");
      r.coeffs_[static_cast<std::size_t>(exponent_index(e))] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

double Poly2::integrate(const std::vector<double>& moments) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    if (i >= moments.size()) throw std::invalid_argument("moment table degree too low for polynomial");
    s += coeffs_[i] * moments[i];
  }
  return s;
}

Poly2 restrict_to_face(const CellBasis& cell, const Exponent3& a, const Point3& face_centroid,
                       const Vector3& t1, const Vector3& t2, double face_scale) {
  // y_i = (x_f - x_P)_i / h_P + (h_f / h_P) (xi t1_i + eta t2_i)
  const Vector3 offset = (face_centroid - cell.center) / cell.scale;
  const double r = face_scale / cell.scale;
  Poly2 result = Poly2::constant(1.0);
  for (int i = 0; i < 3; ++i) {
    const Poly2 lin = Poly2::linear(offset[i], r * t1[i], r * t2[i]);
    for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) result = result * lin;
  }
  return result;
}

}  // namespace vem6
