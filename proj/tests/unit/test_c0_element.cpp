#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vem6/c0_element.hpp"

using namespace vem6;

namespace {

// Value of the face projection at a 3-D point of the face.
double face_eval(const C0FaceOperator& op, const Face& f, const Eigen::VectorXd& dofs, const Point3& x) {
  return op.basis.values(f.to_local(x)).dot(op.projector * dofs);
}

double cell_eval(const C0LocalElement& el, const Eigen::VectorXd& dofs, const Point3& x) {
  return el.basis.values(x).dot(el.projector * dofs);
}

Eigen::VectorXd face_dofs(const PolyMesh& m, const Face& f, const ScalarField& v) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(f.vertices.size()));
  for (std::size_t j = 0; j < f.vertices.size(); ++j) d[static_cast<Eigen::Index>(j)] = v(m.vertex(f.vertices[j]));
  return d;
}

const std::vector<ScalarField> kLinear = {
    [](const Point3&) { return 1.0; },
    [](const Point3& x) { return x.x(); },
    [](const Point3& x) { return x.y(); },
    [](const Point3& x) { return x.z(); },
    [](const Point3& x) { return 0.3 + x.x() + 2 * x.y() - x.z(); },
};

}  // namespace

TEST_CASE("C0 face projector reproduces P1") {
  const PolyMesh m = generate_cube_mesh(1);
  for (Index fi = 0; fi < m.num_faces(); ++fi) {
    const Face& f = m.face(fi);
    const C0FaceOperator op = c0_face_projector(m, fi);
    for (const auto& p : kLinear) {
      const Eigen::VectorXd d = face_dofs(m, f, p);
      for (const Point3& x : {f.centroid, Point3(m.vertex(f.vertices[0]))})
        CHECK(face_eval(op, f, d, x) == doctest::Approx(p(x)).epsilon(1e-12));
    }
  }
  // constant dofs give exactly the constant coefficient
  const C0FaceOperator op = c0_face_projector(m, 0);
  const Eigen::Vector3d c = op.projector * Eigen::VectorXd::Ones(4);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(std::abs(c[1]) < 1e-14);
  CHECK(std::abs(c[2]) < 1e-14);
}

TEST_CASE("C0 face projector matches the dense oracle") {
  for (const PolyMesh& m : {generate_cube_mesh(1), fixtures::cut_cube()}) {
    for (Index fi = 0; fi < m.num_faces(); ++fi) {
      const Face& f = m.face(fi);
      const C0FaceOperator op = c0_face_projector(m, fi);
      std::vector<double> hat(f.vertices.size(), 0.0);
      hat[2] = hat[3 % hat.size()] = 1.0;  // (0,0,1,1) on quads
      Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(hat.data(), static_cast<Eigen::Index>(hat.size()));
      const Eigen::Vector3d ref = oracles::face_p1_projection(m, f, hat);
      for (Index v : f.vertices) {
        const Point2 l = f.to_local(m.vertex(v));
        CHECK(face_eval(op, f, d, m.vertex(v)) == doctest::Approx(ref[0] + ref[1] * l.x() + ref[2] * l.y()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("C0 cell projector reproduces P1 on every fixture") {
  std::vector<PolyMesh> meshes = fixtures::element_fixtures();
  for (auto& m : fixtures::mesh_fixtures()) meshes.push_back(std::move(m));
  for (const PolyMesh& m : meshes)
    for (Index c = 0; c < m.num_cells(); ++c) {
      const C0LocalElement el = c0_local_element(m, c);
      for (const auto& p : kLinear) {
        const Eigen::VectorXd d = c0_interpolate(m, el, p);
        for (Index v : el.vertices) CHECK(cell_eval(el, d, m.vertex(v)) == doctest::Approx(p(m.vertex(v))).epsilon(1e-11));
        // stabilisation vanishes on polynomial dofs
        CHECK((d - el.dof_eval * (el.projector * d)).cwiseAbs().maxCoeff() < 1e-11);
      }
    }
}

TEST_CASE("C0 cell projector of a vertex hat on the unit cube") {
  // hand computation: each of the three faces at the origin carries
  // int_f v = |f| (boundary mean) = 1/4, so grad = -(1,1,1)/4, and the
  // boundary-mean row gives the constant 1/2
  const PolyMesh m = generate_cube_mesh(1);
  const C0LocalElement el = c0_local_element(m, 0);
  Index origin = -1;
  for (std::size_t i = 0; i < el.vertices.size(); ++i)
    if (m.vertex(el.vertices[i]).norm() < 1e-14) origin = static_cast<Index>(i);
  REQUIRE(origin >= 0);
  Eigen::VectorXd d = Eigen::VectorXd::Zero(8);
  d[origin] = 1.0;
  for (const Point3& x : {Point3(0, 0, 0), Point3(1, 1, 1), Point3(0.3, 0.9, 0.2)})
    CHECK(cell_eval(el, d, x) == doctest::Approx(0.5 - (x.x() + x.y() + x.z()) / 4).epsilon(1e-13));
}

TEST_CASE("C0 local stiffness") {
  const PolyMesh m = generate_cube_mesh(1);
  const C0LocalElement el = c0_local_element(m, 0);
  const double knorm = el.stiffness.norm();
  CHECK((el.stiffness - el.stiffness.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((el.stiffness * Eigen::VectorXd::Ones(8)).cwiseAbs().maxCoeff() <= 1e-12 * knorm);
  const Eigen::VectorXd dx = c0_interpolate(m, el, [](const Point3& x) { return x.x(); });
  CHECK(dx.dot(el.stiffness * dx) == doctest::Approx(1.0).epsilon(1e-12));

  // dense eigensolve: one zero eigenvalue, the rest bounded below by c h_P
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(el.stiffness);
  CHECK(std::abs(eig.eigenvalues()[0]) <= 1e-12 * knorm);
  CHECK(eig.eigenvalues()[1] >= 0.05 * m.cell(0).diameter);
}

TEST_CASE("C0 consistency and stability on fixtures") {
  for (const PolyMesh& m : fixtures::element_fixtures()) {
    const C0LocalElement el = c0_local_element(m, 0);
    const double knorm = el.stiffness.norm();
    for (const auto& p : kLinear) {
      // K (dofs of q) equals the consistent action P^T G c_q
      const Eigen::VectorXd dq = c0_interpolate(m, el, p);
      const Eigen::VectorXd cq = el.projector * dq;
      CHECK((el.stiffness * dq - el.projector.transpose() * el.gram * cq).cwiseAbs().maxCoeff() <= 1e-11 * knorm);
    }
    // positive on the complement of the P_1 image
    Eigen::MatrixXd poly(el.size(), 4);
    for (int k = 0; k < 4; ++k) poly.col(k) = c0_interpolate(m, el, kLinear[static_cast<std::size_t>(k)]);
    const Eigen::MatrixXd q = poly.householderQr().householderQ() * Eigen::MatrixXd::Identity(el.size(), 4);
    for (unsigned s = 0; s < 200; ++s) {
      Eigen::VectorXd v = fixtures::random_vector(el.size(), s);
      v -= q * (q.transpose() * v);
      // only constants are in the kernel; the remaining P_1 directions have positive energy too
      CHECK(v.dot(el.stiffness * v) > 0.0);
    }
  }
}

TEST_CASE("C0 local load") {
  const PolyMesh cube = generate_cube_mesh(1);
  const C0LocalElement el = c0_local_element(cube, 0);
  CHECK(c0_local_load(cube, el, [](const Point3&) { return 0.0; }).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(8);
  CHECK(c0_local_load(cube, el, [](const Point3&) { return 1.0; }).dot(ones) == doctest::Approx(-1.0).epsilon(1e-13));

  const PolyMesh m = generate_cube_mesh(4);
  const ScalarField f = [](const Point3& x) {
    using std::numbers::pi;
    return 27 * std::pow(pi, 6) * std::sin(pi * x.x()) * std::sin(pi * x.y()) * std::sin(pi * x.z());
  };
  for (Index c : {Index(0), Index(21), Index(63)}) {
    const C0LocalElement e = c0_local_element(m, c);
    const Eigen::VectorXd load = c0_local_load(m, e, f);
    Point3 lo = m.vertex(e.vertices.front()), hi = lo;
    for (Index v : e.vertices) {
      lo = lo.cwiseMin(m.vertex(v));
      hi = hi.cwiseMax(m.vertex(v));
    }
    // order-8 oracle (5-point tensor Gauss on the box)
    const QuadRule rule = oracles::box_rule(lo, hi, 5);
    Eigen::Vector4d mom = Eigen::Vector4d::Zero();
    for (std::size_t q = 0; q < rule.points.size(); ++q) mom += rule.weights[q] * f(rule.points[q]) * e.basis.values(rule.points[q]);
    const Eigen::VectorXd ref = -(e.projector.transpose() * mom);
    CHECK((load - ref).norm() <= 1e-6 * ref.norm());
  }
}
