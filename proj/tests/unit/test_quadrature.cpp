#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "vem6/gauss.hpp"
#include "vem6/moments.hpp"
#include "vem6/quadrature.hpp"

using namespace vem6;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// int over the simplex 0,e1,e2,e3 of x^a y^b z^c = a! b! c! / (a+b+c+3)!
double simplex_monomial(int a, int b, int c) { return factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3); }

// Scaled moment ((x - c)/h)^alpha over the unit simplex by binomial expansion.
double simplex_scaled_moment(const Exponent3& e, const Point3& c, double h) {
  double sum = 0.0;
  for (int i = 0; i <= e[0]; ++i)
    for (int j = 0; j <= e[1]; ++j)
      for (int k = 0; k <= e[2]; ++k)
        sum += binomial(e[0], i) * binomial(e[1], j) * binomial(e[2], k) * std::pow(-c.x(), e[0] - i) *
               std::pow(-c.y(), e[1] - j) * std::pow(-c.z(), e[2] - k) * simplex_monomial(i, j, k);
  return sum / std::pow(h, e[0] + e[1] + e[2]);
}

double eval_monomial(const CellBasis& b, int a, const Point3& x) { return b.values(x)[a]; }

}  // namespace

TEST_CASE("monomial ordering and dimensions") {
  CHECK(dim_p3d(2) == 10);
  CHECK(dim_p2d(2) == 6);
  CHECK(dim_p1d(3) == 4);
  const auto& e = exponents3(2);
  REQUIRE(e.size() == 10);
  const Exponent3 expected[10] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
                                  {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (int i = 0; i < 10; ++i) CHECK(e[static_cast<std::size_t>(i)] == expected[i]);
  for (int d = 0; d <= kMaxDegree; ++d) {
    CHECK(exponents3(d).size() == static_cast<std::size_t>(dim_p3d(d)));
    CHECK(exponents2(d).size() == static_cast<std::size_t>(dim_p2d(d)));
  }
  const auto& all3 = exponents3(kMaxDegree);
  for (std::size_t i = 0; i < all3.size(); ++i) CHECK(exponent_index(all3[i]) == static_cast<int>(i));
  const auto& all2 = exponents2(kMaxDegree);
  for (std::size_t i = 0; i < all2.size(); ++i) CHECK(exponent_index(all2[i]) == static_cast<int>(i));
  CHECK_THROWS(exponents3(kMaxDegree + 1));
}

TEST_CASE("cell basis derivatives match finite differences") {
  CellBasis b{Point3(0.3, -0.2, 0.5), 0.7, 3};
  const Point3 x(0.41, 0.13, -0.27);
  const double step = 1e-6;
  const Eigen::MatrixX3d g = b.gradients(x);
  for (int d = 0; d < 3; ++d) {
    Point3 xp = x, xm = x;
    xp[d] += step;
    xm[d] -= step;
    const Eigen::VectorXd fd = (b.values(xp) - b.values(xm)) / (2 * step);
    CHECK((fd - g.col(d)).cwiseAbs().maxCoeff() < 1e-7);
  }
  CellBasis b2{b.center, b.scale, 2};
  for (int a = 0; a < 10; ++a) {
    const Eigen::Matrix3d h = b2.hessian(a);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Point3 pp = x, pm = x, mp = x, mm = x;
        pp[i] += step; pp[j] += step;
        pm[i] += step; pm[j] -= step;
        mp[i] -= step; mp[j] += step;
        mm[i] -= step; mm[j] -= step;
        const double fd = (eval_monomial(b2, a, pp) - eval_monomial(b2, a, pm) - eval_monomial(b2, a, mp) +
                           eval_monomial(b2, a, mm)) / (4 * step * step);
        CHECK(std::abs(fd - h(i, j)) < 1e-3);
      }
  }
  CHECK_THROWS(CellBasis{b.center, b.scale, 3}.hessian(10));
}

TEST_CASE("face basis derivatives match finite differences") {
  FaceBasis b{0.6, 3};
  const Point2 x(0.2, -0.35);
  const double step = 1e-6;
  const Eigen::MatrixX2d g = b.gradients(x);
  for (int d = 0; d < 2; ++d) {
    Point2 xp = x, xm = x;
    xp[d] += step;
    xm[d] -= step;
    CHECK(((b.values(xp) - b.values(xm)) / (2 * step) - g.col(d)).cwiseAbs().maxCoeff() < 1e-7);
  }
  for (int a = 0; a < 6; ++a) {
    const Eigen::Matrix2d h = b.hessian(a);
    for (int i = 0; i < 2; ++i) {
      Point2 xp = x, xm = x;
      xp[i] += step;
      xm[i] -= step;
      const Eigen::RowVector2d fd = (b.gradients(xp).row(a) - b.gradients(xm).row(a)) / (2 * step);
      CHECK((fd.transpose() - h.col(i)).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("Poly2 arithmetic") {
  const Poly2 p = Poly2::linear(1, 2, 3);
  const Poly2 q = p * p;
  // (1 + 2x + 3y)^2 = 1 + 4x + 6y + 4x^2 + 12xy + 9y^2
  const double expected[6] = {1, 4, 6, 4, 12, 9};
  for (int i = 0; i < 6; ++i) CHECK(q.coeff(i) == doctest::Approx(expected[i]));
  CHECK(q.degree() == 2);
  Poly2 r = Poly2::constant(2.0);
  r += p * 0.5;
  CHECK(r.coeff(0) == doctest::Approx(2.5));
  CHECK(r.coeff(2) == doctest::Approx(1.5));
  Poly2 big = Poly2::linear(0, 1, 0);
  for (int i = 0; i < 5; ++i) big = big * Poly2::linear(0, 1, 0);
  CHECK(big.degree() == 6);
  CHECK_THROWS_AS(big * Poly2::linear(0, 1, 0), std::overflow_error);
}

TEST_CASE("restriction of a cell monomial to a face") {
  const PolyMesh m = fixtures::cut_cube();
  const Cell& cell = m.cell(0);
  const CellBasis cb = cell_basis(cell, 3);
  for (const CellFace& cf : cell.faces) {
    const Face& f = m.face(cf.face);
    const FaceBasis fb = face_basis(f, kMaxDegree);
    for (int a = 0; a < dim_p3d(3); ++a) {
      const Poly2 r = restrict_to_face(cb, exponents3(3)[static_cast<std::size_t>(a)], f.centroid, f.t1, f.t2, f.diameter);
      for (Index v : f.vertices) {
        const Point3& x = m.vertex(v);
        const Eigen::VectorXd fv = fb.values(f.to_local(x));
        double face_value = 0.0;
        for (int i = 0; i < dim_p2d(kMaxDegree); ++i) face_value += r.coeff(i) * fv[i];
        CHECK(face_value == doctest::Approx(cb.values(x)[a]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("unit square face moments") {
  const PolyMesh m = generate_cube_mesh(1);
  for (Index fi = 0; fi < m.num_faces(); ++fi) {
    const MomentTable t = integrate_monomials_face(m, fi, 2);
    CHECK(t[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(t[1]) < 1e-15);
    CHECK(std::abs(t[2]) < 1e-15);
    // frame axes follow the square's edges, so xi^2 and eta^2 both give 1/24
    CHECK(t[3] == doctest::Approx(1.0 / 24).epsilon(1e-13));
    CHECK(std::abs(t[4]) < 1e-15);
    CHECK(t[5] == doctest::Approx(1.0 / 24).epsilon(1e-13));
  }
}

TEST_CASE("polygon integrals") {
  const std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_monomial_integral(square, 0, 0) == doctest::Approx(1.0));
  CHECK(polygon_monomial_integral(square, 2, 3) == doctest::Approx(1.0 / 12));
  const std::vector<Point2> tri{{0, 0}, {1, 0}, {0, 1}};
  // int x^a y^b over the unit triangle = a! b! / (a+b+2)!
  CHECK(polygon_monomial_integral(tri, 2, 1) == doctest::Approx(2.0 / 120));
  CHECK(polygon_monomial_integral(tri, 3, 3) == doctest::Approx(36.0 / 40320));
}

TEST_CASE("unit cube and unit tetrahedron cell moments") {
  const PolyMesh cube = generate_cube_mesh(1);
  const MomentTable t = integrate_monomials_cell(cube, 0, 2);
  CHECK(t[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int a = 1; a < 4; ++a) CHECK(std::abs(t[static_cast<std::size_t>(a)]) < 1e-15);

  const PolyMesh tet = fixtures::unit_tet();
  const Cell& c = tet.cell(0);
  const MomentTable mt = integrate_monomials_cell(tet, 0, 5);
  const auto& ex = exponents3(5);
  for (std::size_t a = 0; a < ex.size(); ++a)
    CHECK(mt[a] == doctest::Approx(simplex_scaled_moment(ex[a], c.centroid, c.diameter)).epsilon(1e-12).scale(1e-3));
  // unscaled int x = 1/24 recovered from the scaled moments
  CHECK(c.diameter * mt[1] + c.centroid.x() * mt[0] == doctest::Approx(1.0 / 24).epsilon(1e-14));
}

TEST_CASE("moment tables are nested") {
  for (const PolyMesh& m : fixtures::element_fixtures()) {
    const MomentTable hi = integrate_monomials_cell(m, 0, 5);
    for (int k = 0; k < 5; ++k) {
      const MomentTable lo = integrate_monomials_cell(m, 0, k);
      for (std::size_t i = 0; i < lo.values.size(); ++i) CHECK(lo[i] == hi[i]);
    }
    const MomentTable fhi = integrate_monomials_face(m, 0, 4);
    const MomentTable flo = integrate_monomials_face(m, 0, 2);
    for (std::size_t i = 0; i < flo.values.size(); ++i) CHECK(flo[i] == fhi[i]);
  }
}

TEST_CASE("cell moments are invariant under face relabelling") {
  const PolyMesh m = fixtures::cut_cube();
  std::vector<Point3> v(m.vertices().begin(), m.vertices().end());
  std::vector<PolyMesh::FaceLoop> faces;
  for (Index f = m.num_faces() - 1; f >= 0; --f) faces.push_back(m.face(f).vertices);
  PolyMesh::CellFaces cell;
  for (Index f = 0; f < m.num_faces(); ++f) cell.push_back({f, 1});
  const PolyMesh r = PolyMesh::build(v, faces, {cell});
  const MomentTable a = integrate_monomials_cell(m, 0, 4);
  const MomentTable b = integrate_monomials_cell(r, 0, 4);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-12).scale(1e-3));
}

TEST_CASE("Gauss rules") {
  for (int n = 1; n <= 6; ++n) {
    const GaussRule1D& g = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0;
      for (std::size_t i = 0; i < g.points.size(); ++i) s += g.weights[i] * std::pow(g.points[i], p);
      CHECK(s == doctest::Approx(1.0 / (p + 1)).epsilon(1e-13));
    }
    for (int alpha : {1, 2}) {
      const GaussRule1D& j = gauss_jacobi(n, alpha);
      for (int p = 0; p <= 2 * n - 1; ++p) {
        double s = 0;
        for (std::size_t i = 0; i < j.points.size(); ++i) s += j.weights[i] * std::pow(j.points[i], p);
        // int_0^1 t^p (1-t)^alpha = p! alpha! / (p+alpha+1)!
        CHECK(s == doctest::Approx(factorial(p) * factorial(alpha) / factorial(p + alpha + 1)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("cell quadrature closed forms on the unit cube") {
  const PolyMesh m = generate_cube_mesh(1);
  const QuadRule r2 = quadrature_cell(m, 0, 2);
  CHECK(std::abs(r2.integrate([](const Point3&) { return 1.0; }) - 1.0) <= 1e-12);
  CHECK(std::abs(r2.integrate([](const Point3& x) { return x.x() * x.x(); }) - 1.0 / 3) <= 1e-12);
  const QuadRule r6 = quadrature_cell(m, 0, 6);
  CHECK(std::abs(r6.integrate([](const Point3& x) { return std::sin(std::numbers::pi * x.x()); }) -
                 2 / std::numbers::pi) <= 1e-8);
}

TEST_CASE("quadrature reproduces moment tables") {
  for (const PolyMesh& m : fixtures::element_fixtures()) {
    const Cell& c = m.cell(0);
    const CellBasis b = cell_basis(c, kMaxDegree);
    for (int order = 1; order <= kMaxDegree; ++order) {
      const QuadRule r = quadrature_cell(m, 0, order);
      double wsum = 0;
      for (double w : r.weights) wsum += w;
      CHECK(wsum == doctest::Approx(c.volume).epsilon(1e-12));
      const MomentTable t = integrate_monomials_cell(m, 0, order);
      Eigen::VectorXd q = Eigen::VectorXd::Zero(dim_p3d(kMaxDegree));
      for (std::size_t i = 0; i < r.points.size(); ++i) q += r.weights[i] * b.values(r.points[i]);
      for (std::size_t a = 0; a < t.values.size(); ++a)
        CHECK(q[static_cast<Eigen::Index>(a)] == doctest::Approx(t[a]).epsilon(1e-12).scale(c.volume));
    }
    for (Index fi = 0; fi < m.num_faces(); ++fi) {
      const Face& f = m.face(fi);
      const FaceBasis fb = face_basis(f, 4);
      const QuadRule r = quadrature_face(m, fi, 4);
      const MomentTable t = integrate_monomials_face(m, fi, 4);
      Eigen::VectorXd q = Eigen::VectorXd::Zero(dim_p2d(4));
      for (std::size_t i = 0; i < r.points.size(); ++i) q += r.weights[i] * fb.values(f.to_local(r.points[i]));
      for (std::size_t a = 0; a < t.values.size(); ++a)
        CHECK(q[static_cast<Eigen::Index>(a)] == doctest::Approx(t[a]).epsilon(1e-12).scale(f.area));
    }
  }
}

TEST_CASE("quadrature on a cell that is not star-shaped about its centroid") {
  const PolyMesh m = fixtures::l_prism();
  try {
    quadrature_cell(m, 0, 2);
    FAIL("expected a geometry error");
  } catch (const GeometryError& e) {
    CHECK(std::string(e.what()).find("cell 0") != std::string::npos);
  }
  CHECK_THROWS_AS(quadrature_cell(generate_cube_mesh(1), 0, kMaxQuadOrder + 1), std::invalid_argument);
}
