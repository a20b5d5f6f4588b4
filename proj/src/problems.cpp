#include "vem6/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vem6 {

namespace {

// Falling factorial k (k-1) ... (k-m+1).
double falling(int k, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= k - i;
  return r;
}

// c s^p with s = x + y + z, zero when c == 0 (avoids 0^negative).
double power_term(double c, double s, int p) { return c == 0.0 ? 0.0 : c * std::pow(s, p); }

}  // namespace

ProblemData manufactured_patch(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("patch degree k must lie in [1, 6], got " + std::to_string(k));
  ProblemData p;
  p.name = "patch";
  p.k = k;
  const double c1 = falling(k, 1);
  const double c2 = falling(k, 2);
  // Lap s^m = 3 m (m-1) s^(m-2), so Lap^2 s^k = 9 k(k-1)(k-2)(k-3) s^(k-4).
  const double cs = -9.0 * falling(k, 4);
  const double cgs = -9.0 * falling(k, 5);
  const double cf = -27.0 * falling(k, 6);
  auto sum = [](const Point3& x) { return x.x() + x.y() + x.z(); };
  p.u = [=](const Point3& x) { return std::pow(sum(x), k); };
  p.grad_u = [=](const Point3& x) { return Vector3::Constant(power_term(c1, sum(x), k - 1)); };
  p.hess_u = [=](const Point3& x) { return Eigen::Matrix3d::Constant(power_term(c2, sum(x), k - 2)); };
  p.sigma = [=](const Point3& x) { return power_term(cs, sum(x), k - 4); };
  p.grad_sigma = [=](const Point3& x) { return Vector3::Constant(power_term(cgs, sum(x), k - 5)); };
  p.f = [=](const Point3& x) { return power_term(cf, sum(x), k - 6); };
  return p;
}

ProblemData manufactured_trig() {
  using std::numbers::pi;
  ProblemData p;
  p.name = "trig";
  auto sines = [](const Point3& x) {
    return Vector3(std::sin(pi * x.x()), std::sin(pi * x.y()), std::sin(pi * x.z()));
  };
  auto cosines = [](const Point3& x) {
    return Vector3(std::cos(pi * x.x()), std::cos(pi * x.y()), std::cos(pi * x.z()));
  };
  auto value = [=](const Point3& x) {
    const Vector3 s = sines(x);
    return s.prod();
  };
  auto gradient = [=](const Point3& x) {
    const Vector3 s = sines(x);
    const Vector3 c = cosines(x);
    return Vector3(pi * c[0] * s[1] * s[2], pi * s[0] * c[1] * s[2], pi * s[0] * s[1] * c[2]);
  };
  const double pi2 = pi * pi;
  const double pi4 = pi2 * pi2;
  p.u = value;
  p.grad_u = gradient;
  p.hess_u = [=](const Point3& x) {
    const Vector3 s = sines(x);
    const Vector3 c = cosines(x);
    Eigen::Matrix3d h;
    h(0, 0) = -pi2 * s.prod();
    h(1, 1) = h(0, 0);
    h(2, 2) = h(0, 0);
    h(0, 1) = h(1, 0) = pi2 * c[0] * c[1] * s[2];
    h(0, 2) = h(2, 0) = pi2 * c[0] * s[1] * c[2];
    h(1, 2) = h(2, 1) = pi2 * s[0] * c[1] * c[2];
    return h;
  };
  p.sigma = [=](const Point3& x) { return -9.0 * pi4 * value(x); };
  p.grad_sigma = [=](const Point3& x) { return Vector3(-9.0 * pi4 * gradient(x)); };
  p.f = [=](const Point3& x) { return 27.0 * pi4 * pi2 * value(x); };
  return p;
}

ProblemData make_problem(const std::string& name, int k) {
  if (name == "patch") return manufactured_patch(k);
  if (name == "trig") return manufactured_trig();
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace vem6
