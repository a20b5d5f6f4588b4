#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "vem6/c0_element.hpp"
#include "vem6/c1_element.hpp"

namespace vem6 {

using MatrixField = std::function<Eigen::Matrix3d(const Point3&)>;

/// Exact data of -Lap^3 u = f with sigma = -Lap^2 u.
struct ProblemData {
  std::string name;
  int k = 0;  ///< polynomial degree for the patch family, 0 otherwise
  ScalarField u;
  VectorField grad_u;
  MatrixField hess_u;
  ScalarField sigma;
  VectorField grad_sigma;
  ScalarField f;
};

/// u = (x + y + z)^k, 1 <= k <= 6.
ProblemData manufactured_patch(int k);

/// u = sin(pi x) sin(pi y) sin(pi z).
ProblemData manufactured_trig();

/// Lookup by name: "patch" (uses k) or "trig".
ProblemData make_problem(const std::string& name, int k = 1);

}  // namespace vem6
