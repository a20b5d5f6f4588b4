#pragma once

#include <vector>

namespace vem6 {

/// One-dimensional rule on [0, 1].
struct GaussRule1D {
  std::vector<double> points;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; exact to degree 2n-1.
/// Rules are cached, so repeated calls are cheap.
const GaussRule1D& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [0, 1] for the weight (1-t)^alpha,
/// exact to degree 2n-1 against that weight. Used to collapse simplices.
const GaussRule1D& gauss_jacobi(int n, int alpha);

}  // namespace vem6
