#pragma once

#include <string>

#include <Eigen/Dense>

#include "vem6/common.hpp"

namespace vem6 {

/// Solves the square projector system A X = B with a rank-revealing QR.
/// A rank-deficient A is a geometry error, never silently regularised.
inline Eigen::MatrixXd solve_projector_system(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                              const std::string& what) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-12);
  if (qr.rank() < A.cols()) throw GeometryError(what + ": singular projector system");
  return qr.solve(B);
}

}  // namespace vem6
