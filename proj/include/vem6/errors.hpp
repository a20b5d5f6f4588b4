#pragma once

#include <span>

#include <Eigen/Dense>

#include "vem6/c0_element.hpp"
#include "vem6/c1_element.hpp"
#include "vem6/problems.hpp"
#include "vem6/sixth_order.hpp"

namespace vem6 {

/// Broken error norms of the projected discrete fields, plus the matching
/// norms of the exact fields for relative comparisons.
struct ErrorReport {
  double h = 0.0;
  Index ndof_sigma = 0;
  Index ndof_u = 0;
  double errH2_u = 0.0;     ///< |hess(Pi u_h) - hess u|
  double errH1_u = 0.0;     ///< |grad(Pi u_h) - grad u|
  double errL2_u = 0.0;     ///< ||Pi u_h - u||
  double errH1_sigma = 0.0; ///< |grad(Pi sigma_h) - grad sigma|
  double errL2_sigma = 0.0; ///< ||Pi sigma_h - sigma||
  double normH2_u = 0.0;
  double normH1_u = 0.0;
  double normL2_u = 0.0;
  double normH1_sigma = 0.0;
  double normL2_sigma = 0.0;
};

/// Errors from full dof vectors (sigma: one per vertex, u: four per vertex).
ErrorReport compute_errors(const PolyMesh& mesh, std::span<const C0LocalElement> c0,
                           std::span<const C1LocalElement> c1, const Eigen::VectorXd& sigma,
                           const Eigen::VectorXd& u, const ProblemData& exact, int order = 6);

ErrorReport compute_errors(const PolyMesh& mesh, const SixthOrderSolution& solution, const ProblemData& exact,
                           int order = 6);

}  // namespace vem6
