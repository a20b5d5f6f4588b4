#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "vem6/assembly.hpp"

namespace vem6 {

struct SolverOptions {
  double tol = 1e-12;  ///< relative residual ||b - A x|| / ||b||
  int max_iter = 20000;
};

struct SolveReport {
  int iterations = 0;
  double relative_residual = 0.0;
  double seconds = 0.0;
  std::vector<double> residual_history;
};

/// Thrown when CG does not converge or produces a non-finite value.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  const std::vector<double>& residual_history() const { return history_; }

 private:
  std::vector<double> history_;
};

/// Jacobi-preconditioned conjugate gradients from a zero initial guess.
Eigen::VectorXd solve_spd(const SparseSPD& system, const SolverOptions& options, SolveReport* report = nullptr);

}  // namespace vem6
