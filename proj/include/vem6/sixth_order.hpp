#pragma once

#include <vector>

#include <Eigen/Dense>

#include "vem6/assembly.hpp"
#include "vem6/dof_map.hpp"
#include "vem6/problems.hpp"
#include "vem6/solver.hpp"

namespace vem6 {

struct SolveConfig {
  SolverOptions solver;
  int load_order = 6;      ///< quadrature order for the load
  int boundary_order = 6;  ///< quadrature order for boundary terms
};

/// Both discrete fields as full dof vectors (C^0: one per vertex; C^1: four
/// per vertex), with the local elements they were computed with.
struct SixthOrderSolution {
  std::vector<C0LocalElement> c0;
  std::vector<C1LocalElement> c1;
  std::vector<Eigen::MatrixXd> coupling;
  DofMap sigma_map;
  DofMap u_map;
  Eigen::VectorXd sigma;
  Eigen::VectorXd u;
  SolveReport sigma_report;
  SolveReport u_report;
};

std::vector<C0LocalElement> build_c0_elements(const PolyMesh& mesh);
std::vector<C1LocalElement> build_c1_elements(const PolyMesh& mesh);

/// Full C^1-length vector of sum_f int_f g (d psi / d n) over boundary faces,
/// with g = n . hess(x) n and n the outward unit normal.
Eigen::VectorXd natural_boundary_rhs(const PolyMesh& mesh, const MatrixField& hess, int order);

/// Solves for sigma_h (C^0 space), then for u_h (C^1 space) driven by sigma_h.
/// Boundary values of sigma and u (and the constrained parts of grad u) are
/// taken from the exact data.
SixthOrderSolution solve_sixth_order(const PolyMesh& mesh, const ProblemData& problem, const SolveConfig& config = {});

}  // namespace vem6
