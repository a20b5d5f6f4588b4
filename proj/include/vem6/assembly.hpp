#pragma once

#include <span>

#include <Eigen/Sparse>

#include "vem6/c0_element.hpp"
#include "vem6/c1_element.hpp"
#include "vem6/dof_map.hpp"

namespace vem6 {

/// Reduced system over the free dofs of a DofMap.
struct SparseSPD {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
};

/// Global matrices over all dofs, summed cell by cell in cell order.
Eigen::SparseMatrix<double> assemble_c0_matrix(Index num_vertices, std::span<const C0LocalElement> elements);
Eigen::SparseMatrix<double> assemble_c1_matrix(Index num_vertices, std::span<const C1LocalElement> elements);

/// Eliminates the constraints of `map`: A_r = T^T A T, b_r = T^T (b - A g)
/// with T = map.basis() and g the lifting. A_r is symmetrised exactly.
SparseSPD reduce_system(const Eigen::SparseMatrix<double>& full_matrix, const Eigen::VectorXd& full_rhs,
                        const DofMap& map, const Eigen::VectorXd& lifting);

/// x_full = T x_free + lifting.
Eigen::VectorXd expand_solution(const DofMap& map, const Eigen::VectorXd& free, const Eigen::VectorXd& lifting);

/// Stiffness of the C^0 space with load vectors (one per element, local
/// order) reduced against the boundary lifting.
SparseSPD assemble_c0_system(const PolyMesh& mesh, std::span<const C0LocalElement> elements,
                             std::span<const Eigen::VectorXd> loads, const DofMap& map,
                             const Eigen::VectorXd& lifting);

/// Global right-hand side -sum_P C_P sigma|_P over all C^1 dofs.
Eigen::VectorXd assemble_coupling_rhs(Index num_vertices, std::span<const C0LocalElement> c0,
                                      std::span<const Eigen::MatrixXd> couplings, const Eigen::VectorXd& sigma);

/// C^1 system for u given sigma (full C^0 dof vector). `boundary_rhs` is an
/// optional full-length vector added to the right-hand side (natural terms).
SparseSPD assemble_c1_system(const PolyMesh& mesh, std::span<const C1LocalElement> elements,
                             std::span<const C0LocalElement> c0, std::span<const Eigen::MatrixXd> couplings,
                             const Eigen::VectorXd& sigma, const DofMap& map, const Eigen::VectorXd& lifting,
                             const Eigen::VectorXd& boundary_rhs = {});

}  // namespace vem6
