#pragma once

#include <optional>
#include <vector>

#include <Eigen/Sparse>

#include "vem6/c0_element.hpp"
#include "vem6/c1_element.hpp"
#include "vem6/mesh.hpp"

namespace vem6 {

/// Global numbering of a vertex-based space plus its essential constraints.
/// Global dof of (vertex v, component c) is v * components + c. Free dofs
/// span the columns of `basis()`, so a full vector reads
///   x_full = basis() * x_free + lifting,
/// where the lifting carries the prescribed (constrained) values.
class DofMap {
 public:
  /// C^0 space: one value per vertex; every boundary vertex is constrained.
  static DofMap c0(const PolyMesh& mesh);

  /// C^1 space: value + gradient per vertex. At a boundary vertex the value
  /// and the gradient components tangential to each adjacent boundary face
  /// are constrained; if the adjacent boundary faces are coplanar the normal
  /// derivative stays free, otherwise the whole gradient is constrained.
  static DofMap c1(const PolyMesh& mesh);

  int components() const { return components_; }
  Index num_full() const { return num_full_; }
  Index num_free() const { return basis_.cols(); }
  const Eigen::SparseMatrix<double>& basis() const { return basis_; }

  /// Free gradient direction at a C^1 boundary vertex (unit outward normal),
  /// or nothing if the gradient is fully constrained or the vertex is interior.
  const std::optional<Vector3>& free_direction(Index v) const { return free_direction_[static_cast<std::size_t>(v)]; }
  bool is_boundary(Index v) const { return boundary_[static_cast<std::size_t>(v)]; }

  /// Full vector holding the constrained part of the given data and zeros
  /// elsewhere (C^0: values only; C^1: value and gradient).
  Eigen::VectorXd lifting(const PolyMesh& mesh, const ScalarField& value, const VectorField& gradient = {}) const;

 private:
  int components_ = 1;
  Index num_full_ = 0;
  Eigen::SparseMatrix<double> basis_;
  std::vector<bool> boundary_;
  std::vector<std::optional<Vector3>> free_direction_;
};

/// Global dof indices of an element's local dofs.
std::vector<Index> global_dofs(const C0LocalElement& element);
std::vector<Index> global_dofs(const C1LocalElement& element);

}  // namespace vem6
