#include "vem6/assembly.hpp"

#include <stdexcept>
#include <vector>

namespace vem6 {

namespace {

template <class Element>
Eigen::SparseMatrix<double> assemble_matrix(Index size, std::span<const Element> elements) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (const Element& el : elements) {
    const std::vector<Index> dofs = global_dofs(el);
    for (std::size_t i = 0; i < dofs.size(); ++i)
      for (std::size_t j = 0; j < dofs.size(); ++j) {
        if (dofs[i] >= size || dofs[j] >= size) throw std::logic_error("dof index outside global range");
        triplets.emplace_back(dofs[i], dofs[j],
                              el.stiffness(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
  }
  Eigen::SparseMatrix<double> a(size, size);
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

}  // namespace

Eigen::SparseMatrix<double> assemble_c0_matrix(Index num_vertices, std::span<const C0LocalElement> elements) {
  return assemble_matrix(num_vertices, elements);
}

Eigen::SparseMatrix<double> assemble_c1_matrix(Index num_vertices, std::span<const C1LocalElement> elements) {
  return assemble_matrix(num_vertices * kC1DofsPerVertex, elements);
}

SparseSPD reduce_system(const Eigen::SparseMatrix<double>& full_matrix, const Eigen::VectorXd& full_rhs,
                        const DofMap& map, const Eigen::VectorXd& lifting) {
  if (full_matrix.rows() != map.num_full() || full_rhs.size() != map.num_full() || lifting.size() != map.num_full())
    throw std::logic_error("system size does not match the dof map");
  const Eigen::SparseMatrix<double>& t = map.basis();
  SparseSPD sys;
  const Eigen::SparseMatrix<double> tt = t.transpose();
  Eigen::SparseMatrix<double> reduced = tt * full_matrix * t;
  Eigen::SparseMatrix<double> mirrored = reduced.transpose();
  sys.matrix = 0.5 * (reduced + mirrored);
  sys.matrix.makeCompressed();
  sys.rhs = tt * (full_rhs - full_matrix * lifting);
  return sys;
}

Eigen::VectorXd expand_solution(const DofMap& map, const Eigen::VectorXd& free, const Eigen::VectorXd& lifting) {
  return map.basis() * free + lifting;
}

SparseSPD assemble_c0_system(const PolyMesh& mesh, std::span<const C0LocalElement> elements,
                             std::span<const Eigen::VectorXd> loads, const DofMap& map,
                             const Eigen::VectorXd& lifting) {
  if (loads.size() != elements.size()) throw std::logic_error("one load vector per element required");
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(mesh.num_vertices());
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (std::size_t i = 0; i < elements[e].vertices.size(); ++i)
      rhs[elements[e].vertices[i]] += loads[e][static_cast<Eigen::Index>(i)];
  return reduce_system(assemble_c0_matrix(mesh.num_vertices(), elements), rhs, map, lifting);
}

Eigen::VectorXd assemble_coupling_rhs(Index num_vertices, std::span<const C0LocalElement> c0,
                                      std::span<const Eigen::MatrixXd> couplings, const Eigen::VectorXd& sigma) {
  if (couplings.size() != c0.size()) throw std::logic_error("one coupling block per element required");
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(num_vertices * kC1DofsPerVertex);
  for (std::size_t e = 0; e < c0.size(); ++e) {
    const auto& verts = c0[e].vertices;
    Eigen::VectorXd local(static_cast<Eigen::Index>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<Eigen::Index>(i)] = sigma[verts[i]];
    const Eigen::VectorXd contrib = couplings[e] * local;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (int c = 0; c < kC1DofsPerVertex; ++c)
        rhs[verts[i] * kC1DofsPerVertex + c] -= contrib[static_cast<Eigen::Index>(i) * kC1DofsPerVertex + c];
  }
  return rhs;
}

SparseSPD assemble_c1_system(const PolyMesh& mesh, std::span<const C1LocalElement> elements,
                             std::span<const C0LocalElement> c0, std::span<const Eigen::MatrixXd> couplings,
                             const Eigen::VectorXd& sigma, const DofMap& map, const Eigen::VectorXd& lifting,
                             const Eigen::VectorXd& boundary_rhs) {
  Eigen::VectorXd rhs = assemble_coupling_rhs(mesh.num_vertices(), c0, couplings, sigma);
  if (boundary_rhs.size() == rhs.size()) rhs += boundary_rhs;
  else if (boundary_rhs.size() != 0) throw std::logic_error("boundary right-hand side has wrong size");
  return reduce_system(assemble_c1_matrix(mesh.num_vertices(), elements), rhs, map, lifting);
}

}  // namespace vem6
