#include "vem6/dof_map.hpp"

#include <cmath>

namespace vem6 {

DofMap DofMap::c0(const PolyMesh& mesh) {
  DofMap map;
  map.components_ = 1;
  map.num_full_ = mesh.num_vertices();
  map.boundary_.resize(static_cast<std::size_t>(mesh.num_vertices()));
  map.free_direction_.resize(static_cast<std::size_t>(mesh.num_vertices()));
  std::vector<Eigen::Triplet<double>> t;
  Index col = 0;
  for (Index v = 0; v < mesh.num_vertices(); ++v) {
    map.boundary_[static_cast<std::size_t>(v)] = mesh.is_boundary_vertex(v);
    if (!mesh.is_boundary_vertex(v)) t.emplace_back(v, col++, 1.0);
  }
  map.basis_.resize(map.num_full_, col);
  map.basis_.setFromTriplets(t.begin(), t.end());
  return map;
}

DofMap DofMap::c1(const PolyMesh& mesh) {
  DofMap map;
  map.components_ = kC1DofsPerVertex;
  map.num_full_ = mesh.num_vertices() * kC1DofsPerVertex;
  map.boundary_.resize(static_cast<std::size_t>(mesh.num_vertices()));
  map.free_direction_.resize(static_cast<std::size_t>(mesh.num_vertices()));
  std::vector<Eigen::Triplet<double>> t;
  Index col = 0;
  for (Index v = 0; v < mesh.num_vertices(); ++v) {
    const Index base = v * kC1DofsPerVertex;
    if (!mesh.is_boundary_vertex(v)) {
      for (int c = 0; c < kC1DofsPerVertex; ++c) t.emplace_back(base + c, col++, 1.0);
      continue;
    }
    map.boundary_[static_cast<std::size_t>(v)] = true;
    const auto faces = mesh.boundary_faces_of_vertex(v);
    Vector3 n = mesh.face(faces[0]).normal;
    bool coplanar = true;
    for (Index f : faces)
      if (std::abs(std::abs(mesh.face(f).normal.dot(n)) - 1.0) > 1e-10) coplanar = false;
    if (!coplanar) continue;
    // Orient outward: a boundary face's only cell sees it with sign s.
    const Face& face = mesh.face(faces[0]);
    for (const CellFace& cf : mesh.cell(face.cells[0]).faces)
      if (cf.face == faces[0]) n *= cf.sign;
    map.free_direction_[static_cast<std::size_t>(v)] = n;
    for (int d = 0; d < 3; ++d)
      if (n[d] != 0.0) t.emplace_back(base + 1 + d, col, n[d]);
    ++col;
  }
  map.basis_.resize(map.num_full_, col);
  map.basis_.setFromTriplets(t.begin(), t.end());
  return map;
}

Eigen::VectorXd DofMap::lifting(const PolyMesh& mesh, const ScalarField& value, const VectorField& gradient) const {
  Eigen::VectorXd lift = Eigen::VectorXd::Zero(num_full_);
  for (Index v = 0; v < mesh.num_vertices(); ++v) {
    if (!boundary_[static_cast<std::size_t>(v)]) continue;
    const Point3& x = mesh.vertex(v);
    const Index base = v * components_;
    lift[base] = value ? value(x) : 0.0;
    if (components_ == 1) continue;
    Vector3 g = gradient ? gradient(x) : Vector3::Zero();
    if (const auto& n = free_direction_[static_cast<std::size_t>(v)]) g -= g.dot(*n) * *n;
    lift.segment(base + 1, 3) = g;
  }
  return lift;
}

std::vector<Index> global_dofs(const C0LocalElement& element) { return element.vertices; }

std::vector<Index> global_dofs(const C1LocalElement& element) {
  std::vector<Index> dofs;
  dofs.reserve(element.vertices.size() * kC1DofsPerVertex);
  for (Index v : element.vertices)
    for (int c = 0; c < kC1DofsPerVertex; ++c) dofs.push_back(v * kC1DofsPerVertex + c);
  return dofs;
}

}  // namespace vem6
