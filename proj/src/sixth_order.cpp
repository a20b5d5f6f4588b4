#include "vem6/sixth_order.hpp"

#include "vem6/parallel.hpp"

namespace vem6 {

std::vector<C0LocalElement> build_c0_elements(const PolyMesh& mesh) {
  std::vector<C0LocalElement> out(static_cast<std::size_t>(mesh.num_cells()));
  parallel_for(out.size(), [&](std::size_t c) { out[c] = c0_local_element(mesh, static_cast<Index>(c)); });
  return out;
}

std::vector<C1LocalElement> build_c1_elements(const PolyMesh& mesh) {
  std::vector<C1LocalElement> out(static_cast<std::size_t>(mesh.num_cells()));
  parallel_for(out.size(), [&](std::size_t c) { out[c] = c1_local_element(mesh, static_cast<Index>(c)); });
  return out;
}

Eigen::VectorXd natural_boundary_rhs(const PolyMesh& mesh, const MatrixField& hess, int order) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(mesh.num_vertices() * kC1DofsPerVertex);
  for (Index fi = 0; fi < mesh.num_faces(); ++fi) {
    const Face& face = mesh.face(fi);
    if (!face.boundary) continue;
    int sign = 1;
    for (const CellFace& cf : mesh.cell(face.cells[0]).faces)
      if (cf.face == fi) sign = cf.sign;
    const Vector3 n = face.normal;
    const ScalarField g = [&](const Point3& x) { return n.dot(hess(x) * n); };
    const Eigen::RowVectorXd row = c1_normal_flux_functional(mesh, c1_face_nabla_projector(mesh, fi), sign, g, order);
    for (std::size_t j = 0; j < face.vertices.size(); ++j)
      for (int c = 0; c < kC1DofsPerVertex; ++c)
        rhs[face.vertices[j] * kC1DofsPerVertex + c] += row[static_cast<Eigen::Index>(j) * kC1DofsPerVertex + c];
  }
  return rhs;
}

SixthOrderSolution solve_sixth_order(const PolyMesh& mesh, const ProblemData& problem, const SolveConfig& config) {
  SixthOrderSolution sol;
  sol.c0 = build_c0_elements(mesh);
  sol.c1 = build_c1_elements(mesh);
  sol.coupling.resize(sol.c0.size());
  std::vector<Eigen::VectorXd> loads(sol.c0.size());
  parallel_for(sol.c0.size(), [&](std::size_t c) {
    sol.coupling[c] = c1_coupling_matrix(mesh, sol.c0[c], sol.c1[c]);
    loads[c] = c0_local_load(mesh, sol.c0[c], problem.f, config.load_order);
  });

  sol.sigma_map = DofMap::c0(mesh);
  const Eigen::VectorXd sigma_lift = sol.sigma_map.lifting(mesh, problem.sigma);
  const SparseSPD sigma_sys = assemble_c0_system(mesh, sol.c0, loads, sol.sigma_map, sigma_lift);
  sol.sigma = expand_solution(sol.sigma_map, solve_spd(sigma_sys, config.solver, &sol.sigma_report), sigma_lift);

  sol.u_map = DofMap::c1(mesh);
  const Eigen::VectorXd u_lift = sol.u_map.lifting(mesh, problem.u, problem.grad_u);
  const Eigen::VectorXd natural = natural_boundary_rhs(mesh, problem.hess_u, config.boundary_order);
  const SparseSPD u_sys = assemble_c1_system(mesh, sol.c1, sol.c0, sol.coupling, sol.sigma, sol.u_map, u_lift, natural);
  sol.u = expand_solution(sol.u_map, solve_spd(u_sys, config.solver, &sol.u_report), u_lift);
  return sol;
}

}  // namespace vem6
