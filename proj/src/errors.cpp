#include "vem6/errors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "vem6/parallel.hpp"
#include "vem6/quadrature.hpp"

namespace vem6 {

namespace {

// Squared error and exact-norm contributions of one cell, in ErrorReport order.
using CellSums = std::array<double, 10>;

template <class Element>
Eigen::VectorXd gather(const Element& el, const Eigen::VectorXd& full, int components) {
  Eigen::VectorXd local(static_cast<Eigen::Index>(el.vertices.size()) * components);
  for (std::size_t i = 0; i < el.vertices.size(); ++i)
    for (int c = 0; c < components; ++c)
      local[static_cast<Eigen::Index>(i) * components + c] = full[el.vertices[i] * components + c];
  return local;
}

}  // namespace

ErrorReport compute_errors(const PolyMesh& mesh, std::span<const C0LocalElement> c0,
                           std::span<const C1LocalElement> c1, const Eigen::VectorXd& sigma,
                           const Eigen::VectorXd& u, const ProblemData& exact, int order) {
  if (c0.size() != static_cast<std::size_t>(mesh.num_cells()) || c1.size() != c0.size())
    throw std::invalid_argument("compute_errors: one element per cell required");
  if (sigma.size() != mesh.num_vertices() || u.size() != mesh.num_vertices() * kC1DofsPerVertex)
    throw std::invalid_argument("compute_errors: dof vector size mismatch");

  std::vector<CellSums> sums(c0.size());
  parallel_for(c0.size(), [&](std::size_t c) {
    const C0LocalElement& e0 = c0[c];
    const C1LocalElement& e1 = c1[c];
    const Eigen::VectorXd s_coef = e0.projector * gather(e0, sigma, 1);
    const Eigen::VectorXd u_coef = e1.projector * gather(e1, u, kC1DofsPerVertex);
    Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
    for (Eigen::Index a = 0; a < u_coef.size(); ++a) hess += u_coef[a] * e1.basis.hessian(static_cast<int>(a));
    const Vector3 s_grad = e0.basis.gradients(mesh.cell(e0.cell).centroid).transpose() * s_coef;

    CellSums acc{};
    const QuadRule rule = quadrature_cell(mesh, e0.cell, order);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Point3& x = rule.points[q];
      const double w = rule.weights[q];
      const Eigen::Matrix3d h_ex = exact.hess_u(x);
      const Vector3 g_ex = exact.grad_u(x);
      const double u_ex = exact.u(x);
      const Vector3 gs_ex = exact.grad_sigma(x);
      const double s_ex = exact.sigma(x);
      const Vector3 g_h = e1.basis.gradients(x).transpose() * u_coef;
      const double u_h = e1.basis.values(x).dot(u_coef);
      const double s_h = e0.basis.values(x).dot(s_coef);
      acc[0] += w * (hess - h_ex).squaredNorm();
      acc[1] += w * (g_h - g_ex).squaredNorm();
      acc[2] += w * (u_h - u_ex) * (u_h - u_ex);
      acc[3] += w * (s_grad - gs_ex).squaredNorm();
      acc[4] += w * (s_h - s_ex) * (s_h - s_ex);
      acc[5] += w * h_ex.squaredNorm();
      acc[6] += w * g_ex.squaredNorm();
      acc[7] += w * u_ex * u_ex;
      acc[8] += w * gs_ex.squaredNorm();
      acc[9] += w * s_ex * s_ex;
    }
    sums[c] = acc;
  });

  CellSums total{};
  for (const CellSums& s : sums)
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += s[i];
  auto root = [&](std::size_t i) { return std::sqrt(std::max(0.0, total[i])); };

  ErrorReport r;
  r.h = mesh_size(mesh);
  r.ndof_sigma = mesh.num_vertices();
  r.ndof_u = mesh.num_vertices() * kC1DofsPerVertex;
  r.errH2_u = root(0);
  r.errH1_u = root(1);
  r.errL2_u = root(2);
  r.errH1_sigma = root(3);
  r.errL2_sigma = root(4);
  r.normH2_u = root(5);
  r.normH1_u = root(6);
  r.normL2_u = root(7);
  r.normH1_sigma = root(8);
  r.normL2_sigma = root(9);
  return r;
}

ErrorReport compute_errors(const PolyMesh& mesh, const SixthOrderSolution& solution, const ProblemData& exact,
                           int order) {
  return compute_errors(mesh, solution.c0, solution.c1, solution.sigma, solution.u, exact, order);
}

}  // namespace vem6
