#include "vem6/solver.hpp"

#include <chrono>
#include <cmath>

namespace vem6 {

Eigen::VectorXd solve_spd(const SparseSPD& system, const SolverOptions& options, SolveReport* report) {
  const auto start = std::chrono::steady_clock::now();
  const Eigen::SparseMatrix<double>& a = system.matrix;
  const Eigen::VectorXd& b = system.rhs;
  const Eigen::Index n = b.size();
  SolveReport local;
  SolveReport& rep = report ? *report : local;
  rep = SolveReport{};
  auto finish = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  const double bnorm = b.norm();
  if (!std::isfinite(bnorm)) throw SolverError("right-hand side is not finite", {});
  if (n == 0 || bnorm == 0.0) {
    rep.residual_history.push_back(0.0);
    finish();
    return x;
  }

  Eigen::VectorXd inv_diag(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = a.coeff(i, i);
    if (!(d > 0.0)) throw SolverError("non-positive diagonal entry " + std::to_string(i), {});
    inv_diag[i] = 1.0 / d;
  }

  Eigen::VectorXd r = b;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  rep.residual_history.push_back(1.0);
  for (int it = 1; it <= options.max_iter; ++it) {
    const Eigen::VectorXd ap = a * p;
    const double pap = p.dot(ap);
    if (!std::isfinite(pap) || pap <= 0.0)
      throw SolverError("conjugate gradients broke down at iteration " + std::to_string(it), rep.residual_history);
    const double alpha = rz / pap;
    x += alpha * p;
    r -= alpha * ap;
    const double rel = r.norm() / bnorm;
    rep.residual_history.push_back(rel);
    rep.iterations = it;
    rep.relative_residual = rel;
    if (!std::isfinite(rel)) throw SolverError("NaN in conjugate gradients at iteration " + std::to_string(it), rep.residual_history);
    if (rel <= options.tol) {
      finish();
      return x;
    }
    z = inv_diag.cwiseProduct(r);
    const double rz_new = r.dot(z);
    p = z + (rz_new / rz) * p;
    rz = rz_new;
  }
  finish();
  throw SolverError("conjugate gradients did not converge in " + std::to_string(options.max_iter) +
                        " iterations (relative residual " + std::to_string(rep.relative_residual) + ")",
                    rep.residual_history);
}

}  // namespace vem6
