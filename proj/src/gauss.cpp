#include "vem6/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace vem6 {

namespace {

// Golub-Welsch for the Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1],
// then mapped to [0, 1] for the weight (1-t)^alpha (beta = 0 only).
GaussRule1D golub_welsch(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one point");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (int i = 0; i < n; ++i) {
    const double k = i;
    double diag;
    if (i == 0)
      diag = (beta - alpha) / (ab + 2.0);
    else
      diag = (beta * beta - alpha * alpha) / ((2 * k + ab) * (2 * k + ab + 2));
    jacobi(i, i) = diag;
    if (i + 1 < n) {
      const double m = k + 1;
      const double num = 4 * m * (m + alpha) * (m + beta) * (m + ab);
      const double den = (2 * m + ab) * (2 * m + ab) * (2 * m + ab + 1) * (2 * m + ab - 1);
      const double off = std::sqrt(num / den);
      jacobi(i, i + 1) = off;
      jacobi(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  const double mu0 = std::pow(2.0, ab + 1) * std::tgamma(alpha + 1) * std::tgamma(beta + 1) /
                     std::tgamma(ab + 2);
  GaussRule1D rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  const double scale = std::pow(2.0, alpha + beta + 1);
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.points[i] = 0.5 * (eig.eigenvalues()(i) + 1.0);
    rule.weights[i] = mu0 * v0 * v0 / scale;
  }
  return rule;
}

const GaussRule1D& cached(int n, int alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GaussRule1D> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, alpha);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, golub_welsch(n, alpha, 0.0)).first;
  return it->second;
}

}  // namespace

const GaussRule1D& gauss_legendre(int n) { return cached(n, 0); }

const GaussRule1D& gauss_jacobi(int n, int alpha) { return cached(n, alpha); }

}  // namespace vem6
