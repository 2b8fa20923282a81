#include "twinbeam/quadrature.hpp"

#include "twinbeam/error.hpp"

#include <cmath>
#include <numbers>

namespace twinbeam {

Eigen::VectorXd hermite_functions(double u, int count) {
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(count);
  if (count <= 0) return psi;
  psi(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  if (count > 1) psi(1) = std::sqrt(2.0) * u * psi(0);
  for (int k = 1; k + 1 < count; ++k) {
    psi(k + 1) = std::sqrt(2.0 / (k + 1)) * u * psi(k) - std::sqrt(double(k) / (k + 1)) * psi(k - 1);
  }
  return psi;
}

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw PreconditionError("gauss_hermite: node count must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub = Eigen::VectorXd::Zero(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  if (n == 1) {
    return {{0.0}, {std::sqrt(std::numbers::pi)}, {std::sqrt(std::numbers::pi)}};
  }
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.scaled_weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double s = solver.eigenvalues()(k);
    // Newton polish on psi_n(s) = 0; psi_n' = sqrt(2n) psi_{n-1} - s psi_n.
    for (int it = 0; it < 3; ++it) {
      Eigen::VectorXd psi = hermite_functions(s, n + 1);
      double deriv = std::sqrt(2.0 * n) * psi(n - 1) - s * psi(n);
      if (deriv == 0.0) break;
      s -= psi(n) / deriv;
    }
    // Christoffel function: w e^{s^2} = 1 / sum_{j<n} psi_j(s)^2.
    Eigen::VectorXd psi = hermite_functions(s, n);
    double scaled = 1.0 / psi.squaredNorm();
    rule.nodes[k] = s;
    rule.scaled_weights[k] = scaled;
    rule.weights[k] = scaled * std::exp(-s * s);
  }
  return rule;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw PreconditionError("gauss_legendre: node count must be positive");
  if (n == 1) return {{0.0}, {2.0}};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = solver.eigenvalues()(k);
    double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = 2.0 * v0 * v0;
  }
  return rule;
}

}  // namespace twinbeam
