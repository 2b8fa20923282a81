#pragma once

#include <Eigen/Dense>

#include <vector>

namespace twinbeam {

// Gauss-Hermite rule for the weight exp(-s^2). scaled_weights[k] = weights[k] * exp(s_k^2),
// evaluated without overflow so that int f(s) ds ~ sum scaled_weights[k] f(s_k) can be used
// directly for integrands that carry their own Gaussian envelope.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};
GaussHermiteRule gauss_hermite(int n);

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

// Normalized Hermite functions psi_k(u) = H_k(u) exp(-u^2/2) / sqrt(2^k k! sqrt(pi)),
// k = 0..count-1, by the three-term recurrence (no overflow for large k).
Eigen::VectorXd hermite_functions(double u, int count);

}  // namespace twinbeam
