#include "twinbeam/povm.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twinbeam {

namespace {

void require_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw PreconditionError("efficiency eta must lie in (0, 1]");
}

// Real d x d matrix sum_k w_k G(t_k - x) phi(t_k) phi(t_k)^T for the Gaussian-smeared
// homodyne element, by Gauss-Hermite nodes adapted to the combined Gaussian envelope.
Eigen::MatrixXd smeared_homodyne(double x, double var, int dim, int nodes) {
  // phi_n phi_m G ~ exp(-2t^2 - (t - x)^2 / (2 var)) poly(t): centre t0, width 1/sqrt(a).
  const double a = 2.0 + 0.5 / var;
  const double t0 = x * 0.5 / var / a;
  const double scale = 1.0 / std::sqrt(a);
  GaussHermiteRule rule = gauss_hermite(nodes);
  Eigen::MatrixXd phi(dim, nodes);
  for (int k = 0; k < nodes; ++k) {
    double t = t0 + scale * rule.nodes[k];
    double g = std::exp(-0.5 * (t - x) * (t - x) / var) / std::sqrt(2.0 * std::numbers::pi * var);
    double w = rule.scaled_weights[k] * scale * g;
    phi.col(k) = std::sqrt(w) * std::pow(2.0, 0.25) * hermite_functions(std::sqrt(2.0) * t, dim);
  }
  return phi * phi.transpose();
}

Eigen::MatrixXd homodyne_matrix(double x, double eta, int dim) {
  if (eta == 1.0) {
    Eigen::VectorXd phi = homodyne_wavefunction(x, dim).real();
    return phi * phi.transpose();
  }
  const double var = homodyne_noise_variance(eta);
  // Exact once nodes >= dim; the second evaluation guards against round-off at large x.
  Eigen::MatrixXd lo = smeared_homodyne(x, var, dim, dim + 2);
  Eigen::MatrixXd hi = smeared_homodyne(x, var, dim, dim + 18);
  if ((lo - hi).cwiseAbs().maxCoeff() > 1e-10) {
    throw ConvergenceError("homodyne POVM quadrature did not settle");
  }
  return hi;
}

}  // namespace

OnOffPovm onoff_povm(double eta, const TruncationConfig& trunc) {
  require_eta(eta);
  Eigen::VectorXd p0(trunc.dim);
  for (int k = 0; k < trunc.dim; ++k) p0(k) = std::pow(1.0 - eta, k);
  FockOperator pi0 = FockOperator::diagonal(p0);
  FockOperator pi1 = FockOperator::identity(trunc.dim) - pi0;
  PovmMeta meta{eta, 0.0};
  return {PovmElement{pi0, PovmKind::NoClick, 0, meta},
          PovmElement{pi1, PovmKind::Click, 1, meta}};
}

Vector homodyne_wavefunction(double x, int dim) {
  if (!std::isfinite(x)) throw PreconditionError("homodyne outcome must be finite");
  return (std::pow(2.0, 0.25) * hermite_functions(std::sqrt(2.0) * x, dim)).cast<cplx>();
}

PovmElement homodyne_projector(double x, const TruncationConfig& trunc) {
  return PovmElement{FockOperator::projector(homodyne_wavefunction(x, trunc.dim)),
                     PovmKind::Homodyne, x, PovmMeta{1.0, 0.0}};
}

double homodyne_noise_variance(double eta) {
  require_eta(eta);
  return (1.0 - eta) / (4.0 * eta);
}

PovmElement homodyne_povm(double x, double eta, const TruncationConfig& trunc) {
  require_eta(eta);
  if (!std::isfinite(x)) throw PreconditionError("homodyne outcome must be finite");
  return PovmElement{FockOperator(homodyne_matrix(x, eta, trunc.dim).cast<cplx>()),
                     PovmKind::Homodyne, x, PovmMeta{eta, 0.0}};
}

PovmElement binned_homodyne_povm(double x, double eta, double delta,
                                 const TruncationConfig& trunc) {
  require_eta(eta);
  if (!(delta > 0.0) || !std::isfinite(delta)) throw PreconditionError("bin width must be positive");
  if (!std::isfinite(x)) throw PreconditionError("homodyne outcome must be finite");
  auto average = [&](int n) {
    GaussLegendreRule rule = gauss_legendre(n);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(trunc.dim, trunc.dim);
    for (int k = 0; k < n; ++k) {
      acc += 0.5 * rule.weights[k] * homodyne_matrix(x + 0.5 * delta * rule.nodes[k], eta, trunc.dim);
    }
    return acc;
  };
  Eigen::MatrixXd prev = average(8);
  for (int n = 16; n <= 64; n *= 2) {
    Eigen::MatrixXd next = average(n);
    if ((next - prev).cwiseAbs().maxCoeff() < 1e-10) {
      return PovmElement{FockOperator(next.cast<cplx>()), PovmKind::BinnedHomodyne, x,
                         PovmMeta{eta, delta}};
    }
    prev = std::move(next);
  }
  throw ConvergenceError("binned homodyne POVM quadrature did not converge");
}

double heterodyne_noise(double eta) {
  require_eta(eta);
  return (1.0 - eta) / eta;
}

HeterodyneFamily::HeterodyneFamily(const FockOperator& reference, double eta,
                                   const TruncationConfig& trunc)
    : smeared_(reference.transpose()), eta_(eta), trunc_(trunc) {
  require_eta(eta);
  require_state(reference, trunc.tail_tolerance);
  double noise = heterodyne_noise(eta);
  if (noise > 0.0) {
    // A thermal state of the same mean has the heavier photon-number tail.
    double photons = mean_photon_number(reference);
    int dim = std::max(reference.dim(),
                       TruncationConfig::for_thermal(photons + noise, 1e-2 * trunc.tail_tolerance).dim);
    smeared_ = additive_noise_channel(smeared_, noise, TruncationConfig(dim, trunc.tail_tolerance));
  }
}

PovmElement HeterodyneFamily::element(cplx alpha) const {
  if (!std::isfinite(std::abs(alpha))) throw PreconditionError("heterodyne outcome must be finite");
  Matrix d = displacement_block(alpha, trunc_.dim, smeared_.dim());
  Matrix op = d * smeared_.matrix() * d.adjoint() / std::numbers::pi;
  return PovmElement{FockOperator(std::move(op)), PovmKind::Heterodyne, alpha,
                     PovmMeta{eta_, 0.0}};
}

PovmElement heterodyne_povm(cplx alpha, const FockOperator& reference, double eta,
                            const TruncationConfig& trunc) {
  return HeterodyneFamily(reference, eta, trunc).element(alpha);
}

}  // namespace twinbeam
