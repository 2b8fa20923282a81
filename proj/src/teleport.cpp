#include "twinbeam/teleport.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twinbeam {

void ChannelParams::validate() const {
  if (!(photons >= 0.0) || !std::isfinite(photons)) throw PreconditionError("N must be non-negative");
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t)) {
    throw PreconditionError("gamma_t must be non-negative");
  }
  if (!(thermal >= 0.0) || !std::isfinite(thermal)) throw PreconditionError("M must be non-negative");
  if (!(eta > 0.0 && eta <= 1.0)) throw PreconditionError("efficiency eta must lie in (0, 1]");
}

double k0(double photons) {
  if (!(photons >= 0.0)) throw PreconditionError("N must be non-negative");
  // 1 + N - sqrt(N(N+2)) = 1 / (1 + N + sqrt(N(N+2)))
  return 1.0 / (1.0 + photons + std::sqrt(photons * (photons + 2.0)));
}

double effective_K(const ChannelParams& p) {
  p.validate();
  const double grow = std::expm1(p.gamma_t);
  return k0(p.photons) * (1.0 + grow) + (2.0 * p.thermal + 1.0) * grow + (1.0 - p.eta) / p.eta;
}

EvolvedTwb evolve_twb_loss(const ChannelParams& p) {
  p.validate();
  auto twb = TwinBeamParams::from_photons(p.photons);
  // gamma tau = Gamma t with gamma = 1/(2M+1)
  const double d2 = 0.25 * (2.0 * p.thermal + 1.0) * -std::expm1(-p.gamma_t);
  const double e = std::exp(p.gamma_t);
  return {e * (twb.sigma_plus_sq() + d2), e * (twb.sigma_minus_sq() + d2)};
}

FockOperator teleport_state(const FockOperator& input, double noise, const TruncationConfig& trunc) {
  return additive_noise_channel(input, noise, trunc);
}

GaussianSpec teleport_gaussian(const GaussianSpec& input, double noise) {
  if (!(noise >= 0.0)) throw PreconditionError("channel noise K must be non-negative");
  return GaussianSpec{input.mean, input.var_x + 0.5 * noise, input.var_y + 0.5 * noise};
}

FockOperator teleport_via_conditioning(const FockOperator& input, const ChannelParams& params,
                                       const TruncationConfig& trunc) {
  params.validate();
  require_state(input, trunc.tail_tolerance);
  const double d_eta = (1.0 - params.eta) / params.eta;
  const double k_loss = std::max(0.0, effective_K(params) - k0(params.photons) - d_eta);
  const double smear = d_eta + 0.5 * k_loss;

  // Reference seen through the noisy measurement, untransposed.
  FockOperator ref = input;
  const double photons_in = mean_photon_number(input);
  if (smear > 0.0) {
    int dim = std::max(input.dim(),
                       TruncationConfig::for_thermal(photons_in + smear, 1e-2 * trunc.tail_tolerance).dim);
    ref = additive_noise_channel(input, smear, TruncationConfig(dim, trunc.tail_tolerance));
  }
  const int d_ref = ref.dim();
  const int d_out = trunc.dim;

  auto twb = TwinBeamParams::from_photons(params.photons);
  const double lambda = twb.lambda();
  const int j_lambda =
      lambda > 0.0 ? std::max(1, static_cast<int>(std::ceil(std::log(1e-13) / std::log(lambda)))) : 1;
  Eigen::VectorXd schmidt(j_lambda);
  for (int j = 0; j < j_lambda; ++j) schmidt(j) = std::pow(lambda, j);
  const double prefactor = (1.0 - twb.lambda_sq()) / std::numbers::pi;

  // Outcome density ~ exp(-|alpha|^2 / s).
  const double s = 0.5 * params.photons + 1.0 + photons_in + smear;
  const double c = 1.0 / s;
  const double scale = 1.0 / std::sqrt(c);

  auto integrate = [&](int n) {
    GaussHermiteRule rule = gauss_hermite(n);
    Matrix acc = Matrix::Zero(d_out, d_out);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (rule.weights[i] * rule.weights[k] < 1e-25) continue;
        const cplx alpha(scale * rule.nodes[i], scale * rule.nodes[k]);
        const cplx ab = std::conj(alpha);
        const double reach = std::sqrt(double(d_ref)) + std::abs(alpha) + 6.0;
        const int j = std::min(j_lambda, static_cast<int>(std::ceil(reach * reach)));
        // Conditional state of mode a times its probability, then D(-conj(alpha)) feedback:
        // T = D(-conj a) Lambda D(conj a).
        Matrix t = displacement_block(-ab, d_out, j) * schmidt.head(j).asDiagonal() *
                   displacement_block(ab, j, d_ref);
        const double w = rule.scaled_weights[i] * rule.scaled_weights[k] / c * prefactor;
        acc.noalias() += w * (t * ref.matrix() * t.adjoint());
      }
    }
    return FockOperator(acc);
  };

  FockOperator prev = integrate(16);
  FockOperator out = prev;
  bool converged = false;
  for (int n = 24; n <= 120; n += 8) {
    out = integrate(n);
    if (trace_distance(prev, out) < 1e-8) {
      converged = true;
      break;
    }
    prev = out;
  }
  if (!converged) throw ConvergenceError("teleportation outcome average did not converge");
  if (k_loss > 0.0) out = additive_noise_channel(out, 0.5 * k_loss, trunc);
  return out;
}

double coherent_fidelity(const ChannelParams& params) { return 1.0 / (1.0 + effective_K(params)); }

NonlocalityBound nonlocality_bound(const ChannelParams& p) {
  const double k = effective_K(p);
  NonlocalityBound b{};
  b.satisfied = k < 1.0;
  b.k0 = k0(p.photons);
  b.threshold = std::exp(-p.gamma_t) *
                (1.0 - (1.0 - p.eta) / p.eta - (2.0 * p.thermal + 1.0) * std::expm1(p.gamma_t));
  if (b.threshold >= 1.0) {
    b.min_photons = 0.0;
  } else if (b.threshold > 0.0) {
    // Invert K0(N) = threshold: N = (1 - K0)^2 / (2 K0).
    b.min_photons = (1.0 - b.threshold) * (1.0 - b.threshold) / (2.0 * b.threshold);
  }
  return b;
}

}  // namespace twinbeam
