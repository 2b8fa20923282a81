#pragma once

// Continuous-variable teleportation through a twin beam with heterodyne detection and
// displacement feedback, and the equivalent Gaussian additive-noise channel.

#include "twinbeam/fock.hpp"

#include <optional>

namespace twinbeam {

struct ChannelParams {
  double photons = 0.0;  // twin-beam photons N
  double gamma_t = 0.0;  // loss exposure Gamma t
  double thermal = 0.0;  // background photons M
  double eta = 1.0;      // heterodyne efficiency

  // Throws PreconditionError when a field is out of range.
  void validate() const;
};

// 1 + N - sqrt(N(N+2)), the noise of ideal teleportation.
double k0(double photons);
// K0 e^{Gt} + (2M+1)(e^{Gt} - 1) + (1 - eta)/eta
double effective_K(const ChannelParams& params);

struct EvolvedTwb {
  double sigma_plus_sq;
  double sigma_minus_sq;
};
// e^{Gt} (sigma^2 + D^2) with D^2 = (2M+1)(1 - e^{-Gt})/4, so that 4 sigma_minus^2 + D_eta^2 = K.
EvolvedTwb evolve_twb_loss(const ChannelParams& params);

// int d^2a/(pi K) exp(-|a|^2/K) D(a) S D^dag(a)
FockOperator teleport_state(const FockOperator& input, double noise, const TruncationConfig& trunc);
// The same channel on Gaussian moments: each quadrature variance grows by K/2.
GaussianSpec teleport_gaussian(const GaussianSpec& input, double noise);

// Heterodyne measurement of mode b against the input, displacement D(-conj(alpha)) on mode a,
// averaged over outcomes. Losses beyond detector inefficiency are split evenly between extra
// smearing of the measurement and additive noise on the output so that the total matches
// effective_K.
FockOperator teleport_via_conditioning(const FockOperator& input, const ChannelParams& params,
                                       const TruncationConfig& trunc);

// 1 / (1 + K)
double coherent_fidelity(const ChannelParams& params);

struct NonlocalityBound {
  bool satisfied;      // K < 1, i.e. F > 1/2
  double max_K = 1.0;
  double k0;           // left side of the photon-number bound
  double threshold;    // e^{-Gt} [1 - D_eta^2 - (2M+1)(e^{Gt} - 1)]
  // Smallest N meeting the bound; empty when no N can.
  std::optional<double> min_photons;
};
NonlocalityBound nonlocality_bound(const ChannelParams& params);

}  // namespace twinbeam
