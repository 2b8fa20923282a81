#pragma once

// Detector POVMs acting on a single mode.

#include "twinbeam/fock.hpp"

#include <variant>

namespace twinbeam {

enum class PovmKind { NoClick, Click, Homodyne, BinnedHomodyne, Heterodyne };

struct PovmMeta {
  double eta = 1.0;
  double delta = 0.0;
};

// Discrete label (0 = no click, 1 = click), homodyne reading x, or heterodyne reading alpha.
using Outcome = std::variant<int, double, cplx>;

struct PovmElement {
  FockOperator op;
  PovmKind kind;
  Outcome outcome;
  PovmMeta meta;
};

struct OnOffPovm {
  PovmElement no_click;
  PovmElement click;
};
// Pi_0 = sum_k (1 - eta)^k |k><k|, Pi_1 = I - Pi_0.
OnOffPovm onoff_povm(double eta, const TruncationConfig& trunc);

// Quadrature eigenfunction <n|x> = (2/pi)^{1/4} e^{-x^2} H_n(sqrt2 x) / sqrt(2^n n!), n < dim.
Vector homodyne_wavefunction(double x, int dim);
PovmElement homodyne_projector(double x, const TruncationConfig& trunc);

// (1 - eta) / (4 eta)
double homodyne_noise_variance(double eta);
// Ideal projector convolved with a Gaussian of variance homodyne_noise_variance(eta).
PovmElement homodyne_povm(double x, double eta, const TruncationConfig& trunc);
// Average of homodyne_povm over the bin [x - delta/2, x + delta/2].
PovmElement binned_homodyne_povm(double x, double eta, double delta, const TruncationConfig& trunc);

// (1 - eta) / eta
double heterodyne_noise(double eta);

// Heterodyne elements (1/pi) D(alpha) R D^dag(alpha) with R the Fock-basis transpose of the
// reference state, smeared by the additive-noise channel of width heterodyne_noise(eta).
// R is computed once so that elements for many outcomes are cheap.
class HeterodyneFamily {
 public:
  HeterodyneFamily(const FockOperator& reference, double eta, const TruncationConfig& trunc);

  PovmElement element(cplx alpha) const;
  const FockOperator& smeared_reference() const noexcept { return smeared_; }
  double eta() const noexcept { return eta_; }
  const TruncationConfig& truncation() const noexcept { return trunc_; }

 private:
  FockOperator smeared_;
  double eta_;
  TruncationConfig trunc_;
};

PovmElement heterodyne_povm(cplx alpha, const FockOperator& reference, double eta,
                            const TruncationConfig& trunc);

}  // namespace twinbeam
