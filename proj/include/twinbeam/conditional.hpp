#pragma once

// Conditioning mode a of a twin beam on a measurement outcome of mode b.
//
// The two-mode state is never built: with Lambda = lambda^{a^dag a},
//   P = (1 - lambda^2) Tr[Lambda^2 Pi],   rho = Lambda Pi^T Lambda / Tr[Lambda^2 Pi],
// where Pi^T is the Fock-basis transpose of the mode-b element carried over to mode a.

#include "twinbeam/fock.hpp"
#include "twinbeam/povm.hpp"

#include <functional>
#include <vector>

namespace twinbeam {

inline constexpr double kProbabilityFloor = 1e-12;

struct ConditionalResult {
  // Probability, or probability density for continuous outcomes.
  double probability;
  FockOperator state;
  // Feedback-rotated state; equal to state when no feedback was applied.
  FockOperator post_state;
};

double outcome_probability(const TwinBeamParams& twb, const PovmElement& povm,
                           double tail_tolerance = kDefaultTailTolerance);

// Throws RejectedOutcome when the probability is below kProbabilityFloor.
ConditionalResult conditional_state(const TwinBeamParams& twb, const PovmElement& povm,
                                    double tail_tolerance = kDefaultTailTolerance);

using FeedbackFactory = std::function<FockOperator(const Outcome&, const TruncationConfig&)>;

// Throws PreconditionError when the returned operator does not preserve the trace.
ConditionalResult conditional_with_feedback(const TwinBeamParams& twb, const PovmElement& povm,
                                            const FeedbackFactory& feedback,
                                            double tail_tolerance = kDefaultTailTolerance);

// One outcome of a discretized family with its integration weight (1 for discrete outcomes).
struct WeightedOutcome {
  PovmElement element;
  double weight;
};

// Homodyne outcomes on Gauss-Hermite nodes matched to the outcome distribution, which is
// Gaussian with variance (1 + N)/4 + homodyne_noise_variance(eta).
std::vector<WeightedOutcome> homodyne_family(const TwinBeamParams& twb, double eta,
                                             const TruncationConfig& trunc, int nodes = 24);

struct EnergyAverage {
  double energy;
  // Total probability captured by the family.
  double coverage;
};

// sum_x w_x P_x <n>_x. Throws CoverageError when 1 - coverage exceeds max_deficit.
EnergyAverage average_conditional_energy(const TwinBeamParams& twb,
                                         const std::vector<WeightedOutcome>& family,
                                         double max_deficit = 1e-8);

}  // namespace twinbeam
