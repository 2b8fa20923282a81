#include "twinbeam/conditional.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace twinbeam {

namespace {

Eigen::VectorXd schmidt_amplitudes(const TwinBeamParams& twb, int dim) {
  Eigen::VectorXd l(dim);
  double p = 1.0;
  for (int k = 0; k < dim; ++k) {
    l(k) = p;
    p *= twb.lambda();
  }
  return l;
}

void require_dimension(const TwinBeamParams& twb, const PovmElement& povm, double tail) {
  TruncationConfig(povm.op.dim(), tail).require_twin_beam(twb);
}

// Lambda Pi^T Lambda
Matrix unnormalized_state(const TwinBeamParams& twb, const PovmElement& povm) {
  Eigen::VectorXd l = schmidt_amplitudes(twb, povm.op.dim());
  return l.asDiagonal() * povm.op.matrix().transpose() * l.asDiagonal();
}

}  // namespace

double outcome_probability(const TwinBeamParams& twb, const PovmElement& povm,
                           double tail_tolerance) {
  require_dimension(twb, povm, tail_tolerance);
  const int d = povm.op.dim();
  double acc = 0.0, l2k = 1.0;
  for (int k = 0; k < d; ++k) {
    acc += l2k * povm.op(k, k).real();
    l2k *= twb.lambda_sq();
  }
  return std::max(0.0, (1.0 - twb.lambda_sq()) * acc);
}

ConditionalResult conditional_state(const TwinBeamParams& twb, const PovmElement& povm,
                                    double tail_tolerance) {
  double p = outcome_probability(twb, povm, tail_tolerance);
  if (p < kProbabilityFloor) {
    std::ostringstream os;
    os << "outcome probability " << p << " below floor " << kProbabilityFloor;
    throw RejectedOutcome(os.str());
  }
  Matrix m = unnormalized_state(twb, povm);
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  FockOperator rho(std::move(m));
  return ConditionalResult{p, rho, rho};
}

ConditionalResult conditional_with_feedback(const TwinBeamParams& twb, const PovmElement& povm,
                                            const FeedbackFactory& feedback,
                                            double tail_tolerance) {
  ConditionalResult r = conditional_state(twb, povm, tail_tolerance);
  if (!feedback) return r;
  FockOperator u = feedback(povm.outcome, TruncationConfig(povm.op.dim(), tail_tolerance));
  if (u.dim() != r.state.dim()) throw PreconditionError("feedback dimension mismatch");
  FockOperator sigma = r.state.conjugated_by(u);
  if (std::abs(sigma.trace().real() - 1.0) > 1e-8) {
    throw PreconditionError("feedback operator is not unitary on the conditional state");
  }
  r.post_state = std::move(sigma);
  return r;
}

std::vector<WeightedOutcome> homodyne_family(const TwinBeamParams& twb, double eta,
                                             const TruncationConfig& trunc, int nodes) {
  const double var = 0.25 * (1.0 + twb.photons()) + homodyne_noise_variance(eta);
  const double scale = std::sqrt(2.0 * var);
  GaussHermiteRule rule = gauss_hermite(nodes);
  std::vector<WeightedOutcome> family;
  family.reserve(nodes);
  for (int k = 0; k < nodes; ++k) {
    family.push_back({homodyne_povm(scale * rule.nodes[k], eta, trunc),
                      scale * rule.scaled_weights[k]});
  }
  return family;
}

EnergyAverage average_conditional_energy(const TwinBeamParams& twb,
                                         const std::vector<WeightedOutcome>& family,
                                         double max_deficit) {
  EnergyAverage out{0.0, 0.0};
  for (const auto& item : family) {
    // P_x <n>_x = (1 - lambda^2) Tr[n Lambda Pi^T Lambda], no division needed.
    const auto& op = item.element.op;
    require_dimension(twb, item.element, kDefaultTailTolerance);
    double p = 0.0, pn = 0.0, l2k = 1.0;
    for (int k = 0; k < op.dim(); ++k) {
      double diag = op(k, k).real() * l2k;
      p += diag;
      pn += k * diag;
      l2k *= twb.lambda_sq();
    }
    out.coverage += item.weight * (1.0 - twb.lambda_sq()) * p;
    out.energy += item.weight * (1.0 - twb.lambda_sq()) * pn;
  }
  double deficit = 1.0 - out.coverage;
  if (std::abs(deficit) > max_deficit) {
    std::ostringstream os;
    os << "outcome family covers probability " << out.coverage;
    throw CoverageError(os.str(), deficit);
  }
  return out;
}

}  // namespace twinbeam
