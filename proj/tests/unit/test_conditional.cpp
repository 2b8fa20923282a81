#include "twinbeam/conditional.hpp"
#include "twinbeam/error.hpp"
#include "twinbeam/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace twinbeam;

namespace {

// Conditional state from the explicit two-mode ket: rho_a = Tr_b[(I x Pi)|psi><psi|] / P.
std::pair<double, Matrix> two_mode_reference(const TwinBeamParams& twb, const Matrix& pi) {
  const int d = static_cast<int>(pi.rows());
  const double l = twb.lambda();
  Vector psi = Vector::Zero(d * d);  // index a * d + b
  for (int p = 0; p < d; ++p) psi(p * d + p) = std::sqrt(1.0 - l * l) * std::pow(l, p);
  Matrix rho = Matrix::Zero(d, d);
  for (int a1 = 0; a1 < d; ++a1) {
    for (int a2 = 0; a2 < d; ++a2) {
      cplx acc = 0.0;
      for (int b1 = 0; b1 < d; ++b1) {
        for (int b2 = 0; b2 < d; ++b2) acc += psi(a1 * d + b1) * pi(b2, b1) * std::conj(psi(a2 * d + b2));
      }
      rho(a1, a2) = acc;
    }
  }
  double p = rho.trace().real();
  return {p, rho / p};
}

}  // namespace

TEST_CASE("Schmidt-form conditioning equals the explicit two-mode computation") {
  auto twb = TwinBeamParams::from_photons(0.5);
  TruncationConfig t = TruncationConfig::for_twin_beam(twb);
  std::vector<PovmElement> elements{onoff_povm(0.7, t).click, homodyne_povm(0.4, 0.8, t),
                                    heterodyne_povm(cplx(0.2, 0.3), squeezed_state(0.1, 0.2, TruncationConfig(20)), 0.9, t)};
  for (const auto& e : elements) {
    auto [p, rho] = two_mode_reference(twb, e.op.matrix());
    auto r = conditional_state(twb, e);
    CHECK(r.probability == doctest::Approx(p).epsilon(1e-12));
    CHECK((r.state.matrix() - rho).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("on/off outcomes are normalized and sum to one") {
  for (double n : {0.1, 1.0, 5.0}) {
    for (double eta : {0.3, 1.0}) {
      auto twb = TwinBeamParams::from_photons(n);
      auto povm = onoff_povm(eta, TruncationConfig::for_twin_beam(twb));
      auto r0 = conditional_state(twb, povm.no_click), r1 = conditional_state(twb, povm.click);
      CHECK(r0.probability + r1.probability == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(r1.probability == doctest::Approx(click_probability(n, eta)).epsilon(1e-10));
      for (const auto* r : {&r0, &r1}) {
        CHECK(r->state.trace().real() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r->state.min_eigenvalue() > -1e-12);
      }
    }
  }
}

TEST_CASE("rank-one outcomes give pure conditional states") {
  auto twb = TwinBeamParams::from_photons(5.0);
  auto r = conditional_state(twb, homodyne_projector(0.6, TruncationConfig::for_twin_beam(twb)));
  CHECK(r.state.purity() >= 1.0 - 1e-8);
  CHECK(r.probability == doctest::Approx(HomodyneStats(5.0, 1.0).density(0.6)).epsilon(1e-9));
}

TEST_CASE("improbable outcomes are rejected") {
  auto twb = TwinBeamParams::from_photons(0.0);
  CHECK_THROWS_AS(conditional_state(twb, onoff_povm(1.0, TruncationConfig(4)).click), RejectedOutcome);
  auto twb1 = TwinBeamParams::from_photons(1.0);
  CHECK_THROWS_AS(conditional_state(twb1, homodyne_projector(12.0, TruncationConfig::for_twin_beam(twb1))),
                  RejectedOutcome);
}

TEST_CASE("conditioning refuses a truncation that clips the twin beam") {
  auto twb = TwinBeamParams::from_photons(5.0);
  CHECK_THROWS_AS(outcome_probability(twb, onoff_povm(1.0, TruncationConfig(10)).click), TruncationError);
}

TEST_CASE("homodyne-conditioned matrix elements match the closed form") {
  for (double eta : {1.0, 0.8, 0.4}) {
    for (double x : {0.0, 0.6}) {
      auto twb = TwinBeamParams::from_photons(1.0);
      auto t = TruncationConfig::for_twin_beam(twb, 1e-14);
      auto e = eta == 1.0 ? homodyne_projector(x, t) : homodyne_povm(x, eta, t);
      auto r = conditional_state(twb, e);
      double worst = 0.0;
      for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= 10; ++m) {
          worst = std::max(worst, std::abs(r.state(n, m) - homodyne_matrix_element(n, m, x, 1.0, eta)));
        }
      }
      CHECK(worst < 1e-8);
      SqueezingReport s = conditional_squeezing(x, 1.0, eta);
      Moments mo = moments(r.state);
      CHECK(mo.var_x == doctest::Approx(s.var_x).epsilon(1e-8));
      CHECK(mo.var_y == doctest::Approx(s.var_y).epsilon(1e-8));
    }
  }
}

TEST_CASE("binned conditional variance against the truncated-Fock state") {
  auto twb = TwinBeamParams::from_photons(20.0);
  auto t = TruncationConfig::for_twin_beam(twb, 1e-14);
  for (double x : {0.0, 2.0, 5.0}) {
    auto r = conditional_state(twb, binned_homodyne_povm(x, 0.7, 0.25, t));
    CHECK(moments(r.state).var_x == doctest::Approx(binned_conditional_var_x(x, 20.0, 0.7, 0.25)).epsilon(1e-9));
    CHECK(r.probability == doctest::Approx(HomodyneStats(20.0, 0.7, 0.25).binned_density(x)).epsilon(1e-9));
  }
}

TEST_CASE("unitary feedback keeps the trace, other operators are refused") {
  auto twb = TwinBeamParams::from_photons(1.0);
  auto e = homodyne_povm(0.5, 0.9, TruncationConfig(60));
  auto shift = [](const Outcome& o, const TruncationConfig& tr) {
    return displacement_operator(-std::get<double>(o), tr);
  };
  auto r = conditional_with_feedback(twb, e, shift);
  CHECK(r.post_state.trace().real() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(quadrature_mean(r.post_state, 0.0) ==
        doctest::Approx(quadrature_mean(r.state, 0.0) - 0.5).epsilon(1e-8));
  auto squash = [](const Outcome&, const TruncationConfig& tr) {
    return FockOperator::identity(tr.dim) * cplx(0.5, 0.0);
  };
  CHECK_THROWS_AS(conditional_with_feedback(twb, e, squash), PreconditionError);
}

TEST_CASE("outcome-averaged conditional energy is half the twin-beam energy") {
  for (double n : {0.0, 1.0, 5.0}) {
    auto twb = TwinBeamParams::from_photons(n);
    auto t = TruncationConfig::for_twin_beam(twb);
    for (double eta : {1.0, 0.7}) {
      auto avg = average_conditional_energy(twb, homodyne_family(twb, eta, t));
      CHECK(avg.energy == doctest::Approx(0.5 * n).epsilon(1e-8).scale(1.0));
      CHECK(avg.coverage == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  auto twb = TwinBeamParams::from_photons(1.0);
  std::vector<WeightedOutcome> partial{{homodyne_projector(0.0, TruncationConfig(40)), 1.0}};
  CHECK_THROWS_AS(average_conditional_energy(twb, partial), CoverageError);
}
