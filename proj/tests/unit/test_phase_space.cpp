#include "twinbeam/conditional.hpp"
#include "twinbeam/error.hpp"
#include "twinbeam/oracles.hpp"
#include "twinbeam/phase_space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace twinbeam;

constexpr double kPi = std::numbers::pi;

TEST_CASE("Wigner functions of reference states") {
  TruncationConfig t(40);
  CHECK(wigner(number_state(0, t), 0.0) == doctest::Approx(2.0 / kPi));
  CHECK(wigner(number_state(1, t), 0.0) == doctest::Approx(-2.0 / kPi));
  cplx z(0.7, -0.4);
  auto c = coherent_state(z, t);
  for (cplx a : {cplx(0.0, 0.0), cplx(0.5, 0.1), cplx(-0.3, 0.9)}) {
    CHECK(wigner(c, a) == doctest::Approx(2.0 / kPi * std::exp(-2.0 * std::norm(a - z))).epsilon(1e-10));
  }
  // Thermal: W(0) = 2 / (pi (2n + 1))
  CHECK(wigner(thermal_state(0.5, TruncationConfig(80)), 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-10));
}

TEST_CASE("Wigner functions integrate to the trace") {
  PhaseGrid grid = PhaseGrid::square(5.0, 81);
  for (const auto& s : {number_state(1, TruncationConfig(4)), squeezed_state(0.2, 0.3, TruncationConfig(40))}) {
    Eigen::MatrixXd w = wigner_map(s, grid);
    CHECK(grid_integral(w, grid) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_NOTHROW(require_grid_coverage(w, grid));
  }
  PhaseGrid small = PhaseGrid::square(0.5, 21);
  CHECK_THROWS_AS(require_grid_coverage(wigner_map(number_state(0, TruncationConfig(2)), small), small),
                  CoverageError);
}

TEST_CASE("inverse Wigner transform recovers the operator") {
  PhaseGrid grid = PhaseGrid::square(5.0, 81);
  for (const auto& s : {number_state(1, TruncationConfig(4)), squeezed_state(0.0, 0.3, TruncationConfig(40))}) {
    auto back = operator_from_wigner(wigner_map(s, grid), grid, TruncationConfig(12));
    CHECK(trace_distance(back, s.resized(12) / s.resized(12).trace().real()) < 1e-6);
  }
  PhaseGrid coarse = PhaseGrid::square(5.0, 9);
  CHECK_THROWS_AS(operator_from_wigner(wigner_map(number_state(3, TruncationConfig(5)), coarse), coarse,
                                       TruncationConfig(8)),
                  ConvergenceError);
}

TEST_CASE("trace of products as phase-space overlaps") {
  TruncationConfig t(40);
  auto a = coherent_state(cplx(0.4, 0.2), t);
  auto b = thermal_state(0.8, t);
  PhaseGrid grid = PhaseGrid::square(6.0, 121);
  Eigen::MatrixXd wa = wigner_map(a, grid), wb = wigner_map(b, grid);
  double overlap = kPi * grid_integral(wa.cwiseProduct(wb), grid);
  CHECK(overlap == doctest::Approx((a * b).trace().real()).epsilon(1e-9));
}

TEST_CASE("POVM Wigner functions match the numerical transforms") {
  TruncationConfig t(80);
  for (double eta : {0.5, 0.9}) {
    auto p = onoff_povm(eta, t);
    for (cplx a : {cplx(0.0, 0.0), cplx(0.4, -0.3)}) {
      CHECK(wigner(p.no_click.op, a) ==
            doctest::Approx(povm_wigner(OnOffWigner{0, eta}, a.real(), a.imag())).epsilon(1e-10));
      CHECK(povm_wigner(OnOffWigner{1, eta}, a.real(), a.imag()) ==
            doctest::Approx(1.0 / kPi - povm_wigner(OnOffWigner{0, eta}, a.real(), a.imag())));
    }
  }
  // The truncated homodyne element is not trace class, so compare through Tr[Pi rho].
  auto h = homodyne_povm(0.3, 0.6, TruncationConfig(40));
  auto rho = coherent_state(cplx(0.2, -0.1), TruncationConfig(40));
  PhaseGrid grid = PhaseGrid::square(6.0, 121);
  Eigen::MatrixXd prod = wigner_map(rho, grid);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) prod(i, j) *= povm_wigner(HomodyneWigner{0.3, 0.6}, grid.x(i), grid.y(j));
  }
  CHECK(kPi * grid_integral(prod, grid) == doctest::Approx((h.op * rho).trace().real()).epsilon(1e-9));
  GaussianSpec ref{cplx(0.3, -0.2), 0.25, 0.25};
  auto het = heterodyne_povm(cplx(0.4, 0.5), coherent_state(ref.mean, TruncationConfig(20)), 0.8, TruncationConfig(60));
  for (cplx a : {cplx(0.0, 0.0), cplx(0.7, 0.7), cplx(0.2, 0.6)}) {
    CHECK(wigner(het.op, a) ==
          doctest::Approx(povm_wigner(HeterodyneWigner{cplx(0.4, 0.5), ref, 0.8}, a.real(), a.imag())).epsilon(1e-9));
  }
  CHECK_THROWS_AS(povm_wigner(HomodyneWigner{0.0, 1.0}, 0.0, 0.0), PreconditionError);
}

TEST_CASE("Fock-basis and phase-space probabilities agree") {
  auto twb = TwinBeamParams::from_photons(2.0);
  auto t = TruncationConfig::for_twin_beam(twb, 1e-14);
  CHECK(outcome_probability(twb, onoff_povm(0.6, t).no_click) ==
        doctest::Approx(overlap_probability(twb, OnOffWigner{0, 0.6})).epsilon(1e-10));
  CHECK(outcome_probability(twb, homodyne_povm(-0.4, 0.7, t)) ==
        doctest::Approx(overlap_probability(twb, HomodyneWigner{-0.4, 0.7})).epsilon(1e-10));
}

TEST_CASE("twin-beam Wigner function") {
  auto twb = TwinBeamParams::from_photons(3.0);
  // A pure two-mode state has W(0) = (2/pi)^2 times its total parity, which is +1 here.
  CHECK(twb_wigner(twb, 0, 0, 0, 0) == doctest::Approx(4.0 / (kPi * kPi)));
  // Correlated quadratures: the (x1 - x2) direction is squeezed.
  CHECK(twb_wigner(twb, 0.3, 0, 0.3, 0) > twb_wigner(twb, 0.3, 0, -0.3, 0));
}

TEST_CASE("s-ordered Wigner function of the click-conditioned state at the origin") {
  for (double n : {0.1, 1.0, 5.0}) {
    for (double eta : {0.3, 1.0}) {
      CHECK(s_wigner_origin_onoff(n, eta, 0.0) == doctest::Approx(onoff_wigner_origin(n, eta)).epsilon(1e-13));
      for (double s = -0.99; s < 0.0; s += 0.01) CHECK(s_wigner_origin_onoff(n, eta, s) < 0.0);
    }
  }
  CHECK_THROWS_AS(s_wigner_origin_onoff(1.0, 1.0, -1.0), PreconditionError);
  CHECK_THROWS_AS(s_wigner_origin_onoff(1.0, 1.0, 0.1), PreconditionError);
}
