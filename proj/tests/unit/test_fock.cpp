#include "twinbeam/error.hpp"
#include "twinbeam/fock.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace twinbeam;

namespace {

// <m|D(beta)|n> from the associated-Laguerre closed form.
cplx displacement_element(cplx beta, int m, int n) {
  const double x = std::norm(beta);
  if (m >= n) {
    double f = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) - 0.5 * x);
    return f * std::pow(beta, m - n) * std::assoc_laguerre(n, m - n, x);
  }
  double f = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) - 0.5 * x);
  return f * std::pow(-std::conj(beta), n - m) * std::assoc_laguerre(m, n - m, x);
}

}  // namespace

TEST_CASE("twin-beam parameters are consistent") {
  auto t = TwinBeamParams::from_photons(3.0);
  CHECK(2.0 * t.lambda_sq() / (1.0 - t.lambda_sq()) == doctest::Approx(3.0));
  CHECK(TwinBeamParams::from_lambda(t.lambda()).photons() == doctest::Approx(3.0));
  auto c = TwinBeamParams::from_coupling(0.5, 1.2);
  CHECK(c.lambda() == doctest::Approx(std::tanh(0.6)));
  // sigma_+ sigma_- = 1/16 for a pure two-mode state.
  CHECK(t.sigma_plus_sq() * t.sigma_minus_sq() == doctest::Approx(1.0 / 16.0));
  CHECK_THROWS_AS(TwinBeamParams::from_photons(-1.0), PreconditionError);
  CHECK_THROWS_AS(TwinBeamParams::from_lambda(1.0), PreconditionError);
}

TEST_CASE("twin-beam truncation is the smallest dimension meeting the tail") {
  for (double n : {0.1, 1.0, 5.0, 20.0}) {
    auto twb = TwinBeamParams::from_photons(n);
    auto tr = TruncationConfig::for_twin_beam(twb);
    CHECK(tr.twin_beam_tail(twb) <= 1e-10);
    if (tr.dim > 4) CHECK(TruncationConfig(tr.dim - 1).twin_beam_tail(twb) > 1e-10);
    CHECK_THROWS_AS(TruncationConfig(tr.dim / 2).require_twin_beam(twb), TruncationError);
  }
}

TEST_CASE("displacement elements match the Laguerre closed form") {
  for (cplx beta : {cplx(0.3, -0.7), cplx(1.5, 0.5), cplx(-2.0, 2.5)}) {
    Matrix d = displacement_block(beta, 30, 25);
    double worst = 0.0;
    for (int m = 0; m < 30; ++m) {
      for (int n = 0; n < 25; ++n) worst = std::max(worst, std::abs(d(m, n) - displacement_element(beta, m, n)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("displacement elements match the padded exponential") {
  cplx beta(1.2, -0.9);
  Matrix ref = displacement_operator(beta, TruncationConfig(60)).matrix();
  Matrix d = displacement_block(beta, 60, 60);
  CHECK((d - ref).topLeftCorner(30, 30).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("coherent amplitudes follow the Poisson series") {
  cplx z(0.8, 1.1);
  Vector c = coherent_amplitudes(z, 40);
  for (int n = 0; n < 40; ++n) {
    double p = std::exp(-std::norm(z) + n * std::log(std::norm(z)) - std::lgamma(n + 1.0));
    CHECK(std::norm(c(n)) == doctest::Approx(p).epsilon(1e-12).scale(1e-300));
  }
  auto s = coherent_state(z, TruncationConfig::for_coherent(std::abs(z)));
  CHECK(quadrature_mean(s, 0.0) == doctest::Approx(z.real()).epsilon(1e-9));
  CHECK(quadrature_mean(s, 0.5 * std::numbers::pi) == doctest::Approx(z.imag()).epsilon(1e-9));
  CHECK_THROWS_AS(coherent_state(3.0, TruncationConfig(10)), TruncationError);
}

TEST_CASE("squeezed vacuum amplitudes match the closed form and the exponential") {
  const double r = 0.6, phi = 0.4;
  cplx zeta = std::polar(r, phi);
  Vector c = squeezed_vacuum_amplitudes(zeta, 40);
  for (int k = 0; k < 20; ++k) {
    // c_{2k} = (-e^{i phi} tanh r)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh r)
    double mag = std::exp(0.5 * std::lgamma(2 * k + 1.0) - k * std::log(2.0) - std::lgamma(k + 1.0)) *
                 std::pow(std::tanh(r), k) / std::sqrt(std::cosh(r));
    cplx ref = mag * std::pow(-std::polar(1.0, phi), k);
    CHECK(std::abs(c(2 * k) - ref) < 1e-13);
    CHECK(std::abs(c(2 * k + 1)) == 0.0);
  }
  Matrix s = squeeze_operator(zeta, TruncationConfig(40)).matrix();
  CHECK((s.col(0).head(20) - c.head(20)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("squeezed states have the expected quadrature variances") {
  const double r = 0.3;
  auto s = squeezed_state(cplx(0.4, -0.2), r, TruncationConfig(40));
  CHECK(quadrature_variance(s, 0.0) == doctest::Approx(0.25 * std::exp(-2 * r)).epsilon(1e-9));
  CHECK(quadrature_variance(s, 0.5 * std::numbers::pi) == doctest::Approx(0.25 * std::exp(2 * r)).epsilon(1e-9));
  CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("thermal and Gaussian states") {
  auto th = thermal_state(1.5, TruncationConfig::for_thermal(1.5, 1e-13));
  Moments m = moments(th);
  CHECK(m.mean_photon == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(m.fano == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(m.var_x == doctest::Approx(0.25 * 4.0).epsilon(1e-9));

  GaussianSpec g{cplx(0.3, 0.1), 0.2, 0.5};
  auto gs = gaussian_state(g, TruncationConfig(60));
  CHECK(quadrature_variance(gs, 0.0) == doctest::Approx(0.2).epsilon(1e-8));
  CHECK(quadrature_variance(gs, 0.5 * std::numbers::pi) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(quadrature_mean(gs, 0.0) == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(gs.min_eigenvalue() > -1e-10);
  CHECK(gs.trace().real() == doctest::Approx(1.0).epsilon(1e-9));
  // Below the uncertainty bound.
  CHECK_THROWS_AS(gaussian_state(GaussianSpec{0.0, 0.1, 0.1}, TruncationConfig(20)), PreconditionError);
}

TEST_CASE("additive noise raises the photon number by K and quadrature variances by K/2") {
  for (double k : {0.1, 0.5, 2.0}) {
    TruncationConfig out = TruncationConfig::for_thermal(1.0 + k, 1e-12);
    auto s = additive_noise_channel(number_state(1, TruncationConfig(4)), k, out);
    CHECK(s.trace().real() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mean_photon_number(s) == doctest::Approx(1.0 + k).epsilon(1e-7));
    CHECK(quadrature_variance(s, 0.0) == doctest::Approx(0.75 + 0.5 * k).epsilon(1e-7));
    CHECK(s.min_eigenvalue() > -1e-10);
  }
  auto id = additive_noise_channel(number_state(2, TruncationConfig(5)), 0.0, TruncationConfig(5));
  CHECK((id.matrix() - number_state(2, TruncationConfig(5)).matrix()).norm() < 1e-15);
}

TEST_CASE("marginal entropy of the twin beam") {
  // The marginal of a twin beam with N photons is thermal with N/2 photons.
  auto twb = TwinBeamParams::from_photons(2.0);
  auto marg = thermal_state(1.0, TruncationConfig(60));
  CHECK(von_neumann_entropy(marg) == doctest::Approx(twb_entanglement(twb)).epsilon(1e-10));
  CHECK(twb_entanglement(twb) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(von_neumann_entropy(number_state(3, TruncationConfig(5))) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("fidelity and trace distance") {
  TruncationConfig t(30);
  auto a = coherent_state(0.5, t), b = coherent_state(cplx(0.0, 0.5), t);
  CHECK(trace_distance(a, a) == doctest::Approx(0.0).scale(1.0));
  CHECK(trace_distance(number_state(0, t), number_state(1, t)) == doctest::Approx(1.0));
  double overlap = std::exp(-std::norm(cplx(0.5, -0.5)));
  CHECK(fidelity(a, b) == doctest::Approx(overlap).epsilon(1e-10));
  CHECK(trace_distance(a, b) == doctest::Approx(std::sqrt(1.0 - overlap)).epsilon(1e-10));
  CHECK_THROWS_AS(fidelity(a, thermal_state(0.2, t)), PreconditionError);
}

TEST_CASE("state validation") {
  TruncationConfig t(10);
  CHECK_NOTHROW(require_state(number_state(2, t)));
  CHECK_THROWS_AS(require_state(number_state(2, t) * cplx(2.0, 0.0)), PreconditionError);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  CHECK_THROWS_AS(require_state(FockOperator(m)), PreconditionError);
  CHECK_THROWS_AS(number_state(10, t), PreconditionError);
}
