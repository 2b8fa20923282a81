#include "twinbeam/error.hpp"
#include "twinbeam/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace twinbeam;

namespace {

// Photon statistics of the click-conditioned state by direct summation of
// p_n ~ lambda^{2n} (1 - (1 - eta)^n).
struct Series {
  double probability, mean, var, parity;
};
Series click_series(double photons, double eta) {
  const double l2 = TwinBeamParams::from_photons(photons).lambda_sq();
  double p = 0.0, m1 = 0.0, m2 = 0.0, par = 0.0, lk = 1.0;
  for (int n = 0; n < 20000 && (n < 10 || lk > 1e-300); ++n, lk *= l2) {
    double w = (1.0 - l2) * lk * (1.0 - std::pow(1.0 - eta, n));
    p += w;
    m1 += n * w;
    m2 += double(n) * n * w;
    par += (n % 2 ? -w : w);
  }
  double mean = m1 / p;
  return {p, mean, m2 / p - mean * mean, par / p};
}

}  // namespace

TEST_CASE("click oracles agree with series summation") {
  for (double n : {0.1, 1.0, 5.0, 20.0}) {
    for (double eta : {0.4, 0.5, 0.7, 1.0}) {
      Series s = click_series(n, eta);
      CHECK(click_probability(n, eta) == doctest::Approx(s.probability).epsilon(1e-12));
      CHECK(onoff_fano(n, eta) == doctest::Approx(s.var / s.mean).epsilon(1e-11));
      CHECK(onoff_wigner_origin(n, eta) == doctest::Approx(2.0 / std::numbers::pi * s.parity).epsilon(1e-11));
      CHECK(onoff_wigner_origin(n, eta) < 0.0);
    }
  }
  CHECK(onoff_fano(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(click_probability(0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(onoff_fano(0.0, 1.0), PreconditionError);
}

TEST_CASE("Fano factor and its large-efficiency form coincide at unit efficiency") {
  for (double n : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(onoff_fano_asymptotic(n, 1.0) == doctest::Approx(onoff_fano(n, 1.0)).epsilon(1e-13));
  }
  // The exact first-order slope in (1 - eta) is N(2 - N)/(N + 2)^2, opposite to onoff_fano_asymptotic.
  for (double n : {0.5, 1.0, 5.0}) {
    const double h = 1e-5;
    const double slope = (onoff_fano(n, 1.0 - h) - onoff_fano(n, 1.0)) / h;
    const double asym = (onoff_fano_asymptotic(n, 1.0 - h) - onoff_fano_asymptotic(n, 1.0)) / h;
    CHECK(slope == doctest::Approx(n * (2.0 - n) / ((n + 2.0) * (n + 2.0))).epsilon(1e-4));
    CHECK(asym == doctest::Approx(-slope).epsilon(1e-4));
  }
}

TEST_CASE("Poissonian crossover of the click-conditioned state") {
  // At eta = 1 the conditional state is thermal minus vacuum; F = N/2 crosses 1 at N = 2.
  CHECK(onoff_poissonian_crossover(1.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(onoff_fano(1.9, 1.0) < 1.0);
  CHECK(onoff_fano(2.1, 1.0) > 1.0);
  double n_half = onoff_poissonian_crossover(0.5);
  CHECK(onoff_fano(n_half, 0.5) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("homodyne outcome statistics") {
  HomodyneStats s(20.0, 0.7, 0.25);
  CHECK(s.delta_lambda_eta_sq() == doctest::Approx(21.0 / 4.0 + 0.3 / 2.8));
  // Binned density: exact erf form against the second-order expansion.
  for (double x : {0.0, 1.0, 4.0}) {
    CHECK(s.binned_density(x) == doctest::Approx(s.binned_density_expansion(x)).epsilon(1e-6));
  }
  // The bin average sits below the peak.
  CHECK(s.binned_density(0.0) < s.density(0.0));
  // Exact binned variance: var_x plus c^2 delta^2 / 12 to leading order, for any x.
  const double c2 = 0.49 * 440.0 / (15.0 * 15.0);
  for (double x : {0.0, 2.0, 5.0}) {
    CHECK(binned_conditional_var_x(x, 20.0, 0.7, 0.25) ==
          doctest::Approx(conditional_squeezing(x, 20.0, 0.7).var_x + c2 * 0.0625 / 12.0).epsilon(1e-4));
  }
  // Unit normalization by trapezoid over the bins.
  double total = 0.0;
  for (int i = -400; i <= 400; ++i) total += 0.25 * s.binned_density(0.25 * i);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional squeezing requires efficiency above one half") {
  for (double n : {0.1, 1.0, 20.0}) {
    CHECK(conditional_squeezing(0.3, n, 0.55).var_x < 0.25);
    CHECK(conditional_squeezing(0.3, n, 0.5).var_x == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(conditional_squeezing(0.3, n, 0.45).var_x > 0.25);
  }
  CHECK_FALSE(conditional_squeezing(0.3, 0.0, 1.0).is_squeezed);
}

TEST_CASE("homodyne conditional photon number") {
  CHECK(conditional_photon_number(0.0, 1.0) == doctest::Approx(0.125));
  CHECK(conditional_photon_number(1.3, 0.0) == doctest::Approx(0.0).scale(1.0));
  // N_x is quadratic in x, so the two-point rule for a normal density (nodes +-1 standard
  // deviation) averages it exactly over the outcome distribution.
  for (double n : {1.0, 5.0, 20.0}) {
    const double v = HomodyneStats(n, 1.0).delta_lambda_eta_sq();
    double acc = 0.0;
    for (double u : {-1.0, 1.0}) acc += 0.5 * conditional_photon_number(u * std::sqrt(v), n);
    CHECK(acc == doctest::Approx(energy_average(n)).epsilon(1e-12));
  }
}

TEST_CASE("g grows with efficiency and falls with photon number") {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      double eta = 0.5 + 0.5 * (i + 0.5) / 20.0, n = 0.1 + j;
      CHECK(g_function(eta + 0.01, n) > g_function(eta, n));
      CHECK(g_function(eta, n + 0.5) < g_function(eta, n));
    }
  }
  CHECK(g_function(0.5, 3.0) == 0.0);
  CHECK_THROWS_AS(g_function(0.4, 3.0), PreconditionError);
}

TEST_CASE("binned squeezing threshold and probability") {
  BinnedSqueezing b = binned_squeezing(0.0, 20.0, 0.7, 0.25);
  REQUIRE(b.x_delta);
  CHECK(*b.x_delta == doctest::Approx(5.169).epsilon(2e-3));
  CHECK(b.q_delta == doctest::Approx(0.974).epsilon(5e-3));
  CHECK(b.q_delta_exact == doctest::Approx(b.q_delta).epsilon(1e-3));
  // The binned variance sits at the vacuum level exactly at the threshold.
  CHECK(binned_squeezing(*b.x_delta, 20.0, 0.7, 0.25).var_x_delta == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(binned_squeezing(0.9 * *b.x_delta, 20.0, 0.7, 0.25).var_x_delta < 0.25);
  CHECK(binned_squeezing(1.1 * *b.x_delta, 20.0, 0.7, 0.25).var_x_delta > 0.25);
  CHECK_FALSE(binned_squeezing(0.0, 20.0, 0.4, 0.25).x_delta);
  CHECK(binned_squeezing(0.0, 0.0, 0.9, 0.25).q_delta == 0.0);
}
