#pragma once

// Closed-form results for twin-beam conditioning, used as references for the numerics.
// N is the total twin-beam photon number and eta the detector efficiency.

#include "twinbeam/fock.hpp"

#include <optional>

namespace twinbeam {

// eta N / (2 + eta N)
double click_probability(double photons, double eta);
// Wigner function at the origin of the click-conditioned state.
double onoff_wigner_origin(double photons, double eta);
// Fano factor of the click-conditioned state, and its large-efficiency approximation.
double onoff_fano(double photons, double eta);
double onoff_fano_asymptotic(double photons, double eta);
// Photon number at which onoff_fano crosses 1, by bisection on (0, n_max].
double onoff_poissonian_crossover(double eta, double n_max = 50.0);

class HomodyneStats {
 public:
  HomodyneStats(double photons, double eta, double delta = 0.0);

  double sigma_lambda_sq() const { return 0.25 * (1.0 + photons_); }
  double delta_eta_sq() const { return (1.0 - eta_) / (4.0 * eta_); }
  double delta_lambda_eta_sq() const { return sigma_lambda_sq() + delta_eta_sq(); }

  double density(double x) const;
  // Outcome density of the bin of width delta centred at x (equals density at delta = 0).
  double binned_density(double x) const;
  // Second-order expansion of binned_density in delta.
  double binned_density_expansion(double x) const;

 private:
  double photons_, eta_, delta_;
};

struct SqueezingReport {
  double alpha_eta;
  double zeta_eta;
  double n_th;
  double var_x;
  double var_y;
  bool is_squeezed;
};
SqueezingReport conditional_squeezing(double x, double photons, double eta);

// <n|rho_x|m> of the homodyne-conditioned state, eta in (0, 1].
double homodyne_matrix_element(int n, int m, double x, double photons, double eta);

// sqrt(6 (2 eta - 1) / (eta (N + 2))), eta >= 1/2.
double g_function(double eta, double photons);

// Threshold model: var_x + x^2 delta^2 c^2 / 12 with c = eta sqrt(N(N+2)) / (1 + eta N). x_delta
// and q_delta follow from it. The variance of the actual binned conditional state is
// binned_conditional_var_x.
struct BinnedSqueezing {
  double var_x_delta;
  // Outcome threshold below which the conditional state is squeezed; empty when eta <= 1/2.
  std::optional<double> x_delta;
  // Erf(g / delta), 0 for N = 0 or eta <= 1/2.
  double q_delta;
  // The same probability integrated exactly from the binned density.
  double q_delta_exact;
  double g;
};
BinnedSqueezing binned_squeezing(double x, double photons, double eta, double delta);

// Exact x-variance of the state conditioned on the bin [x - delta/2, x + delta/2].
double binned_conditional_var_x(double x, double photons, double eta, double delta);

// Mean photon number of the homodyne-conditioned state.
double conditional_photon_number(double x, double photons, double eta = 1.0);
// Average of conditional_photon_number over the outcome distribution: N / 2.
double energy_average(double photons);

}  // namespace twinbeam
