#include "twinbeam/oracles.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace twinbeam {

namespace {

constexpr double kPi = std::numbers::pi;

void require_photons(double n) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw PreconditionError("N must be non-negative");
}

void require_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw PreconditionError("efficiency eta must lie in (0, 1]");
}

// int erf(t) dt = t erf(t) + exp(-t^2) / sqrt(pi)
double erf_antiderivative(double t) { return t * std::erf(t) + std::exp(-t * t) / std::sqrt(kPi); }

}  // namespace

double click_probability(double photons, double eta) {
  require_photons(photons);
  require_eta(eta);
  return eta * photons / (2.0 + eta * photons);
}

double onoff_wigner_origin(double photons, double eta) {
  require_photons(photons);
  require_eta(eta);
  const double n = photons;
  return -2.0 / kPi / (n + 1.0) * (2.0 + eta * n) / (2.0 * (1.0 + n) - eta * n);
}

double onoff_fano(double photons, double eta) {
  require_eta(eta);
  if (!(photons > 0.0)) throw PreconditionError("conditioning on a click requires N > 0");
  const double n = photons;
  return 0.5 * (2.0 + n) *
         (1.0 + 2.0 / (2.0 + n * eta) - 4.0 * (2.0 + n) / (4.0 + n * (4.0 + n * eta)));
}

double onoff_fano_asymptotic(double photons, double eta) {
  require_eta(eta);
  require_photons(photons);
  const double n = photons;
  return 0.5 * n + n * (n - 2.0) / ((n + 2.0) * (n + 2.0)) * (1.0 - eta);
}

double onoff_poissonian_crossover(double eta, double n_max) {
  double lo = 1e-9, hi = n_max;
  if ((onoff_fano(lo, eta) - 1.0) * (onoff_fano(hi, eta) - 1.0) > 0.0) {
    throw ConvergenceError("Fano factor does not cross 1 on the search interval");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    if ((onoff_fano(lo, eta) - 1.0) * (onoff_fano(mid, eta) - 1.0) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

HomodyneStats::HomodyneStats(double photons, double eta, double delta)
    : photons_(photons), eta_(eta), delta_(delta) {
  require_photons(photons);
  require_eta(eta);
  if (!(delta >= 0.0)) throw PreconditionError("bin width must be non-negative");
}

double HomodyneStats::density(double x) const {
  const double v = delta_lambda_eta_sq();
  return std::exp(-0.5 * x * x / v) / std::sqrt(2.0 * kPi * v);
}

double HomodyneStats::binned_density(double x) const {
  if (delta_ == 0.0) return density(x);
  const double s = std::sqrt(2.0 * delta_lambda_eta_sq());
  return (std::erf((x + 0.5 * delta_) / s) - std::erf((x - 0.5 * delta_) / s)) / (2.0 * delta_);
}

double HomodyneStats::binned_density_expansion(double x) const {
  const double v = delta_lambda_eta_sq();
  // Bin average of the Gaussian: f + f'' delta^2 / 24 with f'' = f (x^2 - v) / v^2.
  return density(x) * (1.0 + (x * x - v) / (24.0 * v * v) * delta_ * delta_);
}

SqueezingReport conditional_squeezing(double x, double photons, double eta) {
  require_photons(photons);
  require_eta(eta);
  const double n = photons;
  SqueezingReport r{};
  r.var_x = (1.0 + n * (1.0 - eta)) / (4.0 * (1.0 + eta * n));
  r.var_y = 0.25 * (1.0 + n);
  r.n_th = 0.5 * (std::sqrt((1.0 + n) * (1.0 + n * (1.0 - eta)) / (1.0 + eta * n)) - 1.0);
  r.alpha_eta = eta * std::sqrt(n * (n + 2.0)) / (1.0 + eta * n) * x;
  r.zeta_eta = 0.25 * std::log((1.0 + n) * (1.0 + eta * n) / (1.0 + n * (1.0 - eta)));
  r.is_squeezed = r.var_x < 0.25;
  return r;
}

double homodyne_matrix_element(int n, int m, double x, double photons, double eta) {
  if (n < 0 || m < 0) throw PreconditionError("Fock indices must be non-negative");
  require_photons(photons);
  require_eta(eta);
  auto twb = TwinBeamParams::from_photons(photons);
  const double l2 = twb.lambda_sq();
  if (l2 == 0.0) return (n == 0 && m == 0) ? 1.0 : 0.0;
  const double u = std::sqrt(2.0 * eta) * x;
  // Everything in logs: H_j(u) = psi_j(u) sqrt(2^j j! sqrt(pi)) exp(u^2/2).
  const int jmax = n + m;
  Eigen::VectorXd psi = hermite_functions(u, jmax + 1);
  const double log_front = std::log1p(-l2) + 0.5 * (n + m) * std::log(l2) -
                           0.5 * (std::lgamma(n + 1.0) + std::lgamma(m + 1.0) +
                                  (n + m) * std::log(2.0)) +
                           0.5 * std::log1p(eta * photons) -
                           4.0 * x * x * eta * eta * l2 / (1.0 - l2 * (1.0 - 2.0 * eta));
  double acc = 0.0;
  for (int k = 0; k <= std::min(n, m); ++k) {
    const int j = n + m - 2 * k;
    if (psi(j) == 0.0) continue;
    double log_term = k * std::log(2.0) + std::lgamma(k + 1.0) + std::lgamma(m + 1.0) -
                      std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) + std::lgamma(n + 1.0) -
                      std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                      (0.5 * (m + n) - k) * std::log(eta) + std::log(std::abs(psi(j))) +
                      0.5 * (j * std::log(2.0) + std::lgamma(j + 1.0) + 0.5 * std::log(kPi)) +
                      0.5 * u * u;
    acc += std::copysign(std::exp(log_front + log_term), psi(j));
  }
  return acc;
}

double g_function(double eta, double photons) {
  require_photons(photons);
  require_eta(eta);
  if (eta < 0.5) throw PreconditionError("g(eta, N) requires eta >= 1/2");
  return std::sqrt(6.0 * (2.0 * eta - 1.0) / (eta * (photons + 2.0)));
}

BinnedSqueezing binned_squeezing(double x, double photons, double eta, double delta) {
  require_photons(photons);
  require_eta(eta);
  if (!(delta > 0.0)) throw PreconditionError("bin width must be positive");
  const double n = photons;
  BinnedSqueezing b{};
  b.var_x_delta = conditional_squeezing(x, n, eta).var_x +
                  x * x * delta * delta / 12.0 * eta * eta * n * (n + 2.0) /
                      ((1.0 + eta * n) * (1.0 + eta * n));
  if (eta <= 0.5) {
    b.g = 0.0;
    b.q_delta = 0.0;
    b.q_delta_exact = 0.0;
    return b;
  }
  b.x_delta = std::sqrt(3.0 * (1.0 + eta * n) * (2.0 * eta - 1.0) / (eta * eta * (n + 2.0))) / delta;
  b.g = g_function(eta, n);
  if (n == 0.0) return b;
  b.q_delta = std::erf(b.g / delta);
  // int_{-x_d}^{x_d} dx (1/2 delta) [erf((x + d/2)/s) - erf((x - d/2)/s)]
  const double s = std::sqrt(2.0 * HomodyneStats(n, eta).delta_lambda_eta_sq());
  auto integral = [&](double shift) {
    return s * (erf_antiderivative((*b.x_delta + shift) / s) -
                erf_antiderivative((-*b.x_delta + shift) / s));
  };
  b.q_delta_exact = (integral(0.5 * delta) - integral(-0.5 * delta)) / (2.0 * delta);
  return b;
}

double binned_conditional_var_x(double x, double photons, double eta, double delta) {
  require_photons(photons);
  require_eta(eta);
  if (!(delta > 0.0)) throw PreconditionError("bin width must be positive");
  const double n = photons;
  // Mixture over the bin of states sharing var_x with means c t, weighted by the outcome
  // density: var_x + c^2 Var(t), Var(t) that of a normal truncated to the bin.
  const double sigma = std::sqrt(HomodyneStats(n, eta).delta_lambda_eta_sq());
  const double a = (x - 0.5 * delta) / sigma, b = (x + 0.5 * delta) / sigma;
  auto phi = [](double u) { return std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi); };
  // Z = Phi(b) - Phi(a), from the side where it does not cancel.
  const double z = a >= 0.0 ? 0.5 * (std::erfc(a / std::sqrt(2.0)) - std::erfc(b / std::sqrt(2.0)))
                            : 0.5 * (std::erfc(-b / std::sqrt(2.0)) - std::erfc(-a / std::sqrt(2.0)));
  if (!(z > 1e-280)) throw PreconditionError("bin lies too far in the tail of the outcome density");
  const double m = (phi(a) - phi(b)) / z;
  const double var_t = sigma * sigma * (1.0 + (a * phi(a) - b * phi(b)) / z - m * m);
  const double c = eta * std::sqrt(n * (n + 2.0)) / (1.0 + eta * n);
  return conditional_squeezing(x, n, eta).var_x + c * c * var_t;
}

double conditional_photon_number(double x, double photons, double eta) {
  SqueezingReport r = conditional_squeezing(x, photons, eta);
  return r.alpha_eta * r.alpha_eta + r.var_x + r.var_y - 0.5;
}

double energy_average(double photons) {
  require_photons(photons);
  return 0.5 * photons;
}

}  // namespace twinbeam
