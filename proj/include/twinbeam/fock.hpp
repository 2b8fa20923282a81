#pragma once

// Truncated single-mode Fock-space algebra.
//
// Quadrature convention throughout: x = (a + a^dag)/2, y = i(a^dag - a)/2, so the
// vacuum has <dx^2> = <dy^2> = 1/4 and a coherent state |z> has <x> = Re z, <y> = Im z.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>

namespace twinbeam {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTailTolerance = 1e-10;

// Twin-beam (two-mode squeezed vacuum) description. lambda and N are kept consistent:
// N = 2 lambda^2 / (1 - lambda^2).
class TwinBeamParams {
 public:
  static TwinBeamParams from_lambda(double lambda);
  static TwinBeamParams from_photons(double photons);
  // lambda = tanh(|kappa| tau)
  static TwinBeamParams from_coupling(double kappa, double tau);

  double lambda() const noexcept { return lambda_; }
  double lambda_sq() const noexcept { return lambda_ * lambda_; }
  double photons() const noexcept { return photons_; }
  // Variances of the EPR-correlated combinations, 1/4 [1 + N +- sqrt(N(N+2))].
  double sigma_plus_sq() const noexcept;
  double sigma_minus_sq() const noexcept;
  std::optional<std::pair<double, double>> coupling() const noexcept { return coupling_; }

 private:
  TwinBeamParams(double lambda, double photons) : lambda_(lambda), photons_(photons) {}
  double lambda_;
  double photons_;
  std::optional<std::pair<double, double>> coupling_;
};

struct TruncationConfig {
  int dim;
  double tail_tolerance;

  TruncationConfig(int dim, double tail_tolerance = kDefaultTailTolerance);

  // Smallest dimension with the twin-beam marginal tail lambda^(2 dim) below eps.
  static TruncationConfig for_twin_beam(const TwinBeamParams& twb,
                                        double eps = kDefaultTailTolerance);
  static TruncationConfig for_thermal(double n_mean, double eps = kDefaultTailTolerance);
  static TruncationConfig for_coherent(double amplitude, double eps = kDefaultTailTolerance);

  // Thermal-marginal tail sum_{p >= dim} (1 - lambda^2) lambda^(2p) for this dimension.
  double twin_beam_tail(const TwinBeamParams& twb) const;
  // Throws TruncationError when the twin-beam marginal tail exceeds the tolerance.
  void require_twin_beam(const TwinBeamParams& twb) const;
};

// Complex square matrix on span{|0>, ..., |dim-1>}.
class FockOperator {
 public:
  explicit FockOperator(Matrix elements);

  static FockOperator zero(int dim);
  static FockOperator identity(int dim);
  static FockOperator projector(const Vector& ket);
  static FockOperator diagonal(const Eigen::VectorXd& entries);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  cplx trace() const { return m_.trace(); }
  FockOperator adjoint() const { return FockOperator(m_.adjoint()); }
  // Transposition in the Fock basis.
  FockOperator transpose() const { return FockOperator(m_.transpose()); }
  // Top-left block, or zero padding when dim exceeds the current size.
  FockOperator resized(int dim) const;

  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
  // Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  double max_eigenvalue() const;
  double purity() const;

  FockOperator operator+(const FockOperator& rhs) const;
  FockOperator operator-(const FockOperator& rhs) const;
  FockOperator operator*(const FockOperator& rhs) const;
  FockOperator operator*(cplx scale) const { return FockOperator(m_ * scale); }
  FockOperator operator/(double scale) const { return FockOperator(m_ / scale); }
  // U rho U^dag
  FockOperator conjugated_by(const FockOperator& unitary) const;

 private:
  Matrix m_;
};

// Ladder operator a on the truncated space.
Matrix annihilation(int dim);

// Exact (untruncated) matrix elements <m|D(beta)|n>, m < rows, n < cols.
Matrix displacement_block(cplx beta, int rows, int cols);
// Fock amplitudes of S(zeta)|0> with S(zeta) = exp[(conj(zeta) a^2 - zeta a^dag^2)/2].
Vector squeezed_vacuum_amplitudes(cplx zeta, int dim);
// Fock amplitudes of the coherent state |z>, first dim components.
Vector coherent_amplitudes(cplx z, int dim);

FockOperator number_state(int n, const TruncationConfig& trunc);
FockOperator coherent_state(cplx z, const TruncationConfig& trunc);
// D(alpha) S(zeta) |0>
FockOperator squeezed_state(cplx alpha, cplx zeta, const TruncationConfig& trunc);
FockOperator thermal_state(double n_mean, const TruncationConfig& trunc);

// Single-mode Gaussian state without x-y correlations, described by its first and second
// moments. The corresponding operator is D(mean) S(zeta) nu_th S^dag(zeta) D^dag(mean) with real
// zeta = log(var_y / var_x) / 4 and thermal photons n_th = 2 sqrt(var_x var_y) - 1/2.
struct GaussianSpec {
  cplx mean{0.0, 0.0};
  double var_x = 0.25;
  double var_y = 0.25;

  double thermal_photons() const;
  double squeezing() const;
};
FockOperator gaussian_state(const GaussianSpec& spec, const TruncationConfig& trunc);
// D(alpha) S(zeta) nu_th S^dag(zeta) D^dag(alpha) for real zeta.
FockOperator displaced_squeezed_thermal(cplx alpha, double zeta, double n_th,
                                        const TruncationConfig& trunc);

// Unitaries built by exponentiating the truncated generator in a padded space.
FockOperator displacement_operator(cplx gamma, const TruncationConfig& trunc);
FockOperator squeeze_operator(cplx zeta, const TruncationConfig& trunc);

// Gaussian additive-noise channel: int d^2a/(pi K) exp(-|a|^2/K) D(a) rho D^dag(a).
// Quadrature variances grow by K/2 and the mean photon number by K.
FockOperator additive_noise_channel(const FockOperator& state, double noise,
                                    const TruncationConfig& trunc);

struct Moments {
  double mean_photon;
  // Var(n)/<n>; reported as 1 for the vacuum.
  double fano;
  double var_x;
  double var_y;
  // True when the input trace was off by more than the tail tolerance and was rescaled.
  bool renormalized;
};
Moments moments(const FockOperator& state);
double quadrature_mean(const FockOperator& state, double phase);
double quadrature_variance(const FockOperator& state, double phase);
double mean_photon_number(const FockOperator& state);

double von_neumann_entropy(const FockOperator& state);
// Excess entropy log(1 + N/2) + (N/2) log(1 + 2/N).
double twb_entanglement(const TwinBeamParams& twb);

// <psi|rho|psi> for pure_state = |psi><psi|.
double fidelity(const FockOperator& state, const FockOperator& pure_state);
double trace_distance(const FockOperator& a, const FockOperator& b);

// Throws PreconditionError unless the operator is a density operator within tolerances:
// Hermitian, min eigenvalue >= -tol, trace in [1 - tail, 1 + tol].
void require_state(const FockOperator& state, double tail = kDefaultTailTolerance,
                   double tol = 1e-9);

}  // namespace twinbeam
