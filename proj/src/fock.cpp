#include "twinbeam/fock.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace twinbeam {

namespace {

constexpr int kMaxDim = 4096;

int clamp_dim(double d) {
  if (!std::isfinite(d) || d > kMaxDim) return kMaxDim;
  return std::max(1, static_cast<int>(std::ceil(d)));
}

// Rows needed so that D(beta) maps the first `dim` levels without loss.
int displacement_reach(int dim, double amplitude) {
  double r = std::sqrt(double(dim)) + amplitude + 8.0;
  return clamp_dim(r * r);
}

// Fock level beyond which a squeezed vacuum with |zeta| = r carries less than eps.
int squeeze_reach(double r, double eps) {
  double t = std::tanh(std::abs(r));
  if (t < 1e-15) return 1;
  return clamp_dim(std::log(eps) / std::log(t) + 8.0);
}

Matrix hermitian_exp_i(const Matrix& generator) {
  // exp(G) for anti-Hermitian G via the Hermitian matrix H = iG: exp(G) = V exp(-i L) V^dag.
  Matrix h = cplx(0.0, 1.0) * generator;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Vector phases(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k) phases(k) = std::exp(cplx(0.0, -ev(k)));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw PreconditionError(std::string(what) + " must be finite");
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// TwinBeamParams

TwinBeamParams TwinBeamParams::from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw PreconditionError("lambda must lie in [0, 1)");
  double l2 = lambda * lambda;
  return TwinBeamParams(lambda, 2.0 * l2 / (1.0 - l2));
}

TwinBeamParams TwinBeamParams::from_photons(double photons) {
  require_finite(photons, "N");
  if (photons < 0.0) throw PreconditionError("N must be non-negative");
  return TwinBeamParams(std::sqrt(photons / (photons + 2.0)), photons);
}

TwinBeamParams TwinBeamParams::from_coupling(double kappa, double tau) {
  require_finite(kappa, "kappa");
  require_finite(tau, "tau");
  if (tau < 0.0) throw PreconditionError("interaction time must be non-negative");
  auto twb = from_lambda(std::tanh(std::abs(kappa) * tau));
  twb.coupling_ = std::make_pair(kappa, tau);
  return twb;
}

double TwinBeamParams::sigma_plus_sq() const noexcept {
  return 0.25 * (1.0 + photons_ + std::sqrt(photons_ * (photons_ + 2.0)));
}

double TwinBeamParams::sigma_minus_sq() const noexcept {
  // 1 + N - sqrt(N(N+2)) written without cancellation.
  return 0.25 / (1.0 + photons_ + std::sqrt(photons_ * (photons_ + 2.0)));
}

// ---------------------------------------------------------------------------------------------
// TruncationConfig

TruncationConfig::TruncationConfig(int d, double eps) : dim(d), tail_tolerance(eps) {
  if (d < 1) throw PreconditionError("truncation dimension must be positive");
  if (!(eps > 0.0)) throw PreconditionError("tail tolerance must be positive");
}

TruncationConfig TruncationConfig::for_twin_beam(const TwinBeamParams& twb, double eps) {
  double l2 = twb.lambda_sq();
  if (l2 <= 0.0) return TruncationConfig(4, eps);
  int dim = clamp_dim(std::floor(std::log(eps) / std::log(l2)) + 1.0);
  if (dim >= kMaxDim) throw TruncationError("twin beam too bright for the maximum truncation");
  return TruncationConfig(std::max(dim, 4), eps);
}

TruncationConfig TruncationConfig::for_thermal(double n_mean, double eps) {
  if (!(n_mean >= 0.0)) throw PreconditionError("mean photon number must be non-negative");
  if (n_mean == 0.0) return TruncationConfig(4, eps);
  double q = n_mean / (1.0 + n_mean);
  return TruncationConfig(std::max(4, clamp_dim(std::floor(std::log(eps) / std::log(q)) + 1.0)),
                          eps);
}

TruncationConfig TruncationConfig::for_coherent(double amplitude, double eps) {
  double mean = amplitude * amplitude;
  int len = clamp_dim(mean + 20.0 * std::abs(amplitude) + 80.0);
  std::vector<double> p(len);
  double log_p = -mean;
  for (int k = 0; k < len; ++k) {
    if (k > 0) log_p += std::log(mean) - std::log(double(k));
    p[k] = mean > 0.0 ? std::exp(log_p) : (k == 0 ? 1.0 : 0.0);
  }
  double tail = 0.0;
  int dim = len;
  for (int k = len - 1; k >= 0; --k) {
    tail += p[k];
    if (tail >= eps) break;
    dim = k;
  }
  return TruncationConfig(std::max(dim, 4), eps);
}

double TruncationConfig::twin_beam_tail(const TwinBeamParams& twb) const {
  return std::pow(twb.lambda_sq(), dim);
}

void TruncationConfig::require_twin_beam(const TwinBeamParams& twb) const {
  double tail = twin_beam_tail(twb);
  if (tail >= tail_tolerance) {
    std::ostringstream os;
    os << "truncation dim " << dim << " leaves twin-beam tail " << tail << " >= "
       << tail_tolerance;
    throw TruncationError(os.str());
  }
}

// ---------------------------------------------------------------------------------------------
// FockOperator

FockOperator::FockOperator(Matrix elements) : m_(std::move(elements)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw PreconditionError("FockOperator requires a non-empty square matrix");
  }
}

FockOperator FockOperator::zero(int dim) { return FockOperator(Matrix::Zero(dim, dim)); }

FockOperator FockOperator::identity(int dim) { return FockOperator(Matrix::Identity(dim, dim)); }

FockOperator FockOperator::projector(const Vector& ket) {
  return FockOperator(ket * ket.adjoint());
}

FockOperator FockOperator::diagonal(const Eigen::VectorXd& entries) {
  return FockOperator(entries.cast<cplx>().asDiagonal());
}

FockOperator FockOperator::resized(int d) const {
  if (d < 1) throw PreconditionError("resized: dimension must be positive");
  Matrix out = Matrix::Zero(d, d);
  int k = std::min(d, dim());
  out.topLeftCorner(k, k) = m_.topLeftCorner(k, k);
  return FockOperator(std::move(out));
}

double FockOperator::hermiticity_defect() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double FockOperator::min_eigenvalue() const {
  Matrix h = 0.5 * (m_ + m_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

double FockOperator::max_eigenvalue() const {
  Matrix h = 0.5 * (m_ + m_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
}

double FockOperator::purity() const { return (m_ * m_).trace().real(); }

FockOperator FockOperator::operator+(const FockOperator& rhs) const {
  if (rhs.dim() != dim()) throw PreconditionError("dimension mismatch in operator sum");
  return FockOperator(m_ + rhs.m_);
}

FockOperator FockOperator::operator-(const FockOperator& rhs) const {
  if (rhs.dim() != dim()) throw PreconditionError("dimension mismatch in operator difference");
  return FockOperator(m_ - rhs.m_);
}

FockOperator FockOperator::operator*(const FockOperator& rhs) const {
  if (rhs.dim() != dim()) throw PreconditionError("dimension mismatch in operator product");
  return FockOperator(m_ * rhs.m_);
}

FockOperator FockOperator::conjugated_by(const FockOperator& unitary) const {
  if (unitary.dim() != dim()) throw PreconditionError("dimension mismatch in conjugation");
  return FockOperator(unitary.m_ * m_ * unitary.m_.adjoint());
}

// ---------------------------------------------------------------------------------------------
// Matrix elements

Matrix annihilation(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix displacement_block(cplx beta, int rows, int cols) {
  Matrix d = Matrix::Zero(rows, cols);
  if (rows == 0 || cols == 0) return d;
  // Along each diagonal a = |m - n| the elements are normalized associated Laguerre functions
  //   l_k = sqrt(k!/(k+a)!) e^{-x/2} x^{a/2} L_k^{(a)}(x),  x = |beta|^2,
  // with <k+a|D|k> = e^{i a phi} l_k and <k|D|k+a> = (-e^{-i phi})^a l_k. The normalized
  // three-term recurrence in k is run forward, which is the stable direction.
  const double x = std::norm(beta);
  const double phi = std::arg(beta);
  const double log_x = x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
  const int max_offset = std::max(rows, cols) - 1;
  for (int a = 0; a <= max_offset; ++a) {
    const int below = std::min(rows - a, cols);  // elements <k+a|D|k>
    const int above = std::min(rows, cols - a);  // elements <k|D|k+a>
    const int len = std::max(below, above);
    if (len <= 0) continue;
    double log_scale = -0.5 * x - 0.5 * std::lgamma(a + 1.0);
    if (a > 0) log_scale += 0.5 * a * log_x;
    if (!std::isfinite(log_scale)) continue;  // x = 0: only the main diagonal survives
    const cplx phase_below = std::polar(1.0, a * phi);
    const cplx phase_above = (a % 2 == 0 ? 1.0 : -1.0) * std::polar(1.0, -a * phi);
    // Values carried as l_k = v_k exp(log_scale), rescaled to stay in range.
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < len; ++k) {
      double l = cur * std::exp(log_scale);
      if (k < below) d(k + a, k) = phase_below * l;
      if (a > 0 && k < above) d(k, k + a) = phase_above * l;
      double next = ((2.0 * k + 1.0 + a - x) * cur - std::sqrt(double(k) * (k + a)) * prev) /
                    std::sqrt((k + 1.0) * (k + 1.0 + a));
      prev = cur;
      cur = next;
      if (std::abs(cur) > 1e150) {
        prev *= 1e-150;
        cur *= 1e-150;
        log_scale += 150.0 * std::log(10.0);
      }
    }
  }
  return d;
}

Vector squeezed_vacuum_amplitudes(cplx zeta, int dim) {
  Vector v = Vector::Zero(dim);
  if (dim == 0) return v;
  const double r = std::abs(zeta);
  const cplx ratio = r > 0.0 ? -(zeta / r) * std::tanh(r) : cplx(0.0, 0.0);
  // c_{2k} = sqrt(sech r) (-e^{i theta} tanh r)^k sqrt((2k)!) / (2^k k!)
  v(0) = std::sqrt(1.0 / std::cosh(r));
  for (int m = 2; m < dim; m += 2) v(m) = std::sqrt(double(m - 1) / m) * ratio * v(m - 2);
  return v;
}

Vector coherent_amplitudes(cplx z, int dim) {
  Vector c(dim);
  c(0) = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * z / std::sqrt(double(n));
  return c;
}

// ---------------------------------------------------------------------------------------------
// States

FockOperator number_state(int n, const TruncationConfig& trunc) {
  if (n < 0 || n >= trunc.dim) {
    std::ostringstream os;
    os << "number state n=" << n << " out of range for dim " << trunc.dim;
    throw PreconditionError(os.str());
  }
  Vector v = Vector::Zero(trunc.dim);
  v(n) = 1.0;
  return FockOperator::projector(v);
}

FockOperator coherent_state(cplx z, const TruncationConfig& trunc) {
  require_finite(std::abs(z), "coherent amplitude");
  Vector c = coherent_amplitudes(z, trunc.dim);
  double tail = 0.0;
  {
    // Poisson tail beyond the truncation.
    double mean = std::norm(z);
    double p = std::norm(c(trunc.dim - 1));
    for (int k = trunc.dim; k < trunc.dim + 4000; ++k) {
      p *= mean / k;
      tail += p;
      if (p < 1e-30 && k > mean) break;
    }
  }
  if (tail > trunc.tail_tolerance) {
    std::ostringstream os;
    os << "coherent state |z|=" << std::abs(z) << " leaves tail " << tail << " beyond dim "
       << trunc.dim;
    throw TruncationError(os.str());
  }
  return FockOperator::projector(c);
}

FockOperator squeezed_state(cplx alpha, cplx zeta, const TruncationConfig& trunc) {
  require_finite(std::abs(alpha), "displacement");
  require_finite(std::abs(zeta), "squeezing");
  int reach = std::max(displacement_reach(trunc.dim, std::abs(alpha)),
                       squeeze_reach(std::abs(zeta), 1e-3 * trunc.tail_tolerance));
  Vector vac_sq = squeezed_vacuum_amplitudes(zeta, reach);
  Vector psi = displacement_block(alpha, trunc.dim, reach) * vac_sq;
  double tail = 1.0 - psi.squaredNorm();
  if (tail > trunc.tail_tolerance) {
    std::ostringstream os;
    os << "squeezed state leaves tail " << tail << " beyond dim " << trunc.dim;
    throw TruncationError(os.str());
  }
  return FockOperator::projector(psi);
}

FockOperator thermal_state(double n_mean, const TruncationConfig& trunc) {
  if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) {
    throw PreconditionError("thermal mean photon number must be non-negative");
  }
  double q = n_mean / (1.0 + n_mean);
  Eigen::VectorXd diag(trunc.dim);
  for (int k = 0; k < trunc.dim; ++k) diag(k) = (1.0 - q) * std::pow(q, k);
  double tail = std::pow(q, trunc.dim);
  if (tail > trunc.tail_tolerance) {
    std::ostringstream os;
    os << "thermal state n=" << n_mean << " leaves tail " << tail << " beyond dim " << trunc.dim;
    throw TruncationError(os.str());
  }
  return FockOperator::diagonal(diag);
}

double GaussianSpec::thermal_photons() const {
  return 2.0 * std::sqrt(var_x * var_y) - 0.5;
}

double GaussianSpec::squeezing() const { return 0.25 * std::log(var_y / var_x); }

FockOperator gaussian_state(const GaussianSpec& spec, const TruncationConfig& trunc) {
  if (!(spec.var_x > 0.0 && spec.var_y > 0.0)) {
    throw PreconditionError("Gaussian variances must be positive");
  }
  if (spec.var_x * spec.var_y < 1.0 / 16.0 - 1e-12) {
    throw PreconditionError("Gaussian variances violate the uncertainty relation");
  }
  return displaced_squeezed_thermal(spec.mean, spec.squeezing(),
                                    std::max(0.0, spec.thermal_photons()), trunc);
}

FockOperator displaced_squeezed_thermal(cplx alpha, double zeta, double n_th,
                                        const TruncationConfig& trunc) {
  require_finite(std::abs(alpha), "displacement");
  require_finite(zeta, "squeezing");
  if (!(n_th >= 0.0)) throw PreconditionError("thermal photons must be non-negative");
  if (n_th == 0.0) return squeezed_state(alpha, zeta, trunc);
  // Same moments as a squeezed vacuum with reduced squeezing sent through additive noise K:
  // (v_x - K/2)(v_y - K/2) = 1/16.
  const double vx = 0.25 * (2.0 * n_th + 1.0) * std::exp(-2.0 * zeta);
  const double vy = 0.25 * (2.0 * n_th + 1.0) * std::exp(2.0 * zeta);
  const double sum = vx + vy;
  const double half_k = 0.5 * (sum - std::sqrt(sum * sum - 4.0 * (vx * vy - 1.0 / 16.0)));
  const double zeta_pure = 0.25 * std::log((vy - half_k) / (vx - half_k));
  const double support =
      std::sqrt(double(squeeze_reach(zeta_pure, 1e-3 * trunc.tail_tolerance))) + std::abs(alpha) + 6.0;
  int dim = std::max(trunc.dim, clamp_dim(support * support));
  FockOperator pure = squeezed_state(alpha, zeta_pure, TruncationConfig(dim, trunc.tail_tolerance));
  FockOperator rho = additive_noise_channel(pure, 2.0 * half_k, trunc);
  double tail = 1.0 - rho.trace().real();
  if (tail > trunc.tail_tolerance) {
    std::ostringstream os;
    os << "Gaussian state leaves tail " << tail << " beyond dim " << trunc.dim;
    throw TruncationError(os.str());
  }
  return rho;
}

// ---------------------------------------------------------------------------------------------
// Unitaries

FockOperator displacement_operator(cplx gamma, const TruncationConfig& trunc) {
  require_finite(std::abs(gamma), "displacement");
  if (gamma == cplx(0.0, 0.0)) return FockOperator::identity(trunc.dim);
  int padded = std::min(2048, std::max(2 * trunc.dim, displacement_reach(trunc.dim, std::abs(gamma))));
  Matrix a = annihilation(padded);
  Matrix gen = gamma * a.adjoint() - std::conj(gamma) * a;
  return FockOperator(hermitian_exp_i(gen).topLeftCorner(trunc.dim, trunc.dim));
}

FockOperator squeeze_operator(cplx zeta, const TruncationConfig& trunc) {
  require_finite(std::abs(zeta), "squeezing");
  if (zeta == cplx(0.0, 0.0)) return FockOperator::identity(trunc.dim);
  int padded = std::min(
      2048, std::max(2 * trunc.dim, trunc.dim + squeeze_reach(std::abs(zeta), 1e-16)));
  Matrix a = annihilation(padded);
  Matrix a2 = a * a;
  Matrix gen = 0.5 * (std::conj(zeta) * a2 - zeta * a2.adjoint());
  return FockOperator(hermitian_exp_i(gen).topLeftCorner(trunc.dim, trunc.dim));
}

// ---------------------------------------------------------------------------------------------
// Channels

FockOperator additive_noise_channel(const FockOperator& state, double noise,
                                    const TruncationConfig& trunc) {
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw PreconditionError("channel noise K must be non-negative");
  }
  const int out = trunc.dim;
  if (noise == 0.0) return state.resized(out);
  const int in = state.dim();
  // D rho D^dag has a exp(-|a|^2) envelope for finite-support rho; fold it into the rule.
  const double c = 1.0 / noise + 1.0;
  const double scale = 1.0 / std::sqrt(c);
  const double cutoff = 42.0 * (1.0 + noise);

  auto integrate = [&](int n) {
    GaussHermiteRule rule = gauss_hermite(n);
    Matrix acc = Matrix::Zero(out, out);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double u = rule.nodes[i], v = rule.nodes[j];
        if (u * u + v * v > cutoff) continue;
        cplx alpha(scale * u, scale * v);
        double w = rule.scaled_weights[i] * rule.scaled_weights[j] / c *
                   std::exp(-std::norm(alpha) / noise) / (std::numbers::pi * noise);
        Matrix d = displacement_block(alpha, out, in);
        acc.noalias() += w * (d * state.matrix() * d.adjoint());
      }
    }
    return FockOperator(acc);
  };

  FockOperator prev = integrate(16);
  for (int n = 24; n <= 160; n += 8) {
    FockOperator next = integrate(n);
    if (trace_distance(prev, next) < 1e-8) return next;
    prev = std::move(next);
  }
  throw ConvergenceError("additive noise channel quadrature did not converge");
}

// ---------------------------------------------------------------------------------------------
// Moments and information measures

namespace {

struct LadderExpectations {
  cplx a;
  cplx a2;
  double n;
  double n2;
};

LadderExpectations ladder_expectations(const Matrix& rho) {
  LadderExpectations e{0.0, 0.0, 0.0, 0.0};
  const int d = static_cast<int>(rho.rows());
  for (int k = 0; k < d; ++k) {
    double p = rho(k, k).real();
    e.n += k * p;
    e.n2 += double(k) * k * p;
    if (k >= 1) e.a += std::sqrt(double(k)) * rho(k, k - 1);
    if (k >= 2) e.a2 += std::sqrt(double(k) * (k - 1)) * rho(k, k - 2);
  }
  return e;
}

Matrix normalized(const FockOperator& state, bool* renormalized) {
  double tr = state.trace().real();
  if (!(tr > 0.0)) throw PreconditionError("state has non-positive trace");
  if (renormalized) *renormalized = std::abs(tr - 1.0) > 1e-8;
  return state.matrix() / tr;
}

}  // namespace

double quadrature_mean(const FockOperator& state, double phase) {
  auto e = ladder_expectations(normalized(state, nullptr));
  return (std::exp(cplx(0.0, -phase)) * e.a).real();
}

double quadrature_variance(const FockOperator& state, double phase) {
  auto e = ladder_expectations(normalized(state, nullptr));
  double mean = (std::exp(cplx(0.0, -phase)) * e.a).real();
  // x_t^2 = (a^2 e^{-2it} + a^dag^2 e^{2it} + 2 a^dag a + 1) / 4
  double second = 0.25 * (2.0 * (std::exp(cplx(0.0, -2.0 * phase)) * e.a2).real() + 2.0 * e.n + 1.0);
  return second - mean * mean;
}

double mean_photon_number(const FockOperator& state) {
  return ladder_expectations(normalized(state, nullptr)).n;
}

Moments moments(const FockOperator& state) {
  Moments m{};
  Matrix rho = normalized(state, &m.renormalized);
  auto e = ladder_expectations(rho);
  m.mean_photon = e.n;
  m.fano = e.n < 1e-14 ? 1.0 : (e.n2 - e.n * e.n) / e.n;
  FockOperator unit(rho);
  m.var_x = quadrature_variance(unit, 0.0);
  m.var_y = quadrature_variance(unit, 0.5 * std::numbers::pi);
  return m;
}

double von_neumann_entropy(const FockOperator& state) {
  Matrix h = 0.5 * (state.matrix() + state.matrix().adjoint());
  Eigen::VectorXd p = Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
  double s = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    if (p(k) > 0.0) s -= p(k) * std::log(p(k));
  }
  return s;
}

double twb_entanglement(const TwinBeamParams& twb) {
  double n = twb.photons();
  if (n == 0.0) return 0.0;
  return std::log1p(0.5 * n) + 0.5 * n * std::log1p(2.0 / n);
}

double fidelity(const FockOperator& state, const FockOperator& pure_state) {
  if (state.dim() != pure_state.dim()) throw PreconditionError("fidelity: dimension mismatch");
  double tr = pure_state.trace().real();
  if (std::abs(pure_state.purity() - tr * tr) > 1e-8) {
    throw PreconditionError("fidelity: second argument must be a pure state");
  }
  double f = (state.matrix() * pure_state.matrix()).trace().real();
  return std::clamp(f, 0.0, 1.0);
}

double trace_distance(const FockOperator& a, const FockOperator& b) {
  if (a.dim() != b.dim()) throw PreconditionError("trace_distance: dimension mismatch");
  Matrix diff = a.matrix() - b.matrix();
  Matrix h = 0.5 * (diff + diff.adjoint());
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
  return 0.5 * ev.cwiseAbs().sum();
}

void require_state(const FockOperator& state, double tail, double tol) {
  if (!state.is_hermitian(tol)) throw PreconditionError("state is not Hermitian");
  double tr = state.trace().real();
  if (tr < 1.0 - tail - tol || tr > 1.0 + tol) {
    std::ostringstream os;
    os << "state trace " << tr << " outside [1 - tail, 1]";
    throw PreconditionError(os.str());
  }
  if (state.min_eigenvalue() < -tol) throw PreconditionError("state is not positive semidefinite");
}

}  // namespace twinbeam
