#pragma once

// Wigner functions with alpha = x + i y, d^2 alpha = dx dy: the vacuum has W(0) = 2/pi and
// Tr[A B] = pi int d^2 alpha W[A] W[B].

#include "twinbeam/fock.hpp"

#include <variant>

namespace twinbeam {

// W(alpha) = (2/pi) Tr[O D(2 alpha) (-1)^{a^dag a}], real part for Hermitian O.
double wigner(const FockOperator& op, cplx alpha);

struct PhaseGrid {
  double x_min, x_max;
  int nx;
  double y_min, y_max;
  int ny;

  PhaseGrid(double x_min, double x_max, int nx, double y_min, double y_max, int ny);
  // Square grid [-half_width, half_width]^2.
  static PhaseGrid square(double half_width, int points);

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
  // Trapezoid weight of node (i, j).
  double weight(int i, int j) const;
};

// values(i, j) = W(x(i) + i y(j))
Eigen::MatrixXd wigner_map(const FockOperator& op, const PhaseGrid& grid);
double grid_integral(const Eigen::MatrixXd& values, const PhaseGrid& grid);
// Throws CoverageError when the grid integral misses more than max_deficit of unit mass.
void require_grid_coverage(const Eigen::MatrixXd& values, const PhaseGrid& grid,
                           double max_deficit = 1e-6);

// Inverse transform O = 2 int d^2 alpha W(alpha) D(2 alpha) (-1)^{a^dag a}, trapezoid rule.
// Throws ConvergenceError when the trace of the result disagrees with the grid integral
// (aliasing or a grid that does not resolve the support).
FockOperator operator_from_wigner(const Eigen::MatrixXd& values, const PhaseGrid& grid,
                                  const TruncationConfig& trunc);

// s-ordered Wigner function of the on/off-conditioned twin-beam state at the origin.
// Requires s in (-1, 0].
double s_wigner_origin_onoff(double photons, double eta, double s);

// Twin-beam Wigner function on (x1, y1; x2, y2).
double twb_wigner(const TwinBeamParams& twb, double x1, double y1, double x2, double y2);

struct OnOffWigner {
  int outcome;  // 0 or 1
  double eta;
};
struct HomodyneWigner {
  double x;
  double eta;
};
// Reference state given by its Gaussian moments.
struct HeterodyneWigner {
  cplx alpha;
  GaussianSpec reference;
  double eta;
};
using PovmWignerSpec = std::variant<OnOffWigner, HomodyneWigner, HeterodyneWigner>;

// Closed-form Wigner function of a POVM element. Ideal homodyne (eta = 1) is a delta
// function and throws PreconditionError.
double povm_wigner(const PovmWignerSpec& spec, double x, double y);

// P = pi int d^2 beta W[nu](beta) W[Pi](beta) with nu the twin-beam marginal, by adaptive
// Gauss-Hermite quadrature in phase space.
double overlap_probability(const TwinBeamParams& twb, const PovmWignerSpec& spec);

}  // namespace twinbeam
