#include "twinbeam/phase_space.hpp"

#include "twinbeam/error.hpp"
#include "twinbeam/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace twinbeam {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double parity_trace(const Matrix& op, cplx alpha) {
  const int d = static_cast<int>(op.rows());
  Matrix disp = displacement_block(2.0 * alpha, d, d);
  cplx acc(0.0, 0.0);
  for (int n = 0; n < d; ++n) {
    cplx col(0.0, 0.0);
    for (int m = 0; m < d; ++m) col += op(n, m) * disp(m, n);
    acc += (n % 2 == 0) ? col : -col;
  }
  return acc.real();
}

double gaussian(double u, double var) {
  return std::exp(-0.5 * u * u / var) / std::sqrt(2.0 * kPi * var);
}

void require_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw PreconditionError("efficiency eta must lie in (0, 1]");
}

// Reference Gaussian after the heterodyne smearing: variances grow by D^2 / 2.
GaussianSpec smeared_reference(const HeterodyneWigner& h) {
  require_eta(h.eta);
  GaussianSpec g = h.reference;
  double extra = 0.5 * (1.0 - h.eta) / h.eta;
  g.var_x += extra;
  g.var_y += extra;
  return g;
}

// Exponent exp(-p (t - c)^2) of the POVM Wigner function along one axis; p = 0 when flat.
struct Envelope {
  double cx = 0.0, px = 0.0, cy = 0.0, py = 0.0;
};

Envelope envelope(const PovmWignerSpec& spec) {
  return std::visit(
      overloaded{
          [](const OnOffWigner& o) {
            Envelope e;
            if (o.outcome == 0) e.px = e.py = 2.0 * o.eta / (2.0 - o.eta);
            return e;
          },
          [](const HomodyneWigner& h) {
            Envelope e;
            e.cx = h.x;
            e.px = 2.0 * h.eta / (1.0 - h.eta);  // 1 / (2 Delta_eta^2)
            return e;
          },
          [](const HeterodyneWigner& h) {
            GaussianSpec g = smeared_reference(h);
            Envelope e;
            e.cx = h.alpha.real() + g.mean.real();
            e.px = 0.5 / g.var_x;
            e.cy = h.alpha.imag() - g.mean.imag();
            e.py = 0.5 / g.var_y;
            return e;
          },
      },
      spec);
}

}  // namespace

double wigner(const FockOperator& op, cplx alpha) {
  return 2.0 / kPi * parity_trace(op.matrix(), alpha);
}

PhaseGrid::PhaseGrid(double x0, double x1, int nx_, double y0, double y1, int ny_)
    : x_min(x0), x_max(x1), nx(nx_), y_min(y0), y_max(y1), ny(ny_) {
  if (nx < 2 || ny < 2) throw PreconditionError("phase grid needs at least two points per axis");
  if (!(x_max > x_min && y_max > y_min)) throw PreconditionError("phase grid ranges are empty");
}

PhaseGrid PhaseGrid::square(double half_width, int points) {
  return PhaseGrid(-half_width, half_width, points, -half_width, half_width, points);
}

double PhaseGrid::weight(int i, int j) const {
  double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
  double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
  return wx * wy * dx() * dy();
}

Eigen::MatrixXd wigner_map(const FockOperator& op, const PhaseGrid& grid) {
  Eigen::MatrixXd values(grid.nx, grid.ny);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) values(i, j) = wigner(op, cplx(grid.x(i), grid.y(j)));
  }
  return values;
}

double grid_integral(const Eigen::MatrixXd& values, const PhaseGrid& grid) {
  if (values.rows() != grid.nx || values.cols() != grid.ny) {
    throw PreconditionError("grid values do not match the grid shape");
  }
  double acc = 0.0;
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) acc += grid.weight(i, j) * values(i, j);
  }
  return acc;
}

void require_grid_coverage(const Eigen::MatrixXd& values, const PhaseGrid& grid,
                           double max_deficit) {
  double total = grid_integral(values, grid);
  if (std::abs(1.0 - total) > max_deficit) {
    std::ostringstream os;
    os << "phase grid captures Wigner mass " << total;
    throw CoverageError(os.str(), 1.0 - total);
  }
}

FockOperator operator_from_wigner(const Eigen::MatrixXd& values, const PhaseGrid& grid,
                                  const TruncationConfig& trunc) {
  const int d = trunc.dim;
  double mass = grid_integral(values, grid);
  Matrix acc = Matrix::Zero(d, d);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      double w = 2.0 * grid.weight(i, j) * values(i, j);
      if (w == 0.0) continue;
      acc.noalias() += w * displacement_block(2.0 * cplx(grid.x(i), grid.y(j)), d, d);
    }
  }
  for (int n = 1; n < d; n += 2) acc.col(n) *= -1.0;
  double tr = acc.trace().real();
  if (std::abs(tr - mass) > 1e-4) {
    std::ostringstream os;
    os << "inverse Wigner transform: trace " << tr << " vs grid mass " << mass
       << " (grid too coarse or too small)";
    throw ConvergenceError(os.str());
  }
  return FockOperator(std::move(acc));
}

double s_wigner_origin_onoff(double photons, double eta, double s) {
  if (!(s > -1.0 && s <= 0.0)) throw PreconditionError("ordering parameter s must lie in (-1, 0]");
  require_eta(eta);
  if (!(photons > 0.0)) throw PreconditionError("conditioning on a click requires N > 0");
  const double n = photons;
  return -2.0 * (1.0 + s) * (2.0 + eta * n) /
         (kPi * (1.0 + n - s) * (2.0 * (1.0 + n - s) - eta * n * (1.0 + s)));
}

double twb_wigner(const TwinBeamParams& twb, double x1, double y1, double x2, double y2) {
  const double sp = twb.sigma_plus_sq(), sm = twb.sigma_minus_sq();
  double e = (x1 + x2) * (x1 + x2) / (4.0 * sp) + (y1 + y2) * (y1 + y2) / (4.0 * sm) +
             (x1 - x2) * (x1 - x2) / (4.0 * sm) + (y1 - y2) * (y1 - y2) / (4.0 * sp);
  return std::exp(-e) / (4.0 * kPi * kPi * sp * sm);
}

double povm_wigner(const PovmWignerSpec& spec, double x, double y) {
  return std::visit(
      overloaded{
          [&](const OnOffWigner& o) {
            require_eta(o.eta);
            if (o.outcome != 0 && o.outcome != 1) {
              throw PreconditionError("on/off outcome must be 0 or 1");
            }
            double w0 = 2.0 / (kPi * (2.0 - o.eta)) *
                        std::exp(-2.0 * o.eta * (x * x + y * y) / (2.0 - o.eta));
            return o.outcome == 0 ? w0 : 1.0 / kPi - w0;
          },
          [&](const HomodyneWigner& h) {
            require_eta(h.eta);
            if (h.eta == 1.0) throw PreconditionError("ideal homodyne Wigner function is singular");
            return gaussian(x - h.x, (1.0 - h.eta) / (4.0 * h.eta)) / kPi;
          },
          [&](const HeterodyneWigner& h) {
            GaussianSpec g = smeared_reference(h);
            double u = x - h.alpha.real(), v = h.alpha.imag() - y;
            return gaussian(u - g.mean.real(), g.var_x) * gaussian(v - g.mean.imag(), g.var_y) /
                   kPi;
          },
      },
      spec);
}

double overlap_probability(const TwinBeamParams& twb, const PovmWignerSpec& spec) {
  const double n = twb.photons();
  // W[nu](beta) = 2 / (pi (1 + N)) exp(-2 |beta|^2 / (1 + N))
  auto marginal = [n](double x, double y) {
    return 2.0 / (kPi * (1.0 + n)) * std::exp(-2.0 * (x * x + y * y) / (1.0 + n));
  };
  const double p0 = 2.0 / (1.0 + n);

  if (const auto* h = std::get_if<HomodyneWigner>(&spec); h && h->eta == 1.0) {
    // Delta function in x: P = int dy W[nu](x, y).
    const double py = p0;
    const double scale = 1.0 / std::sqrt(py);
    GaussHermiteRule rule = gauss_hermite(32);
    double acc = 0.0;
    for (int j = 0; j < 32; ++j) {
      acc += rule.scaled_weights[j] * scale * marginal(h->x, scale * rule.nodes[j]);
    }
    return acc;
  }

  // Each POVM Wigner function is Gaussian along each axis (or flat); the product with the
  // marginal is integrated with nodes centred on the combined Gaussian.
  auto integrate = [&](const Envelope& e, auto&& w_pi) {
    const double px = p0 + e.px, py = p0 + e.py;
    const double cx = e.px * e.cx / px, cy = e.py * e.cy / py;
    const double sx = 1.0 / std::sqrt(px), sy = 1.0 / std::sqrt(py);
    auto sum = [&](int nodes) {
      GaussHermiteRule rule = gauss_hermite(nodes);
      double acc = 0.0;
      for (int i = 0; i < nodes; ++i) {
        double x = cx + sx * rule.nodes[i];
        for (int j = 0; j < nodes; ++j) {
          double y = cy + sy * rule.nodes[j];
          acc += rule.scaled_weights[i] * rule.scaled_weights[j] * marginal(x, y) * w_pi(x, y);
        }
      }
      return kPi * sx * sy * acc;
    };
    double prev = sum(16);
    for (int nodes = 24; nodes <= 160; nodes += 8) {
      double next = sum(nodes);
      if (std::abs(next - prev) < 1e-12) return next;
      prev = next;
    }
    throw ConvergenceError("overlap quadrature did not converge");
  };

  if (const auto* o = std::get_if<OnOffWigner>(&spec); o && o->outcome == 1) {
    // W[Pi_1] = 1/pi - W[Pi_0]: integrate the two terms on their own envelopes.
    OnOffWigner no_click{0, o->eta};
    double flat = integrate(Envelope{}, [](double, double) { return 1.0 / kPi; });
    double p_no_click = integrate(envelope(no_click), [&](double x, double y) {
      return povm_wigner(no_click, x, y);
    });
    return flat - p_no_click;
  }
  return integrate(envelope(spec), [&](double x, double y) { return povm_wigner(spec, x, y); });
}

}  // namespace twinbeam
