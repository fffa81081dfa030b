#include "landau/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <boost/multiprecision/float128.hpp>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"

namespace landau {

namespace {

using Quad = boost::multiprecision::float128;
using QComplex = std::complex<Quad>;

void check_energy(double energy, const char* where) {
  if (!std::isfinite(energy)) throw DomainError(std::string(where) + ": E must be finite");
}

Complex kummer_a(double energy, Parity parity) {
  return {parity == Parity::even ? 0.25 : 0.75, energy / 2.0};
}

double kummer_b(Parity parity) { return parity == Parity::even ? 0.5 : 1.5; }

}  // namespace

Complex phi_parity(double q, double energy, Parity parity) {
  check_energy(energy, "phi_parity");
  if (!std::isfinite(q)) throw DomainError("phi_parity: Q must be finite");
  if (q == 0.0) throw Error(ErrorKind::singularity, "phi_parity: Q = 0");
  const double log_abs = std::log(std::fabs(q));
  const Complex value = std::exp(Complex(-0.5 * log_abs, energy * log_abs));
  return (parity == Parity::odd && q < 0.0) ? -value : value;
}

Complex psi_closed_form(double x, double y, double energy, const ModelGeometry& geom, Parity parity,
                        const NormalizationConvention& norm, const AccuracySpec& acc) {
  geom.validate();
  check_energy(energy, "psi_closed_form");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("psi_closed_form: (x, y) must be finite");
  const double xs = x / geom.ell;
  const double ys = y / geom.ell;
  // (x - iy)^2 / 2, written so that (x, y) -> (-x, -y) gives bit-identical z.
  const Complex z(0.5 * (xs * xs - ys * ys), -(xs * ys));
  const ScaledComplex m = kummer_m_scaled(kummer_a(energy, parity), kummer_b(parity), z, acc);
  Complex value = m.value_times_exp(-0.5 * xs * xs);
  if (parity == Parity::odd) value *= Complex(x, -y);
  return norm.constant * value;
}

Complex psi_integral_rep(double x, double y, double energy, const ModelGeometry& geom, Parity parity, double window) {
  geom.validate();
  check_energy(energy, "psi_integral_rep");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("psi_integral_rep: (x, y) must be finite");
  if (!(window >= 6.0)) throw DomainError("psi_integral_rep: window must be >= 6 magnetic lengths");

  const Quad xs = x / geom.ell;
  const Quad ys = y / geom.ell;
  const Quad e = energy;
  const Quad sign = parity == Parity::even ? 1 : -1;

  // Contributions of Q = t and Q = -t (t > 0), without the |Q|^{-1/2+iE} factor.
  auto pair = [&](const Quad& t) {
    const Quad right = exp(-(xs - t) * (xs - t) / 2);
    const Quad left = sign * exp(-(xs + t) * (xs + t) / 2);
    const Quad c = cos(t * ys);
    const Quad s = sin(t * ys);
    return QComplex((right + left) * c, (left - right) * s);
  };
  // t = e^{-w} on (0, 1]: t^{-1/2 + iE} dt = e^{-w/2} e^{-iEw} dw.
  auto inner = [&](const Quad& w) {
    const Quad amp = exp(-w / 2);
    return QComplex(amp * cos(e * w), -amp * sin(e * w)) * pair(exp(-w));
  };
  auto outer = [&](const Quad& t) {
    const Quad lt = log(t);
    const Quad amp = 1 / sqrt(t);
    return QComplex(amp * cos(e * lt), amp * sin(e * lt)) * pair(t);
  };

  // e^{-w/2} < 1e-22 beyond w = 104. Pieces are converged far below double
  // precision because they may cancel against each other.
  const quad::Options opt{1e-24, 0.0, 20000};
  const auto a = quad::integrate<Quad>(inner, Quad(0), Quad(104), opt);
  const Quad t_max = abs(xs) + Quad(window);
  const auto b = quad::integrate<Quad>(outer, Quad(1), t_max, opt);
  if (!a.converged || !b.converged)
    throw NumericalError(ErrorKind::non_convergence, "psi_integral_rep: quadrature did not converge");
  const QComplex total = a.value + b.value;
  const Complex result(static_cast<double>(total.real()), static_cast<double>(total.imag()));
  const double log_ell = std::log(geom.ell);
  return result * std::exp(Complex(0.5 * log_ell, energy * log_ell));
}

Complex integral_constant(double energy, const ModelGeometry& geom, Parity parity) {
  geom.validate();
  check_energy(energy, "integral_constant");
  const Complex a = kummer_a(energy, parity);
  const double log_ell = std::log(geom.ell);
  const Complex ell_power(parity == Parity::even ? 0.5 * log_ell : -0.5 * log_ell, energy * log_ell);
  return std::exp(ell_power + a * std::numbers::ln2 + log_gamma(a));
}

Complex edge_asymptotic(double x, double energy, const ModelGeometry& geom, Parity parity, Edge edge) {
  geom.validate();
  check_energy(energy, "edge_asymptotic");
  if (!std::isfinite(x)) throw DomainError("edge_asymptotic: x must be finite");
  const double ell2 = geom.ell * geom.ell;
  const double log_big = std::log(geom.L * geom.L / (2.0 * ell2));  // log(L^2 / 2 l^2)
  const bool even = parity == Parity::even;
  const double b = even ? 0.5 : 1.5;
  const double quarter = even ? 0.25 : 0.75;
  const double sign = edge == Edge::x_edge ? 1.0 : -1.0;
  // Gamma(b) / Gamma(quarter + i sign E/2) * (L^2/2l^2)^{-quarter + i sign E/2}
  Complex log_value = std::lgamma(b) - log_gamma({quarter, sign * energy / 2.0}) +
                      Complex(-quarter, sign * energy / 2.0) * log_big - x * x / (2.0 * ell2);
  if (edge == Edge::x_edge) log_value += Complex(0.0, -x * geom.L / ell2);
  Complex value = std::exp(log_value);
  if (!even) value *= edge == Edge::x_edge ? Complex(geom.L, 0.0) : Complex(0.0, -geom.L);
  return value;
}

double boundary_residual(double energy, const ModelGeometry& geom, Parity parity, const std::vector<double>& x_samples,
                         ResidualSource source) {
  geom.validate();
  check_energy(energy, "boundary_residual");
  if (x_samples.empty()) throw DomainError("boundary_residual: no samples");
  const double ell2 = geom.ell * geom.ell;
  const double twist = parity == Parity::even ? 0.0 : -std::numbers::pi / 2.0;
  double worst = 0.0;
  double scale = 0.0;
  for (double x : x_samples) {
    if (!(x > 0.0 && x < geom.L)) throw DomainError("boundary_residual: samples must lie in (0, L)");
    Complex top, side;
    if (source == ResidualSource::asymptotic) {
      top = edge_asymptotic(x, energy, geom, parity, Edge::y_edge);
      side = edge_asymptotic(x, energy, geom, parity, Edge::x_edge);
    } else {
      top = psi_closed_form(x, geom.L, energy, geom, parity);
      side = psi_closed_form(geom.L, x, energy, geom, parity);
    }
    const Complex rhs = std::exp(Complex(0.0, geom.L * x / ell2 + twist)) * side;
    worst = std::max(worst, std::abs(top - rhs));
    scale = std::max({scale, std::abs(top), std::abs(side)});
  }
  if (scale == 0.0) throw NumericalError(ErrorKind::non_convergence, "boundary_residual: edge values vanish");
  return worst / scale;
}

double FieldGrid::x(std::size_t i) const {
  const double m = static_cast<double>(n_x - 1);
  const double half = 0.5 * (x_max - x_min);
  return 0.5 * (x_max + x_min) + (2.0 * static_cast<double>(i) - m) * (half / m);
}

double FieldGrid::y(std::size_t j) const {
  const double m = static_cast<double>(n_y - 1);
  const double half = 0.5 * (y_max - y_min);
  return 0.5 * (y_max + y_min) + (2.0 * static_cast<double>(j) - m) * (half / m);
}

FieldGrid grid_field(double energy, const ModelGeometry& geom, Parity parity, std::size_t n, NormalizationMode mode,
                     double half_width) {
  geom.validate();
  check_energy(energy, "grid_field");
  if (n < 16) throw DomainError("grid_field: n must be >= 16");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("grid_field: half width must be > 0");
  FieldGrid g;
  const double h = half_width * geom.ell;
  g.x_min = g.y_min = -h;
  g.x_max = g.y_max = h;
  g.n_x = g.n_y = n;
  g.E = energy;
  g.parity = parity;
  g.values.resize(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) g.values[j * n + i] = psi_closed_form(g.x(i), g.y(j), energy, geom, parity);
  if (mode == NormalizationMode::sup_one) {
    double peak = 0.0;
    for (const auto& v : g.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) throw NumericalError(ErrorKind::non_convergence, "grid_field: field vanishes on the grid");
    g.constant = 1.0 / peak;
    for (auto& v : g.values) v *= g.constant;
  }
  return g;
}

RidgeReport ridge_report(const FieldGrid& grid, double c) {
  if (!(c > 0.0)) throw DomainError("ridge_report: c must be > 0");
  if (grid.n_x < 3 || grid.n_y < 3) throw DomainError("ridge_report: grid too small");
  const double dx = grid.x(1) - grid.x(0);
  const double dy = grid.y(1) - grid.y(0);
  const double root = std::sqrt(c);
  const double cell = std::max(dx, dy);
  // Does xy = c cross [x0, x1] x [y0, y1]?
  auto crosses = [&](double xc, double yc) {
    const double x0 = std::max(0.0, xc - 1.5 * dx), x1 = xc + 1.5 * dx;
    const double y0 = std::max(0.0, yc - 1.5 * dy), y1 = yc + 1.5 * dy;
    return x0 * y0 <= c && c <= x1 * y1;
  };
  RidgeReport report;
  auto record = [&](double xc, double yc) {
    ++report.checked;
    report.on_hyperbola += crosses(xc, yc) ? 1 : 0;
    const double distance = std::fabs(xc * yc - c) / std::hypot(xc, yc);
    report.max_distance_cells = std::max(report.max_distance_cells, distance / cell);
  };

  for (std::size_t j = 0; j < grid.n_y; ++j) {
    const double yj = grid.y(j);
    if (yj < root || c / yj > grid.x_max) continue;
    std::size_t best = grid.n_x;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < grid.n_x; ++i) {
      if (grid.x(i) <= 0.0) continue;
      const double a = std::abs(grid.at(i, j));
      if (a > best_abs) best_abs = a, best = i;
    }
    if (best == grid.n_x) continue;
    record(grid.x(best), yj);
  }
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    const double xi = grid.x(i);
    if (xi < root || c / xi > grid.y_max) continue;
    std::size_t best = grid.n_y;
    double best_abs = -1.0;
    for (std::size_t j = 0; j < grid.n_y; ++j) {
      if (grid.y(j) <= 0.0) continue;
      const double a = std::abs(grid.at(i, j));
      if (a > best_abs) best_abs = a, best = j;
    }
    if (best == grid.n_y) continue;
    record(xi, grid.y(best));
  }
  return report;
}

}  // namespace landau
