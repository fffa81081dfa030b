#pragma once

// Exact eigenfunctions of the Landau-model Hamiltonian in both Q-parity
// sectors, their edge asymptotics, the edge-identification residual and the
// sampled field over a square window.

#include <cstddef>
#include <vector>

#include "landau/counting.hpp"
#include "landau/spectrum.hpp"

namespace landau {

enum class NormalizationMode { unit_constant, sup_one };

// The overall constant multiplying the closed forms. unit_constant means
// C = 1; sup_one means C is chosen so that max |psi| over a sampled grid is 1
// (only grid_field can fix it; pointwise evaluation uses `constant`).
struct NormalizationConvention {
  NormalizationMode mode = NormalizationMode::unit_constant;
  Complex constant{1.0, 0.0};
};

// Phi+(Q) = |Q|^{-1/2 + iE}, Phi-(Q) = sign(Q) |Q|^{-1/2 + iE}. Throws
// singularity at Q = 0.
Complex phi_parity(double q, double energy, Parity parity);

// even: C e^{-x^2/2l^2} M(1/4 + iE/2, 1/2, (x - iy)^2/2l^2)
// odd:  C (x - iy) e^{-x^2/2l^2} M(3/4 + iE/2, 3/2, (x - iy)^2/2l^2)
Complex psi_closed_form(double x, double y, double energy, const ModelGeometry& geom, Parity parity,
                        const NormalizationConvention& norm = {}, const AccuracySpec& acc = {});

// Integral over Q of e^{-iQy/l^2} e^{-(x-Q)^2/2l^2} Phi(Q), truncated to
// |Q| <= |x| + window * l and evaluated in quad precision. Near Q = 0 the
// substitution |Q| = l e^{-w} turns |Q|^{-1/2+iE} dQ into a decaying
// exponential. Throws non_convergence if the quadrature fails.
Complex psi_integral_rep(double x, double y, double energy, const ModelGeometry& geom, Parity parity,
                         double window = defaults::kQuadratureWindow);

// The constant K with psi_integral_rep = K * psi_closed_form (unit constant):
// even K = l^{1/2+iE} 2^{1/4+iE/2} Gamma(1/4 + iE/2),
// odd  K = l^{-1/2+iE} 2^{3/4+iE/2} Gamma(3/4 + iE/2).
Complex integral_constant(double energy, const ModelGeometry& geom, Parity parity);

enum class Edge {
  x_edge,  // psi(L, x)
  y_edge,  // psi(x, L)
};

// Leading large-L form of psi(L, x) or psi(x, L) (unit constant), from the
// large-|z| behaviour of M on either side of Re z = 0.
Complex edge_asymptotic(double x, double energy, const ModelGeometry& geom, Parity parity, Edge edge);

enum class ResidualSource { asymptotic, exact };

// max_x |psi(x, L) - e^{iLx/l^2 + i pi (eta - 1)/4} psi(L, x)| / max edge modulus.
double boundary_residual(double energy, const ModelGeometry& geom, Parity parity, const std::vector<double>& x_samples,
                         ResidualSource source = ResidualSource::asymptotic);

// Row-major samples: values[j * n_x + i] = psi(x_i, y_j).
struct FieldGrid {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  std::size_t n_x = 0, n_y = 0;
  double E = 0.0;
  Parity parity = Parity::even;
  Complex constant{1.0, 0.0};
  std::vector<Complex> values;

  // Inclusive endpoints; symmetric windows give x(n-1-i) == -x(i) exactly.
  double x(std::size_t i) const;
  double y(std::size_t j) const;
  const Complex& at(std::size_t i, std::size_t j) const { return values[j * n_x + i]; }
};

// psi on the n x n grid over [-h, h]^2 with h = half_width * l, closed form only.
FieldGrid grid_field(double energy, const ModelGeometry& geom, Parity parity, std::size_t n,
                     NormalizationMode mode = NormalizationMode::unit_constant,
                     double half_width = defaults::kWindowHalfWidth);

// Ridge of |psi| in the quadrant x, y > 0 compared with the hyperbola xy = c.
// Rows with y >= sqrt(c) locate the ridge by the maximum along x, columns with
// x >= sqrt(c) by the maximum along y, so each search runs across the
// hyperbola rather than along it. A ridge cell counts as on the hyperbola when
// the curve passes through its 3 x 3 cell neighbourhood.
struct RidgeReport {
  std::size_t checked = 0;
  std::size_t on_hyperbola = 0;
  double max_distance_cells = 0.0;  // largest |xy - c| / |grad xy| over ridge cells, in cells
  bool within_one_cell() const { return checked > 0 && on_hyperbola == checked; }
};

RidgeReport ridge_report(const FieldGrid& grid, double c);

}  // namespace landau
