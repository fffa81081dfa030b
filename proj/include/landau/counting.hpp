#pragma once

// Riemann zero counting (smooth part, fluctuation, exact count) and the
// semiclassical state counts of the Landau model in a box.

#include <cstdint>
#include <optional>
#include <vector>

#include "landau/defaults.hpp"
#include "landau/special_functions.hpp"

namespace landau {

// Box half-width L and magnetic length ell (hbar = 1). Energies are in units
// of hbar |omega_h|.
struct ModelGeometry {
  double L = 0.0;
  double ell = defaults::kEll;

  // Throws DomainError unless L > 0, ell > 0 and L / ell > 1.
  void validate() const;

  // Geometry with log(L^2 / (2 pi ell^2)) = log_ratio.
  static ModelGeometry from_log_ratio(double log_ratio, double ell = defaults::kEll);

  // Classical energy bound L^2 / ell^2.
  double e_max() const { return (L / ell) * (L / ell); }

  // log(L^2 / (2 pi ell^2)).
  double log_ratio() const;
};

struct CountingBreakdown {
  double E = 0.0;
  double theta = 0.0;
  double n_smooth = 0.0;
  std::optional<double> s_fluct;  // undefined at E = 0
  std::int64_t n_exact = 0;
  double n_sc = 0.0;
};

struct HigherLevelParams {
  double gamma = 0.0;
  double z_coh = 0.0;

  // Throws DomainError unless gamma > 1 and z_coh >= 0.
  void validate() const;
};

// N-bar(E) = theta(E)/pi + 1, E >= 0.
double smooth_count(double energy);

// S(E) = arg zeta(1/2 + iE) / pi, tracked continuously along sigma from 3 down
// to 1/2. Throws zero_proximity when |zeta(1/2 + iE)| < acc.abs_tol.
double fluctuation(double energy, const AccuracySpec& acc = {}, double ceiling = defaults::kZetaCeiling);

// Number of sign changes of Hardy's Z on (0, E), cross-checked against
// round(N-bar + S). Throws refinement_failure if they never agree.
std::int64_t exact_count(double energy, const AccuracySpec& acc = {}, double ceiling = defaults::kZetaCeiling);

// All sign changes of Z below e_max, bisected to within tol. Strictly increasing.
std::vector<double> locate_zeros(double e_max, const AccuracySpec& acc = {},
                                 double ceiling = defaults::kZetaCeiling,
                                 double tol = defaults::kZeroRefineTol);

// One CountingBreakdown per grid energy (each E in [0, ceiling]). Zeros are
// located once for the whole grid.
std::vector<CountingBreakdown> counting_table(const std::vector<double>& energies, const ModelGeometry& geom,
                                              const AccuracySpec& acc = {},
                                              double ceiling = defaults::kZetaCeiling);

// N_sc(E) = E/2pi log(L^2/2pi ell^2) - E/2pi log(E/2pi) + E/2pi for 0 <= E <= L^2/ell^2.
double semiclassical_count(double energy, const ModelGeometry& geom);

enum class AreaMethod { quadrature, monte_carlo };

// Area of {0 < x < L, 0 < y < L, xy < E ell^2} divided by 2 pi ell^2, by
// adaptive quadrature or by stratified Monte Carlo with the given seed.
double area_count_numeric(double energy, const ModelGeometry& geom, AreaMethod method,
                          std::uint64_t seed = defaults::kSeed,
                          std::int64_t samples = defaults::kMonteCarloSamples);

struct MissingStates {
  double continuum_term = 0.0;  // E/2pi log(L^2/2pi ell^2) + 1
  double n_missing = 0.0;       // N-bar(E)
};

MissingStates missing_states(double energy, const ModelGeometry& geom);

// N_sc(E) + gamma z^2/2pi (log(L^2/2pi ell^2) - log(E/2pi)).
double higher_level_count(double energy, const ModelGeometry& geom, const HigherLevelParams& hl);

}  // namespace landau
