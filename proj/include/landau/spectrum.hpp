#pragma once

// Quantization condition from the edge identification of the box and the
// resulting eigenvalues of both Q-parity sectors.

#include <cstdint>
#include <string_view>
#include <vector>

#include "landau/counting.hpp"

namespace landau {

enum class Parity { even, odd };

// eta = +1 for even, -1 for odd.
inline int eta(Parity p) { return p == Parity::even ? 1 : -1; }
const char* to_string(Parity p) noexcept;
// Accepts "even"/"odd" (also "+"/"-"); throws DomainError otherwise.
Parity parse_parity(std::string_view text);

struct EigenvalueRecord {
  Parity parity = Parity::even;
  std::int64_t k = 0;    // f(E_k) = -2 pi k, k = 1, 2, ...
  double E = 0.0;
  double residual = 0.0;  // |f(E_k) + 2 pi k|
};

// even: f(E) = 2 theta(E) - E log(L^2 / 2 pi ell^2)
// odd:  f(E) = 2 Im log Gamma(3/4 + iE/2) - E log(L^2 / 2 ell^2)
// Eigenvalues solve f(E) in 2 pi Z. f(0) = 0 and f decreases on (0, L^2/ell^2).
double quantization_phase(double energy, const ModelGeometry& geom, Parity parity);

// All eigenvalues in (0, e_max], sorted, each refined by bisection until the
// phase residual is below tol. Throws bracketing_failure if f is not
// monotone on the sampled grid.
std::vector<EigenvalueRecord> solve_spectrum(double e_max, const ModelGeometry& geom, Parity parity,
                                             double tol = defaults::kPhaseTol);

struct StaircaseRow {
  double E = 0.0;
  std::int64_t count = 0;     // eigenvalues <= E
  double continuum_term = 0.0;  // E/2pi log(L^2/2pi ell^2) + 1
  double n_missing = 0.0;       // theta_eta(E)/pi + 1
};

std::vector<StaircaseRow> spectral_staircase(const std::vector<double>& energies, const ModelGeometry& geom,
                                             Parity parity);

}  // namespace landau
