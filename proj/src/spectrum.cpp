#include "landau/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Phase function in long double; rounding in double would cost ~1e-10 in
// the residual once E reaches 1e5.
long double phase_ld(double energy, long double log_ratio, Parity parity) {
  const long double theta = parity == Parity::even ? detail::rs_theta_ld(energy) : detail::rs_theta_odd_ld(energy);
  return 2 * theta - static_cast<long double>(energy) * log_ratio;
}

long double log_ratio_ld(const ModelGeometry& geom) {
  const long double r = static_cast<long double>(geom.L) / static_cast<long double>(geom.ell);
  return 2 * std::log(r) - std::log(2 * kPi);
}

}  // namespace

const char* to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even" || text == "+") return Parity::even;
  if (text == "odd" || text == "-") return Parity::odd;
  throw DomainError("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

double quantization_phase(double energy, const ModelGeometry& geom, Parity parity) {
  geom.validate();
  if (!std::isfinite(energy) || energy < 0.0) throw DomainError("quantization_phase: E must be finite and >= 0");
  return static_cast<double>(phase_ld(energy, log_ratio_ld(geom), parity));
}

std::vector<EigenvalueRecord> solve_spectrum(double e_max, const ModelGeometry& geom, Parity parity, double tol) {
  geom.validate();
  if (!std::isfinite(e_max) || e_max < 0.0) throw DomainError("solve_spectrum: E_max must be finite and >= 0");
  if (e_max > geom.e_max())
    throw DomainError("solve_spectrum: E_max = " + std::to_string(e_max) + " exceeds L^2/ell^2 = " +
                      std::to_string(geom.e_max()));
  if (!(tol > 0.0)) throw DomainError("solve_spectrum: tolerance must be > 0");
  std::vector<EigenvalueRecord> out;
  if (e_max == 0.0) return out;

  const long double lr = log_ratio_ld(geom);
  auto f = [&](double e) { return phase_ld(e, lr, parity); };
  const long double f_top = f(e_max);
  if (f_top > 0)
    throw NumericalError(ErrorKind::bracketing_failure, "solve_spectrum: phase positive at E_max");
  const auto n_roots = static_cast<std::int64_t>(std::floor(-f_top / (2 * kPi)));

  const std::int64_t cells = std::max<std::int64_t>(1024, 4 * (n_roots + 1));
  std::vector<double> grid(cells + 1);
  std::vector<long double> values(cells + 1);
  for (std::int64_t i = 0; i <= cells; ++i) {
    grid[i] = i == cells ? e_max : e_max * static_cast<double>(i) / static_cast<double>(cells);
    values[i] = f(grid[i]);
    if (i > 0 && !(values[i] < values[i - 1]))
      throw NumericalError(ErrorKind::bracketing_failure,
                           "solve_spectrum: phase not decreasing near E = " + std::to_string(grid[i]) +
                               " (E_max beyond the classical band?)");
  }

  out.reserve(n_roots);
  std::int64_t cell = 0;
  for (std::int64_t k = 1; k <= n_roots; ++k) {
    const long double target = -2 * kPi * static_cast<long double>(k);
    while (cell < cells && values[cell + 1] > target) ++cell;
    if (cell == cells)
      throw NumericalError(ErrorKind::bracketing_failure, "solve_spectrum: lost bracket for k = " + std::to_string(k));
    // g(a) > 0 >= g(b)
    double a = grid[cell];
    double b = grid[cell + 1];
    auto g = [&](double e) { return f(e) - target; };
    long double gb = values[cell + 1] - target;
    long double ga = values[cell] - target;
    while (std::fabs(gb) > tol / 8 && std::fabs(ga) > tol / 8) {
      const double m = a + 0.5 * (b - a);
      if (m <= a || m >= b) break;
      const long double gm = g(m);
      if (gm > 0) {
        a = m;
        ga = gm;
      } else {
        b = m;
        gb = gm;
      }
    }
    const bool take_a = std::fabs(ga) < std::fabs(gb);
    EigenvalueRecord rec{parity, k, take_a ? a : b, static_cast<double>(std::fabs(take_a ? ga : gb))};
    if (!(rec.residual < tol))
      throw NumericalError(ErrorKind::refinement_failure,
                           "solve_spectrum: residual " + std::to_string(rec.residual) + " at k = " + std::to_string(k));
    if (!out.empty() && !(rec.E > out.back().E))
      throw NumericalError(ErrorKind::refinement_failure, "solve_spectrum: eigenvalues not strictly increasing");
    out.push_back(rec);
  }
  return out;
}

std::vector<StaircaseRow> spectral_staircase(const std::vector<double>& energies, const ModelGeometry& geom,
                                             Parity parity) {
  geom.validate();
  double top = 0.0;
  for (double e : energies) {
    if (!std::isfinite(e) || e < 0.0 || e > geom.e_max())
      throw DomainError("spectral_staircase: E = " + std::to_string(e) + " outside [0, L^2/ell^2]");
    top = std::max(top, e);
  }
  const auto levels = solve_spectrum(top, geom, parity);
  const double lr = geom.log_ratio();
  std::vector<StaircaseRow> rows;
  rows.reserve(energies.size());
  for (double e : energies) {
    const auto count = std::upper_bound(levels.begin(), levels.end(), e,
                                        [](double v, const EigenvalueRecord& r) { return v < r.E; }) -
                       levels.begin();
    const double theta = parity == Parity::even ? rs_theta(e) : rs_theta_odd(e);
    rows.push_back({e, count, e / (2.0 * std::numbers::pi) * lr + 1.0, theta / std::numbers::pi + 1.0});
  }
  return rows;
}

}  // namespace landau
