#include "landau/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"

namespace landau {

namespace {

using LComplex = std::complex<long double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_energy(double energy, const char* where) {
  if (!std::isfinite(energy) || energy < 0.0) throw DomainError(std::string(where) + ": E must be finite and >= 0");
}

void check_height(double energy, double ceiling, const char* where) {
  if (!std::isfinite(energy) || energy <= 0.0) throw DomainError(std::string(where) + ": E must be finite and > 0");
  if (energy > ceiling)
    throw Error(ErrorKind::ceiling_exceeded,
                std::string(where) + ": E = " + std::to_string(energy) + " above ceiling " + std::to_string(ceiling));
}

void check_admissible(double energy, const ModelGeometry& geom, const char* where) {
  geom.validate();
  check_energy(energy, where);
  if (energy > geom.e_max())
    throw DomainError(std::string(where) + ": E = " + std::to_string(energy) + " exceeds the classical bound L^2/ell^2 = " +
                      std::to_string(geom.e_max()));
}

double hardy(double t, const AccuracySpec& acc, double ceiling) { return hardy_z(t, acc, ceiling).real(); }

// Brackets [a, b] of the sign changes of Z on (0, E). The grid is refined
// until the number of brackets equals round(N-bar(E) + S(E)).
std::vector<std::pair<double, double>> sign_change_brackets(double energy, const AccuracySpec& acc, double ceiling) {
  const auto target = static_cast<std::size_t>(std::llround(smooth_count(energy) + fluctuation(energy, acc, ceiling)));
  constexpr int kMaxRefinements = 6;
  std::size_t last_count = 0;
  for (int level = 0; level <= kMaxRefinements; ++level) {
    const double h = 0.1 / static_cast<double>(1 << level);
    const auto steps = static_cast<std::int64_t>(std::ceil(energy / h));
    std::vector<std::pair<double, double>> brackets;
    double t_prev = 0.0;
    double z_prev = hardy(0.0, acc, ceiling);
    for (std::int64_t i = 1; i <= steps; ++i) {
      const double t = (i == steps) ? energy : energy * static_cast<double>(i) / static_cast<double>(steps);
      const double z = hardy(t, acc, ceiling);
      if (z == 0.0) continue;  // keep the previous sign; the bracket widens
      if ((z > 0.0) != (z_prev > 0.0)) brackets.emplace_back(t_prev, t);
      t_prev = t;
      z_prev = z;
    }
    if (brackets.size() == target) return brackets;
    last_count = brackets.size();
  }
  throw NumericalError(ErrorKind::refinement_failure,
                       "exact_count: sign-change count " + std::to_string(last_count) +
                           " disagrees with round(N-bar + S) = " + std::to_string(target) + " at E = " +
                           std::to_string(energy));
}

}  // namespace

void ModelGeometry::validate() const {
  if (!(std::isfinite(L) && L > 0.0)) throw DomainError("geometry: L must be finite and > 0");
  if (!(std::isfinite(ell) && ell > 0.0)) throw DomainError("geometry: ell must be finite and > 0");
  if (!(L / ell > 1.0)) throw DomainError("geometry: L/ell must exceed 1");
}

ModelGeometry ModelGeometry::from_log_ratio(double log_ratio, double ell) {
  if (!std::isfinite(log_ratio)) throw DomainError("geometry: log ratio must be finite");
  ModelGeometry g{ell * std::sqrt(kTwoPi) * std::exp(0.5 * log_ratio), ell};
  g.validate();
  return g;
}

double ModelGeometry::log_ratio() const { return 2.0 * std::log(L / ell) - std::log(kTwoPi); }

void HigherLevelParams::validate() const {
  if (!(std::isfinite(gamma) && gamma > 1.0)) throw DomainError("higher level: gamma must exceed 1");
  if (!(std::isfinite(z_coh) && z_coh >= 0.0)) throw DomainError("higher level: z must be finite and >= 0");
}

double smooth_count(double energy) {
  check_energy(energy, "smooth_count");
  return rs_theta(energy) / std::numbers::pi + 1.0;
}

double fluctuation(double energy, const AccuracySpec& acc, double ceiling) {
  acc.validate();
  check_height(energy, ceiling, "fluctuation");
  const long double t = energy;
  auto zeta_at = [&](long double sigma) { return detail::zeta_euler_maclaurin({sigma, t}, acc); };

  // At sigma = 3, |zeta - 1| <= zeta(3) - 1 < 1, so the principal argument is the continuous one.
  constexpr long double kStart = 3.0L;
  constexpr long double kEnd = 0.5L;
  constexpr long double kMaxStep = 0.05L;
  constexpr long double kMinStep = 1e-9L;
  LComplex prev = zeta_at(kStart);
  long double phase = std::arg(prev);
  long double sigma = kStart;
  long double step = kMaxStep;
  while (sigma > kEnd) {
    const long double next_sigma = std::max(kEnd, sigma - step);
    const LComplex next = zeta_at(next_sigma);
    const long double jump = std::arg(next / prev);
    if (std::fabs(jump) > std::numbers::pi_v<long double> / 2) {
      step /= 2;
      if (step < kMinStep)
        throw NumericalError(ErrorKind::non_convergence, "fluctuation: argument tracking step underflow");
      continue;
    }
    phase += jump;
    prev = next;
    sigma = next_sigma;
    step = std::min(kMaxStep, 2 * step);
  }
  if (std::abs(prev) < acc.abs_tol)
    throw NumericalError(ErrorKind::zero_proximity, "fluctuation: E = " + std::to_string(energy) + " is at a zero of zeta");
  return static_cast<double>(phase / std::numbers::pi_v<long double>);
}

std::int64_t exact_count(double energy, const AccuracySpec& acc, double ceiling) {
  acc.validate();
  check_height(energy, ceiling, "exact_count");
  return static_cast<std::int64_t>(sign_change_brackets(energy, acc, ceiling).size());
}

std::vector<double> locate_zeros(double e_max, const AccuracySpec& acc, double ceiling, double tol) {
  acc.validate();
  check_height(e_max, ceiling, "locate_zeros");
  if (!(tol > 0.0)) throw DomainError("locate_zeros: tolerance must be > 0");
  std::vector<double> zeros;
  for (auto [a, b] : sign_change_brackets(e_max, acc, ceiling)) {
    double za = hardy(a, acc, ceiling);
    while (b - a > tol) {
      const double m = 0.5 * (a + b);
      const double zm = hardy(m, acc, ceiling);
      if (zm == 0.0) {
        a = b = m;
        break;
      }
      if ((zm > 0.0) == (za > 0.0)) {
        a = m;
        za = zm;
      } else {
        b = m;
      }
    }
    zeros.push_back(0.5 * (a + b));
  }
  if (std::adjacent_find(zeros.begin(), zeros.end(), std::greater_equal<>()) != zeros.end())
    throw NumericalError(ErrorKind::refinement_failure, "locate_zeros: refined zeros not strictly increasing");
  return zeros;
}

std::vector<CountingBreakdown> counting_table(const std::vector<double>& energies, const ModelGeometry& geom,
                                              const AccuracySpec& acc, double ceiling) {
  acc.validate();
  geom.validate();
  double top = 0.0;
  for (double e : energies) {
    check_energy(e, "counting_table");
    if (e > ceiling)
      throw Error(ErrorKind::ceiling_exceeded,
                  "counting_table: E = " + std::to_string(e) + " above ceiling " + std::to_string(ceiling));
    top = std::max(top, e);
  }
  const std::vector<double> zeros = top > 0.0 ? locate_zeros(top, acc, ceiling) : std::vector<double>{};

  std::vector<CountingBreakdown> rows;
  rows.reserve(energies.size());
  for (double e : energies) {
    CountingBreakdown row;
    row.E = e;
    row.theta = rs_theta(e);
    row.n_smooth = row.theta / std::numbers::pi + 1.0;
    row.n_exact = std::lower_bound(zeros.begin(), zeros.end(), e) - zeros.begin();
    row.n_sc = semiclassical_count(e, geom);
    if (e > 0.0) {
      row.s_fluct = fluctuation(e, acc, ceiling);
      if (std::llround(row.n_smooth + *row.s_fluct) != row.n_exact)
        throw NumericalError(ErrorKind::refinement_failure,
                             "counting_table: N-bar + S does not match the zero count at E = " + std::to_string(e));
    }
    rows.push_back(row);
  }
  return rows;
}

double semiclassical_count(double energy, const ModelGeometry& geom) {
  check_admissible(energy, geom, "semiclassical_count");
  if (energy == 0.0) return 0.0;
  const double x = energy / kTwoPi;
  return x * (geom.log_ratio() - std::log(x) + 1.0);
}

double area_count_numeric(double energy, const ModelGeometry& geom, AreaMethod method, std::uint64_t seed,
                          std::int64_t samples) {
  geom.validate();
  check_energy(energy, "area_count_numeric");
  const double L = geom.L;
  const double ell2 = geom.ell * geom.ell;
  const double c = energy * ell2;  // hyperbola xy = c
  double area = 0.0;

  if (method == AreaMethod::quadrature) {
    if (energy > 0.0) {
      const double kink = std::min(L, c / L);
      auto height = [&](double x) { return x <= 0.0 ? L : std::min(L, c / x); };
      const quad::Options opt{1e-13, 0.0, 20000};
      const auto left = quad::integrate(height, 0.0, kink, opt);
      const auto right = kink < L ? quad::integrate(height, kink, L, opt) : quad::Result<double>{0.0, 0.0, 0, true, false};
      if (!left.converged || !right.converged)
        throw NumericalError(ErrorKind::refinement_failure, "area_count_numeric: quadrature did not converge");
      area = left.value + right.value;
    }
  } else {
    constexpr std::int64_t kMaxSamples = 2'000'000'000;
    if (samples <= 0 || samples > kMaxSamples)
      throw NumericalError(ErrorKind::sample_budget,
                           "area_count_numeric: sample count must lie in [1, " + std::to_string(kMaxSamples) + "]");
    // Jittered stratification on an m x m lattice of the unit square, then
    // plain sampling for the remainder. Each lattice row has its own
    // generator seeded from (seed, row), so rows are independent streams.
    const double frac = c / (L * L);
    const auto m = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(samples))));
    auto uniform = [](std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; };
    std::int64_t hits = 0;
    for (std::int64_t row = 0; row <= m; ++row) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(row >> 32)};
      std::mt19937_64 gen(seq);
      if (row < m) {
        for (std::int64_t col = 0; col < m; ++col) {
          const double u = (static_cast<double>(row) + uniform(gen)) / static_cast<double>(m);
          const double v = (static_cast<double>(col) + uniform(gen)) / static_cast<double>(m);
          hits += (u * v < frac) ? 1 : 0;
        }
      } else {
        for (std::int64_t k = m * m; k < samples; ++k) {
          const double u = uniform(gen);
          const double v = uniform(gen);
          hits += (u * v < frac) ? 1 : 0;
        }
      }
    }
    area = static_cast<double>(hits) / static_cast<double>(samples) * L * L;
  }
  return area / (kTwoPi * ell2);
}

MissingStates missing_states(double energy, const ModelGeometry& geom) {
  check_admissible(energy, geom, "missing_states");
  return {energy / kTwoPi * geom.log_ratio() + 1.0, smooth_count(energy)};
}

double higher_level_count(double energy, const ModelGeometry& geom, const HigherLevelParams& hl) {
  hl.validate();
  const double base = semiclassical_count(energy, geom);
  if (hl.z_coh == 0.0) return base;
  if (energy == 0.0) throw DomainError("higher_level_count: E must be > 0 when z != 0");
  const double weight = hl.gamma * hl.z_coh * hl.z_coh / kTwoPi;
  return base + weight * (geom.log_ratio() - std::log(energy / kTwoPi));
}

}  // namespace landau
