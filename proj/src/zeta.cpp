// zeta(s) by Euler-Maclaurin summation:
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_{k=1}^{K} B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1} + R_K,
//   |R_K| <= |T_{K+1}| |s+2K+1| / (sigma+2K+1).
// Accumulated in long double: the phases E log n reach ~10^3 rad at the
// ceiling, which costs ~10^-13 absolute in double.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "landau/errors.hpp"
#include "landau/special_functions.hpp"

namespace landau {

namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxBernoulliTerms = 60;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}, k = 1..kMaxBernoulliTerms.
const std::array<long double, kMaxBernoulliTerms + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<long double, kMaxBernoulliTerms + 1> c{};
    const long double pi = std::numbers::pi_v<long double>;
    const long double two_pi = 2 * pi;
    for (int k = 1; k <= kMaxBernoulliTerms; ++k) {
      long double zeta2k = 0;
      switch (k) {
        case 1: zeta2k = pi * pi / 6; break;
        case 2: zeta2k = std::pow(pi, 4.0L) / 90; break;
        case 3: zeta2k = std::pow(pi, 6.0L) / 945; break;
        case 4: zeta2k = std::pow(pi, 8.0L) / 9450; break;
        default:
          for (int n = 200; n >= 1; --n) zeta2k += std::pow(static_cast<long double>(n), -2.0L * k);
      }
      const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
      c[k] = sign * 2 * zeta2k / std::pow(two_pi, 2.0L * k);
    }
    return c;
  }();
  return table;
}

}  // namespace

namespace detail {

LComplex zeta_euler_maclaurin(LComplex s, const AccuracySpec& acc) {
  if (s == LComplex(1.0L, 0.0L)) throw Error(ErrorKind::pole, "zeta: pole at s = 1");
  const auto& coeff = bernoulli_over_factorial();
  const long double sigma = s.real();
  const long double abs_s = std::abs(s);
  const int n_terms = 20 + static_cast<int>(std::ceil(abs_s / std::numbers::pi_v<long double>));
  if (n_terms > acc.max_terms) throw NumericalError(ErrorKind::non_convergence, "zeta: term budget exceeded");

  LComplex head{0, 0};
  for (int n = n_terms - 1; n >= 1; --n) head += std::exp(-s * std::log(static_cast<long double>(n)));

  const long double big_n = n_terms;
  const long double log_n = std::log(big_n);
  const LComplex n_pow_minus_s = std::exp(-s * log_n);
  LComplex result = head + n_pow_minus_s * big_n / (s - 1.0L) + n_pow_minus_s / 2.0L;

  // T_k = c_k * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  LComplex rising = s;                       // s (s+1) ... (s+2k-2) for k = 1
  LComplex power = n_pow_minus_s / big_n;    // N^{-s-1}
  const long double inv_n2 = 1.0L / (big_n * big_n);
  const long double floor_rel = 1e-19L;
  for (int k = 1; k <= kMaxBernoulliTerms - 1; ++k) {
    const LComplex term = coeff[k] * rising * power;
    result += term;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    power *= inv_n2;
    const LComplex next = coeff[k + 1] * rising * power;
    const long double bound =
        std::abs(next) * std::abs(s + static_cast<long double>(2 * k + 1)) / (sigma + 2 * k + 1);
    const long double target =
        std::min<long double>(acc.abs_tol, acc.rel_tol * std::abs(result)) * 1e-3L;
    if (sigma + 2 * k + 1 > 0 && (bound <= target || bound <= floor_rel * std::abs(result))) return result;
  }
  throw NumericalError(ErrorKind::non_convergence, "zeta: Euler-Maclaurin remainder did not meet tolerance");
}

}  // namespace detail

namespace {

void check_height(double energy, double ceiling) {
  if (!std::isfinite(energy) || energy < 0.0) throw DomainError("zeta_critical_line: E must be finite and >= 0");
  if (energy > ceiling)
    throw Error(ErrorKind::ceiling_exceeded,
                "zeta_critical_line: E = " + std::to_string(energy) + " above ceiling " + std::to_string(ceiling));
}

}  // namespace

Complex zeta_critical_line(double energy, const AccuracySpec& acc, double ceiling) {
  acc.validate();
  check_height(energy, ceiling);
  const LComplex z = detail::zeta_euler_maclaurin({0.5L, static_cast<long double>(energy)}, acc);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Complex hardy_z(double energy, const AccuracySpec& acc, double ceiling) {
  acc.validate();
  check_height(energy, ceiling);
  const LComplex z = detail::zeta_euler_maclaurin({0.5L, static_cast<long double>(energy)}, acc);
  const long double theta = detail::rs_theta_ld(energy);
  const LComplex hardy = LComplex(std::cos(theta), std::sin(theta)) * z;
  return {static_cast<double>(hardy.real()), static_cast<double>(hardy.imag())};
}

}  // namespace landau
