#include "landau/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "landau/errors.hpp"

namespace landau {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::ceiling_exceeded: return "ceiling exceeded";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::zero_proximity: return "zero proximity";
    case ErrorKind::refinement_failure: return "refinement failure";
    case ErrorKind::bracketing_failure: return "bracketing failure";
    case ErrorKind::step_underflow: return "step underflow";
    case ErrorKind::sample_budget: return "sample budget";
    case ErrorKind::non_closure: return "non-closure";
  }
  return "error";
}

void AccuracySpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) throw DomainError("abs_tol must be finite and >= 0");
  if (max_terms <= 0) throw DomainError("max_terms must be positive");
}

Complex ScaledComplex::value() const { return value_times_exp(0.0); }

Complex ScaledComplex::value_times_exp(double extra_log_scale) const {
  if (mantissa == Complex(0.0, 0.0)) return mantissa;
  const double s = log_scale + extra_log_scale;
  const double magnitude = std::log(std::abs(mantissa)) + s;
  if (magnitude > 709.0) throw NumericalError(ErrorKind::overflow, "scaled value exceeds double range");
  if (magnitude < -745.0) return {0.0, 0.0};
  return mantissa * std::exp(s);
}

namespace {

// B_{2k} for k = 1..13.
constexpr std::array<long double, 13> kBernoulli = {
    1.0L / 6.0L,         -1.0L / 30.0L,        1.0L / 42.0L,           -1.0L / 30.0L,
    5.0L / 66.0L,        -691.0L / 2730.0L,    7.0L / 6.0L,            -3617.0L / 510.0L,
    43867.0L / 798.0L,   -174611.0L / 330.0L,  854513.0L / 138.0L,     -236364091.0L / 2730.0L,
    8553103.0L / 6.0L};

template <typename T>
std::complex<T> log_gamma_impl(std::complex<T> z) {
  using C = std::complex<T>;
  const T x = z.real();
  const T y = z.imag();
  if (!std::isfinite(static_cast<double>(x)) || !std::isfinite(static_cast<double>(y)))
    throw DomainError("log_gamma: non-finite argument");
  if (y == 0 && x <= 0 && x == std::floor(x))
    throw Error(ErrorKind::pole, "log_gamma: pole at non-positive integer " + std::to_string(static_cast<double>(x)));
  if (std::abs(z) > T(1e250)) throw Error(ErrorKind::overflow, "log_gamma: |z| out of range");
  if (x < T(-1e7)) throw Error(ErrorKind::overflow, "log_gamma: Re z too negative for the shift recurrence");

  // Shift upward: log Gamma(z) = log Gamma(z + n) - sum_{k<n} log(z + k).
  // Each log is principal, so the sum is continuous off the negative axis.
  C shift_sum{0, 0};
  C w = z;
  while (w.real() < 0 || std::abs(w) < T(10)) {
    shift_sum += std::log(w);
    w += T(1);
  }

  const T half_log_two_pi = T(0.5) * std::log(T(2) * std::numbers::pi_v<T>);
  C result = (w - T(0.5)) * std::log(w) - w + half_log_two_pi;
  const C inv = T(1) / w;
  const C inv2 = inv * inv;
  C power = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const T coeff = static_cast<T>(kBernoulli[k - 1]) / static_cast<T>((2 * k) * (2 * k - 1));
    const C term = coeff * power;
    result += term;
    if (std::abs(term) < std::numeric_limits<T>::epsilon() * T(1e-3) * std::abs(result)) break;
    power *= inv2;
  }
  return result - shift_sum;
}

long double theta_from(long double shift, double energy) {
  const long double e = std::fabs(static_cast<long double>(energy));
  const long double lg = log_gamma_impl<long double>({shift, e / 2}).imag();
  const long double theta = lg - e / 2 * std::log(std::numbers::pi_v<long double>);
  return energy < 0 ? -theta : theta;
}

}  // namespace

Complex log_gamma(Complex z) { return log_gamma_impl<double>(z); }

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

double rs_theta(double energy) {
  if (!std::isfinite(energy)) throw DomainError("rs_theta: non-finite energy");
  return static_cast<double>(theta_from(0.25L, energy));
}

double rs_theta_odd(double energy) {
  if (!std::isfinite(energy)) throw DomainError("rs_theta_odd: non-finite energy");
  return static_cast<double>(theta_from(0.75L, energy));
}

namespace detail {

std::complex<long double> log_gamma_ld(std::complex<long double> z) { return log_gamma_impl<long double>(z); }

long double rs_theta_ld(double energy) {
  if (!std::isfinite(energy)) throw DomainError("rs_theta: non-finite energy");
  return theta_from(0.25L, energy);
}

long double rs_theta_odd_ld(double energy) {
  if (!std::isfinite(energy)) throw DomainError("rs_theta_odd: non-finite energy");
  return theta_from(0.75L, energy);
}

}  // namespace detail

}  // namespace landau
