#pragma once

// Complex special functions: log-Gamma, Kummer's confluent hypergeometric
// function M(a, b, z), the Riemann-Siegel phase theta(E) and zeta on the
// critical line.

#include <complex>

#include "landau/defaults.hpp"

namespace landau {

using Complex = std::complex<double>;

struct AccuracySpec {
  double rel_tol = defaults::kRelTol;
  double abs_tol = defaults::kAbsTol;
  int max_terms = defaults::kMaxTerms;

  // Throws DomainError unless 0 < rel_tol < 1, abs_tol >= 0 and max_terms > 0.
  void validate() const;
};

// A complex number stored as mantissa * exp(log_scale). Used where the value
// itself would overflow a double, e.g. M(a, b, z) for Re z in the hundreds.
struct ScaledComplex {
  Complex mantissa;
  double log_scale = 0.0;

  // Throws NumericalError(overflow) when the value is not representable.
  Complex value() const;
  // Returns mantissa * exp(log_scale + extra_log_scale) without intermediate overflow.
  Complex value_times_exp(double extra_log_scale) const;
};

// Principal branch of log Gamma(z), continuous in the right half-plane.
// Evaluated directly by Stirling's series after an upward shift, never as
// log(Gamma(z)). Throws on poles (z = 0, -1, -2, ...) and when |z| is out of range.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

// Kummer's function M(a, b, z) = sum (a)_n z^n / ((b)_n n!).
// For Re z < 0 the Kummer transformation M(a,b,z) = e^z M(b-a, b, -z) is
// applied first. The series is summed in double precision when the estimated
// rounding error meets acc.rel_tol, otherwise in MPFR arithmetic with just
// enough bits to absorb the cancellation.
ScaledComplex kummer_m_scaled(Complex a, Complex b, Complex z, const AccuracySpec& acc = {});
Complex kummer_m(Complex a, Complex b, Complex z, const AccuracySpec& acc = {});

// theta(E) = Im log Gamma(1/4 + iE/2) - (E/2) log pi. Exactly odd in E.
double rs_theta(double energy);

// theta_odd(E) = Im log Gamma(3/4 + iE/2) - (E/2) log pi, the analogue of
// theta(E) for the odd sector. Exactly odd in E.
double rs_theta_odd(double energy);

// zeta(1/2 + iE) via Euler-Maclaurin summation, 0 <= E <= ceiling.
Complex zeta_critical_line(double energy, const AccuracySpec& acc = {},
                           double ceiling = defaults::kZetaCeiling);

// Hardy's function Z(E) = e^{i theta(E)} zeta(1/2 + iE). Real up to rounding;
// the imaginary part is returned so callers can check it.
Complex hardy_z(double energy, const AccuracySpec& acc = {},
                double ceiling = defaults::kZetaCeiling);

namespace detail {

// zeta(s) for any s != 1 by Euler-Maclaurin, accumulated in long double. Used
// by the fluctuation term, which needs zeta on horizontal lines sigma + iE.
std::complex<long double> zeta_euler_maclaurin(std::complex<long double> s, const AccuracySpec& acc);

// Long-double log Gamma used where absolute phase accuracy matters.
std::complex<long double> log_gamma_ld(std::complex<long double> z);

// theta(E) and theta_odd(E) in long double.
long double rs_theta_ld(double energy);
long double rs_theta_odd_ld(double energy);

}  // namespace detail

}  // namespace landau
