#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: multiprecision (50 digits) where the library works in double,
// different shift thresholds, series lengths and Bernoulli sources.

#include <complex>
#include <vector>

namespace oracle {

// log Gamma(z) via recurrence to Re z >= 40 and a 40-term Stirling series.
std::complex<double> log_gamma(std::complex<double> z);

// theta(E) = Im log Gamma(1/4 + iE/2) - (E/2) log pi, to ~40 digits, rounded.
double theta(double energy);

// N-bar(E) - (E/2pi log(E/2pi) - E/2pi) evaluated at 50 digits.
double smooth_count_offset(double energy);

// Direct term-by-term sum of M(a, b, z) with a stopping rule ten times
// tighter than the library's (no Kummer transformation).
std::complex<double> kummer_m(std::complex<double> a, std::complex<double> b, std::complex<double> z);

// zeta(s) by Euler-Maclaurin at 50 digits with twice the library's cutoff N.
std::complex<double> zeta(std::complex<double> s);

// Hardy Z(t) in long double: Euler-Maclaurin with doubled cutoff and theta
// from an independent Stirling sum.
long double hardy_z(long double t);

// Abscissae where hardy_z changes sign on (0, E), from a uniform scan with
// step h, each bisected to 1e-10.
std::vector<double> z_sign_changes(double energy, double h);

// Mean spacing of the downward zero crossings of a sampled signal, each
// located by bisection on the cubic through the four nearest samples.
double crossing_period(const std::vector<double>& t, const std::vector<double>& v);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oracle
