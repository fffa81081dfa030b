#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature for real- or
// complex-valued integrands. The interval with the largest error estimate is
// bisected until the summed estimate meets max(abs_tol, rel_tol * |I|); the
// tolerance is relative to the integral itself, not to the integral of |f|,
// so oscillatory integrands with heavy cancellation are refined accordingly.
// The abscissa type Real may be any floating type Boost.Math supports.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace landau::quad {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

template <typename T, typename Real = double>
struct Result {
  T value{};
  Real error = 0;
  int intervals = 0;
  bool converged = false;
  // Stopped because every remaining error estimate sat at the rounding floor.
  bool roundoff_limited = false;
};

namespace detail {

template <typename T, typename Real>
struct Panel {
  Real a;
  Real b;
  T kronrod;
  Real error;
  Real abs_integral;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename Real>
Real rounding_floor(const Real& abs_integral) {
  return 50 * std::numeric_limits<Real>::epsilon() * abs_integral;
}

template <typename Real, typename F>
auto gk21(F& f, const Real& a, const Real& b) {
  using std::abs;
  using T = std::decay_t<decltype(f(a))>;
  const auto& ka = boost::math::quadrature::gauss_kronrod<Real, 21>::abscissa();
  const auto& kw = boost::math::quadrature::gauss_kronrod<Real, 21>::weights();
  const auto& gw = boost::math::quadrature::gauss<Real, 10>::weights();
  const Real center = (a + b) / 2;
  const Real half = (b - a) / 2;
  const T f0 = f(center);
  T kronrod = kw[0] * f0;
  T gauss{};
  Real abs_sum = kw[0] * abs(f0);
  for (std::size_t i = 1; i < ka.size(); ++i) {
    const Real dx = half * ka[i];
    const T fl = f(center - dx);
    const T fr = f(center + dx);
    kronrod += kw[i] * (fl + fr);
    abs_sum += kw[i] * (abs(fl) + abs(fr));
    if (i % 2 == 1) gauss += gw[i / 2] * (fl + fr);
  }
  kronrod *= half;
  gauss *= half;
  const Real abs_integral = abs(half) * abs_sum;
  // Panels already at rounding level are not worth splitting further.
  Real error = abs(kronrod - gauss);
  const Real roundoff = rounding_floor(abs_integral);
  if (error < roundoff) error = roundoff;
  return Panel<T, Real>{a, b, kronrod, error, abs_integral};
}

}  // namespace detail

template <typename Real = double, typename F>
auto integrate(F&& f, const Real& a, const Real& b, const Options& opt = {}) {
  using std::abs;
  using T = std::decay_t<decltype(f(a))>;
  auto target = [&](const T& value) {
    const Real rel = Real(opt.rel_tol) * abs(value);
    const Real floor = Real(opt.abs_tol);
    return rel > floor ? rel : floor;
  };
  std::priority_queue<detail::Panel<T, Real>> panels;
  auto first = detail::gk21<Real>(f, a, b);
  T total = first.kronrod;
  Real total_error = first.error;
  panels.push(first);
  int count = 1;
  Result<T, Real> out;
  for (;;) {
    if (total_error <= target(total)) {
      out.converged = true;
      break;
    }
    const auto worst = panels.top();
    if (worst.error <= detail::rounding_floor(worst.abs_integral)) {
      out.converged = true;
      out.roundoff_limited = true;
      break;
    }
    if (count >= opt.max_intervals) break;
    panels.pop();
    const Real mid = (worst.a + worst.b) / 2;
    auto left = detail::gk21<Real>(f, worst.a, mid);
    auto right = detail::gk21<Real>(f, mid, worst.b);
    total += left.kronrod + right.kronrod - worst.kronrod;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  T sum{};
  Real err = 0;
  while (!panels.empty()) {
    sum += panels.top().kronrod;
    err += panels.top().error;
    panels.pop();
  }
  out.value = sum;
  out.error = err;
  out.intervals = count;
  if (!out.converged) out.converged = err <= target(sum);
  return out;
}

}  // namespace landau::quad
