#include "landau/classical_dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"

namespace landau {

namespace {

using State = std::array<double, 4>;  // x, y, p_x, p_y

struct CapReached {};

bool all_finite(std::initializer_list<double> xs) {
  for (double v : xs)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

void PhysicalParams::validate() const {
  if (!all_finite({B, lambda, mu, e_charge, c_light})) throw DomainError("physical parameters must be finite");
  if (!(B > 0.0 && mu > 0.0 && e_charge > 0.0 && c_light > 0.0))
    throw DomainError("B, mu, e and c must be > 0");
  if (lambda < 0.0) throw DomainError("lambda must be >= 0");
}

double PhysicalParams::mixing_angle() const {
  validate();
  const double theta = 0.5 * std::asinh(2.0 * lambda * mu * c_light * c_light / (e_charge * B * B));
  if (!std::isfinite(theta)) throw DomainError("mixing angle is not finite");
  return theta;
}

NormalModes normal_mode_frequencies(const PhysicalParams& p) {
  const double theta = p.mixing_angle();
  const double omega = p.cyclotron_frequency();
  return {omega * std::cosh(theta), omega * std::sinh(theta)};
}

double hamiltonian(const PhaseState& s, const PhysicalParams& p) {
  const double kinetic_y = s.p_y + p.e_charge * p.B * s.x / p.c_light;
  return (s.p_x * s.p_x + kinetic_y * kinetic_y) / (2.0 * p.mu) + p.e_charge * p.lambda * s.x * s.y;
}

Trajectory integrate_trajectory(const PhaseState& s0, const PhysicalParams& p, double t_final, double tol,
                                int n_samples, double position_cap) {
  p.validate();
  if (!all_finite({s0.x, s0.y, s0.p_x, s0.p_y, s0.t})) throw DomainError("initial state must be finite");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) throw DomainError("t_final must be finite and > 0");
  if (!(tol > 1e-14 && tol < 1e-6)) throw DomainError("tol must lie in (1e-14, 1e-6)");
  if (n_samples < 2) throw DomainError("need at least 2 samples");
  if (!(position_cap > 0.0)) throw DomainError("position cap must be > 0");

  const double field = p.e_charge * p.B / p.c_light;
  const double force = p.e_charge * p.lambda;
  auto rhs = [&](const State& s, State& ds, double) {
    const double kinetic_y = s[3] + field * s[0];
    ds[0] = s[2] / p.mu;
    ds[1] = kinetic_y / p.mu;
    ds[2] = -field * kinetic_y / p.mu - force * s[1];
    ds[3] = -force * s[0];
  };

  std::vector<double> times(n_samples);
  for (int i = 0; i < n_samples; ++i)
    times[i] = s0.t + (i + 1 == n_samples ? t_final : t_final * i / (n_samples - 1));

  Trajectory traj;
  traj.samples.reserve(n_samples);
  traj.energy_series.reserve(n_samples);
  auto observe = [&](const State& s, double t) {
    const PhaseState ps{s[0], s[1], s[2], s[3], t};
    traj.samples.push_back(ps);
    traj.energy_series.push_back(hamiltonian(ps, p));
    if (std::fabs(s[0]) > position_cap || std::fabs(s[1]) > position_cap) throw CapReached{};
  };

  namespace ode = boost::numeric::odeint;
  State state{s0.x, s0.y, s0.p_x, s0.p_y};
  // Fehlberg 7(8): its local error estimate is conservative enough that the
  // energy error over long runs stays below tol.
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_fehlberg78<State>());
  const double dt0 = t_final / (10.0 * n_samples);
  try {
    ode::integrate_times(stepper, rhs, state, times.begin(), times.end(), dt0, observe, ode::max_step_checker(100000));
  } catch (const CapReached&) {
    traj.position_cap_reached = true;
  } catch (const ode::odeint_error& err) {
    throw NumericalError(ErrorKind::step_underflow, std::string("integrate_trajectory: ") + err.what());
  }
  for (const auto& s : traj.samples)
    if (!all_finite({s.x, s.y, s.p_x, s.p_y}))
      throw NumericalError(ErrorKind::step_underflow, "integrate_trajectory: state left the representable range");
  return traj;
}

CanonicalState canonical_transform(const PhaseState& s) { return {s.x + s.p_y, s.p_x, -s.p_y, s.y + s.p_x}; }

std::array<std::array<int, 4>, 4> canonical_jacobian() {
  // columns: x, p_x, y, p_y
  return {{{1, 0, 0, 1},    // q
           {0, 1, 0, 0},    // p
           {0, 0, 0, -1},   // Q
           {0, 1, 1, 0}}};  // P
}

double cyclotron_hamiltonian(const CanonicalState& c, double omega) { return 0.5 * omega * (c.p * c.p + c.q * c.q); }

double hyperbolic_hamiltonian(const CanonicalState& c, double omega_h_abs) { return omega_h_abs * c.Q * c.P; }

double decomposed_hamiltonian(const CanonicalState& c, const PhysicalParams& p) {
  p.validate();
  const double field = p.e_charge * p.B / p.c_light;
  if (std::fabs(field - 1.0) > 1e-15) throw DomainError("decomposed_hamiltonian: requires eB/c = 1");
  return cyclotron_hamiltonian(c, p.cyclotron_frequency()) + p.e_charge * p.lambda * (c.q + c.Q) * (c.P - c.p);
}

std::vector<CoherentSample> coherent_trajectory(double z_coh, double gamma, double q_min, double q_max, int n) {
  if (!all_finite({z_coh, gamma, q_min, q_max})) throw DomainError("coherent_trajectory: arguments must be finite");
  if (!(gamma > 0.0)) throw DomainError("coherent_trajectory: gamma must be > 0");
  if (!(q_min > 0.0 && q_min < q_max)) throw DomainError("coherent_trajectory: need 0 < Q_min < Q_max");
  if (n < 2) throw DomainError("coherent_trajectory: need at least 2 samples");
  const double amp = std::numbers::sqrt2 * z_coh;
  const double u0 = std::log(q_min);
  const double u1 = std::log(q_max);
  std::vector<CoherentSample> out(n);
  for (int i = 0; i < n; ++i) {
    const double u = i + 1 == n ? u1 : u0 + (u1 - u0) * i / (n - 1);
    const double phase = gamma * u;
    out[i] = {std::exp(u), amp * std::cos(phase), 0.0 - amp * std::sin(phase)};
  }
  out.front().Q = q_min;
  out.back().Q = q_max;
  return out;
}

double gyration_action(double z_coh, double gamma, double q_a, double q_b) {
  if (!all_finite({z_coh, gamma, q_a, q_b})) throw DomainError("gyration_action: arguments must be finite");
  if (!(q_a > 0.0 && q_b > 0.0)) throw DomainError("gyration_action: Q must be > 0");
  if (z_coh == 0.0) return 0.0;
  const double amp = std::numbers::sqrt2 * z_coh;
  // Along u = log Q: p(u) dq/du with q, p from the gyration.
  auto integrand = [&](double u) {
    const double p = -amp * std::sin(gamma * u);
    const double dq_du = -amp * gamma * std::sin(gamma * u);
    return p * dq_du;
  };
  const double ua = std::log(q_a);
  const double ub = std::log(q_b);
  // One panel per half gyration keeps the adaptive driver away from aliasing.
  const double half_period = std::numbers::pi / std::fabs(gamma);
  const auto panels = std::max<long>(1, std::lround(std::ceil(std::fabs(ub - ua) / half_period)));
  const quad::Options opt{1e-13, 1e-300, 200};
  double total = 0.0;
  for (long k = 0; k < panels; ++k) {
    const double a = ua + (ub - ua) * static_cast<double>(k) / static_cast<double>(panels);
    const double b = k + 1 == panels ? ub : ua + (ub - ua) * static_cast<double>(k + 1) / static_cast<double>(panels);
    const auto r = quad::integrate(integrand, a, b, opt);
    if (!r.converged) throw NumericalError(ErrorKind::non_convergence, "gyration_action: quadrature did not converge");
    total += r.value;
  }
  return total;
}

ActionIntegral action_integral(double energy, const ModelGeometry& geom, const HigherLevelParams& hl) {
  geom.validate();
  hl.validate();
  if (!std::isfinite(energy) || energy < 0.0) throw DomainError("action_integral: E must be finite and >= 0");
  if (energy > geom.e_max())
    throw Error(ErrorKind::non_closure, "action_integral: the orbit at E = " + std::to_string(energy) +
                                            " leaves the box (E > L^2/ell^2)");
  ActionIntegral out;
  out.action_Q = 2.0 * std::numbers::pi * area_count_numeric(energy, geom, AreaMethod::quadrature);
  if (hl.z_coh == 0.0) return out;
  if (energy == 0.0) throw Error(ErrorKind::non_closure, "action_integral: the E = 0 orbit does not close");
  // Q runs over one traversal of the box edge to edge, from E l / L to L / l.
  const double q_a = energy * geom.ell / geom.L;
  const double q_b = geom.L / geom.ell;
  out.action_q = gyration_action(hl.z_coh, hl.gamma, q_a, q_b);
  return out;
}

}  // namespace landau
