#pragma once

// Classical charged particle in a uniform magnetic field B (Landau gauge,
// charge -e) and the electric potential phi = -lambda x y:
//   H = p_x^2/2mu + (p_y + eBx/c)^2/2mu + e lambda x y.

#include <array>
#include <limits>
#include <vector>

#include "landau/counting.hpp"

namespace landau {

struct PhysicalParams {
  double B = 1.0;
  double lambda = 0.0;
  double mu = 1.0;
  double e_charge = 1.0;
  double c_light = 1.0;

  // All finite; B, mu, e, c > 0 and lambda >= 0 (lambda = 0 is the pure
  // Landau problem).
  void validate() const;
  // eB / (mu c)
  double cyclotron_frequency() const { return e_charge * B / (mu * c_light); }
  // theta with sinh(2 theta) = 2 lambda mu c^2 / (e B^2)
  double mixing_angle() const;
};

struct PhaseState {
  double x = 0.0, y = 0.0, p_x = 0.0, p_y = 0.0, t = 0.0;
};

struct Trajectory {
  std::vector<PhaseState> samples;
  std::vector<double> energy_series;
  // Set when integration stopped early because |x| or |y| exceeded the cap.
  bool position_cap_reached = false;
};

struct NormalModes {
  double omega_c = 0.0;
  double omega_h_abs = 0.0;
};

// omega_c = (eB/mu c) cosh theta, |omega_h| = (eB/mu c) sinh theta.
NormalModes normal_mode_frequencies(const PhysicalParams& p);

double hamiltonian(const PhaseState& s, const PhysicalParams& p);

// Integrates Hamilton's equations with an adaptive Runge-Kutta-Fehlberg 7(8) stepper
// (absolute and relative tolerance tol), returning n_samples equally spaced
// samples on [0, t_final] starting at s0.t. Stops early, flagging the
// trajectory, once |x| or |y| exceeds position_cap. Throws step_underflow if
// the stepper cannot make progress.
Trajectory integrate_trajectory(const PhaseState& s0, const PhysicalParams& p, double t_final,
                                double tol = defaults::kIntegratorTol, int n_samples = defaults::kTrajectorySamples,
                                double position_cap = std::numeric_limits<double>::infinity());

// Canonical variables of the cyclotron (q, p) and hyperbolic (Q, P) modes in
// units hbar = ell = 1: q = x + p_y, p = p_x, Q = -p_y, P = y + p_x.
struct CanonicalState {
  double q = 0.0, p = 0.0, Q = 0.0, P = 0.0;
};

CanonicalState canonical_transform(const PhaseState& s);

// Jacobian d(q, p, Q, P) / d(x, p_x, y, p_y).
std::array<std::array<int, 4>, 4> canonical_jacobian();

// H_c = (omega / 2)(p^2 + q^2)
double cyclotron_hamiltonian(const CanonicalState& c, double omega);
// H_h = |omega_h| Q P (classical value of the Weyl-ordered product)
double hyperbolic_hamiltonian(const CanonicalState& c, double omega_h_abs);
// The full Hamiltonian rewritten in canonical variables,
//   (eB/mu c)/2 (p^2 + q^2) + e lambda (q + Q)(P - p),
// valid in units where eB/c = 1 (hbar = ell = 1). Throws DomainError otherwise.
double decomposed_hamiltonian(const CanonicalState& c, const PhysicalParams& p);

struct CoherentSample {
  double Q = 0.0, q = 0.0, p = 0.0;
};

// q = sqrt(2) z cos(gamma log Q), p = -sqrt(2) z sin(gamma log Q) on n
// log-uniform points of [Q_min, Q_max].
std::vector<CoherentSample> coherent_trajectory(double z_coh, double gamma, double q_min, double q_max, int n);

// Line integral of p dq along the coherent gyration for Q in [Q_a, Q_b].
double gyration_action(double z_coh, double gamma, double q_a, double q_b);

struct ActionIntegral {
  double action_Q = 0.0;  // area enclosed by the hyperbolic orbit in one quadrant, in units of hbar
  double action_q = 0.0;  // gyration action over one box traversal, Q in (E l^2/L, L)
};

// Both contributions to the action of the closed orbit at energy E (units of
// hbar, so the state count is (action_Q + action_q) / 2 pi). Throws non_closure
// if E > L^2/l^2.
ActionIntegral action_integral(double energy, const ModelGeometry& geom, const HigherLevelParams& hl);

}  // namespace landau
