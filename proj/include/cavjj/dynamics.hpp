#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cavjj/ode.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

// Point of the reduced phase space. Phases are kept unwrapped.
struct State {
  double z_b = 0.0;
  double phi_b = 0.0;
  double z_c = 0.0;
  double phi_c = 0.0;

  [[nodiscard]] std::array<double, 4> to_array() const { return {z_b, phi_b, z_c, phi_c}; }
  static State from_array(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }

  // Both species at the same (z, φ).
  static State symmetric(double z, double phi) { return {z, phi, z, phi}; }
};

// Time derivative of a State.
struct StateRate {
  double phi_b_dot = 0.0;
  double z_b_dot = 0.0;
  double phi_c_dot = 0.0;
  double z_c_dot = 0.0;

  [[nodiscard]] double max_abs() const;
};

struct Energies {
  double h_b = 0.0;
  double h_c = 0.0;
};

// |z| at which the equations of motion are treated as singular.
inline constexpr double kSingularMargin = 1e-12;

struct Trajectory {
  std::vector<double> times;  // reduced time 2Ωt
  std::vector<State> states;
  std::vector<Energies> energies;
  std::vector<double> total_energy;  // conserved function of the coupled flow
  std::vector<double> photons;       // tilt units, tilt_scale·|α|²
  ode::StepStats step_stats;
  bool singular = false;             // aborted at |z| → 1; samples up to the abort are kept
  std::string abort_reason;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

// Reduced equations of motion. Throws SingularityError when |z| >= 1 − kSingularMargin.
[[nodiscard]] StateRate eom_rhs(const State& x, const ReducedParams& rp);

// Per-component energies H_b, H_c. The tilt term is zero when E = 0.
[[nodiscard]] Energies hamiltonian(const State& x, const ReducedParams& rp);

// H_b + H_c with the shared inter-species and cavity terms counted once. This generates the
// coupled flow (ż_n = −∂K/∂φ_n, φ̇_n = ∂K/∂z_n) and is conserved by it; the individual H_b
// and H_c are conserved only when the species decouple (r_bc = 0 and Ã = 0).
[[nodiscard]] double total_energy(const State& x, const ReducedParams& rp);

struct IntegrationControl {
  ode::StepControl step{};
};

// Integrates the reduced model. Throws SingularityError if x0 is singular; a singularity reached
// during the run returns the partial trajectory with `singular` set.
[[nodiscard]] Trajectory integrate(const State& x0, const ReducedParams& rp, double t_end,
                                   const IntegrationControl& control = {});

// Oscillation period of z_b from same-direction crossings of its mean. Throws
// NonOscillatoryError with fewer than three crossings.
[[nodiscard]] double period_estimate(const Trajectory& traj);

enum class Regime { josephson, self_trapped_oscillating_phase, self_trapped_running_phase };

struct RegimeThresholds {
  double mean_z = 0.05;            // |<z>| below this counts as symmetric
  double phase_drift = 6.283185307179586;  // net φ winding above this counts as running
  double min_periods = 5.0;
};

struct RegimeReport {
  Regime regime = Regime::josephson;
  bool inconclusive = false;
  double mean_z = 0.0;
  double phase_drift = 0.0;
  double periods_spanned = 0.0;  // 0 when no period could be measured
};

[[nodiscard]] RegimeReport classify_regime(const Trajectory& traj, const RegimeThresholds& th = {});

[[nodiscard]] std::string to_string(Regime r);

}  // namespace cavjj
