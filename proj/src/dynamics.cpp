#include "cavjj/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cavjj/cavity.hpp"
#include "cavjj/errors.hpp"

namespace cavjj {

namespace {

void check_interior(double z, const char* name) {
  if (!(std::abs(z) < 1.0 - kSingularMargin)) {
    throw SingularityError(std::string("eom_rhs: |") + name + "| reached the pole at 1");
  }
}

double component_energy(double z, double phi, double z_other, double r, const ReducedParams& rp,
                        double tilt_energy) {
  const double w2 = std::max(0.0, 1.0 - z * z);
  const double c = std::cos(phi);
  return -std::sqrt(w2) * c + r * z * z / 2.0 + rp.r_bc * z * z_other / 2.0 - rp.lambda * z * z / 2.0 -
         rp.lambda * w2 * c * c + tilt_energy;
}

double tilt_energy(const State& x, const ReducedParams& rp) {
  if (rp.e_mirror_detune == 0.0) return 0.0;
  return rp.tilt_scale * tilt_potential(x.z_b, x.z_c, rp);
}

// Crossing times of `values` through `level`, linearly interpolated, split by direction.
void mean_crossings(const std::vector<double>& t, const std::vector<double>& values, double level,
                    std::vector<double>& up, std::vector<double>& down) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double a = values[i - 1] - level;
    const double b = values[i] - level;
    if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
      const double tc = t[i - 1] + (t[i] - t[i - 1]) * a / (a - b);
      (a < 0.0 ? up : down).push_back(tc);
    }
  }
}

}  // namespace

double StateRate::max_abs() const {
  return std::max({std::abs(phi_b_dot), std::abs(z_b_dot), std::abs(phi_c_dot), std::abs(z_c_dot)});
}

StateRate eom_rhs(const State& x, const ReducedParams& rp) {
  check_interior(x.z_b, "z_b");
  check_interior(x.z_c, "z_c");
  const double force = tilt_force(x.z_b, x.z_c, rp);

  const auto phase_rate = [&](double z, double phi, double z_other, double r) {
    const double w = std::sqrt(1.0 - z * z);
    return z / w * std::cos(phi) + r * z + rp.r_bc * z_other / 2.0 + rp.lambda * z * std::cos(2.0 * phi) + force;
  };
  const auto imbalance_rate = [&](double z, double phi) {
    const double w2 = 1.0 - z * z;
    return -std::sqrt(w2) * std::sin(phi) - rp.lambda * w2 * std::sin(2.0 * phi);
  };

  return {phase_rate(x.z_b, x.phi_b, x.z_c, rp.r_b), imbalance_rate(x.z_b, x.phi_b),
          phase_rate(x.z_c, x.phi_c, x.z_b, rp.r_c), imbalance_rate(x.z_c, x.phi_c)};
}

Energies hamiltonian(const State& x, const ReducedParams& rp) {
  const double tilt = tilt_energy(x, rp);
  return {component_energy(x.z_b, x.phi_b, x.z_c, rp.r_b, rp, tilt),
          component_energy(x.z_c, x.phi_c, x.z_b, rp.r_c, rp, tilt)};
}

double total_energy(const State& x, const ReducedParams& rp) {
  const Energies h = hamiltonian(x, rp);
  return h.h_b + h.h_c - rp.r_bc * x.z_b * x.z_c / 2.0 - tilt_energy(x, rp);
}

Trajectory integrate(const State& x0, const ReducedParams& rp, double t_end, const IntegrationControl& control) {
  rp.validate();
  (void)eom_rhs(x0, rp);

  Trajectory traj;
  const auto rhs = [&rp](double, const std::array<double, 4>& y) {
    const StateRate d = eom_rhs(State::from_array(y), rp);
    return std::array<double, 4>{d.z_b_dot, d.phi_b_dot, d.z_c_dot, d.phi_c_dot};
  };
  const auto observe = [&](double t, const std::array<double, 4>& y) {
    const State s = State::from_array(y);
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.energies.push_back(hamiltonian(s, rp));
    traj.total_energy.push_back(total_energy(s, rp));
    traj.photons.push_back(tilt_force(s.z_b, s.z_c, rp));
  };

  try {
    traj.step_stats = ode::integrate(rhs, x0.to_array(), t_end, control.step, observe);
  } catch (const SingularityError& e) {
    traj.singular = true;
    traj.abort_reason = e.what();
  }
  return traj;
}

double period_estimate(const Trajectory& traj) {
  std::vector<double> z(traj.size());
  std::transform(traj.states.begin(), traj.states.end(), z.begin(), [](const State& s) { return s.z_b; });
  if (z.size() < 3) throw NonOscillatoryError("period_estimate: trajectory too short");
  const double mean = std::accumulate(z.begin(), z.end(), 0.0) / static_cast<double>(z.size());

  std::vector<double> up, down;
  mean_crossings(traj.times, z, mean, up, down);
  if (up.size() + down.size() < 3) throw NonOscillatoryError("period_estimate: fewer than three mean crossings");

  double sum = 0.0;
  std::size_t count = 0;
  for (const auto* list : {&up, &down}) {
    for (std::size_t i = 1; i < list->size(); ++i) {
      sum += (*list)[i] - (*list)[i - 1];
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

RegimeReport classify_regime(const Trajectory& traj, const RegimeThresholds& th) {
  if (traj.size() < 2) throw NonOscillatoryError("classify_regime: trajectory too short");
  RegimeReport rep;

  double sum = 0.0;
  bool positive = false, negative = false;
  for (const State& s : traj.states) {
    sum += s.z_b;
    positive = positive || s.z_b > 0.0;
    negative = negative || s.z_b < 0.0;
  }
  rep.mean_z = sum / static_cast<double>(traj.size());
  rep.phase_drift = traj.states.back().phi_b - traj.states.front().phi_b;

  const double span = traj.times.back() - traj.times.front();
  try {
    rep.periods_spanned = span / period_estimate(traj);
  } catch (const NonOscillatoryError&) {
    rep.periods_spanned = 0.0;
  }

  const bool symmetric = std::abs(rep.mean_z) < th.mean_z && positive && negative;
  const bool running = std::abs(rep.phase_drift) > th.phase_drift;
  if (symmetric) {
    rep.regime = Regime::josephson;
  } else {
    rep.regime = running ? Regime::self_trapped_running_phase : Regime::self_trapped_oscillating_phase;
  }

  // Straddling: within ±20% of the mean threshold or ±10% of the winding threshold, or an
  // oscillation observed over too few periods.
  const double m = std::abs(rep.mean_z);
  const double d = std::abs(rep.phase_drift);
  rep.inconclusive = (m > 0.8 * th.mean_z && m < 1.2 * th.mean_z) ||
                     (d > 0.9 * th.phase_drift && d < 1.1 * th.phase_drift) ||
                     (rep.periods_spanned > 0.0 && rep.periods_spanned < th.min_periods);
  return rep;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::josephson: return "josephson";
    case Regime::self_trapped_oscillating_phase: return "self_trapped_oscillating_phase";
    case Regime::self_trapped_running_phase: return "self_trapped_running_phase";
  }
  return "unknown";
}

}  // namespace cavjj
