#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "cavjj/dynamics.hpp"
#include "cavjj/ode.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

using cplx = std::complex<double>;

// Classical amplitudes of the two atomic species (two wells each), cavity and mirror.
struct FullState {
  cplx b1, b2, c1, c2;
  cplx a;  // cavity
  cplx d;  // mirror

  [[nodiscard]] std::array<cplx, 6> to_array() const { return {b1, b2, c1, c2, a, d}; }
  static FullState from_array(const std::array<cplx, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

  [[nodiscard]] double atoms_b() const { return std::norm(b1) + std::norm(b2); }
  [[nodiscard]] double atoms_c() const { return std::norm(c1) + std::norm(c2); }
};

// `rotating`: cavity and mirror amplitudes in the frame e^{-iω_p t}; no explicit time
// dependence remains. `lab`: the equations as written, with the drive η e^{-iω_p t}.
enum class Frame { rotating, lab };

[[nodiscard]] FullState full_rhs(const FullState& x, const PhysicalParams& p, double t,
                                 Frame frame = Frame::rotating);

// Cavity and mirror amplitudes that are stationary (in the rotating frame) for the given
// atomic populations. Throws NumericalError when the 2x2 steady-state system is singular.
struct FieldSteadyState {
  cplx a;
  cplx d;
};
[[nodiscard]] FieldSteadyState steady_fields(const FullState& atoms, const PhysicalParams& p);

enum class FieldInit { steady, vacuum };

// Mean-field amplitudes for a reduced state: |b1|² = N(1+z_b)/2, arg b2 − arg b1 = φ_b.
[[nodiscard]] FullState construct(const State& x, const PhysicalParams& p, FieldInit init = FieldInit::steady);

struct Projection {
  State state;
  double photon = 0.0;  // tilt units, (δU₀/2Ω)|a|²
};

// Imbalances and relative phases of a full state; phases are unwrapped toward `previous`
// when given. Throws NumericalError if any atomic amplitude has modulus < 1e-12.
[[nodiscard]] Projection project(const FullState& x, const PhysicalParams& p,
                                 const std::optional<State>& previous = std::nullopt);

struct FullTrajectory {
  std::vector<double> times;  // physical time
  std::vector<FullState> states;
  Frame frame = Frame::rotating;
  ode::StepStats step_stats;
};

struct FullIntegrationControl {
  ode::StepControl step{ode::Method::dopri5, 1e-3, 1, 1e-10, 1e-12};
  Frame frame = Frame::rotating;
};

// Physical time t_end. Samples every step.dt·step.stride.
[[nodiscard]] FullTrajectory integrate_full(const FullState& x0, const PhysicalParams& p, double t_end,
                                            const FullIntegrationControl& control = {});

// Rotating-frame amplitudes to the lab frame at time t (a, d multiplied by e^{-iω_p t}).
[[nodiscard]] FullState to_lab_frame(const FullState& x, const PhysicalParams& p, double t);

}  // namespace cavjj
