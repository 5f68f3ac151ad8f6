#include "cavjj/full_model.hpp"

#include <cmath>
#include <numbers>

#include "cavjj/errors.hpp"

namespace cavjj {

namespace {

using namespace std::complex_literals;

double unwrap_toward(double angle, double reference) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return angle + two_pi * std::round((reference - angle) / two_pi);
}

double relative_phase(const cplx& left, const cplx& right, const char* species) {
  if (std::abs(left) < 1e-12 || std::abs(right) < 1e-12) {
    throw NumericalError(std::string("project: relative phase of species ") + species + " is undefined");
  }
  return std::arg(right) - std::arg(left);
}

}  // namespace

FullState full_rhs(const FullState& x, const PhysicalParams& p, double t, Frame frame) {
  const double u0 = p.light_shift();
  const double nb1 = std::norm(x.b1), nb2 = std::norm(x.b2);
  const double nc1 = std::norm(x.c1), nc2 = std::norm(x.c2);
  const double photons = std::norm(x.a);
  const double v = p.v_intra, vp = p.v_inter, s = p.s_pair, om = p.omega;

  // i·ẋ = rhs, so ẋ = −i·rhs.
  const cplx ib1 = -om * x.b2 + v * nb1 * x.b1 + vp / 2.0 * nc1 * x.b1 + p.j1 * u0 * photons * x.b1 -
                   s * std::conj(x.b1) * x.b2 * x.b2;
  const cplx ib2 = -om * x.b1 + v * nb2 * x.b2 + vp / 2.0 * nc2 * x.b2 + p.j2 * u0 * photons * x.b2 -
                   s * std::conj(x.b2) * x.b1 * x.b1;
  const cplx ic1 = -om * x.c2 + v * nc1 * x.c1 + vp / 2.0 * nb1 * x.c1 + p.j1p * u0 * photons * x.c1 -
                   s * std::conj(x.c1) * x.c2 * x.c2;
  const cplx ic2 = -om * x.c1 + v * nc2 * x.c2 + vp / 2.0 * nb2 * x.c2 + p.j2p * u0 * photons * x.c2 -
                   s * std::conj(x.c2) * x.c1 * x.c1;

  const double shift = u0 * (p.j1 * nb1 + p.j2 * nb2 + p.j1p * nc1 + p.j2p * nc2);
  const bool rot = frame == Frame::rotating;
  const double cavity_freq = p.omega_c + shift - (rot ? p.omega_p : 0.0);
  const double mirror_freq = p.omega_m - (rot ? p.omega_p : 0.0);
  const cplx drive = rot ? cplx(p.eta) : p.eta * std::exp(-1.0i * p.omega_p * t);

  const cplx ia = cavity_freq * x.a - p.g0_mirror * x.d - 1.0i * p.kappa * x.a + drive;
  const cplx id = mirror_freq * x.d - p.g0_mirror * x.a;

  return {-1.0i * ib1, -1.0i * ib2, -1.0i * ic1, -1.0i * ic2, -1.0i * ia, -1.0i * id};
}

FieldSteadyState steady_fields(const FullState& atoms, const PhysicalParams& p) {
  const double u0 = p.light_shift();
  const double shift = u0 * (p.j1 * std::norm(atoms.b1) + p.j2 * std::norm(atoms.b2) +
                             p.j1p * std::norm(atoms.c1) + p.j2p * std::norm(atoms.c2));
  // [cav  −G][a]   [−η]
  // [−G   mir][d] = [ 0]
  const cplx cav = p.omega_c + shift - p.omega_p - 1.0i * p.kappa;
  const double mir = p.omega_m - p.omega_p;
  const double g = p.g0_mirror;
  const cplx det = cav * mir - g * g;
  if (std::abs(det) == 0.0) throw NumericalError("steady_fields: singular cavity/mirror system");
  return {-p.eta * mir / det, -p.eta * g / det};
}

FullState construct(const State& x, const PhysicalParams& p, FieldInit init) {
  const double n = p.n_atoms;
  const auto pair = [n](double z, double phi) {
    return std::pair{std::sqrt(n * (1.0 + z) / 2.0) * std::exp(-0.5i * phi),
                     std::sqrt(n * (1.0 - z) / 2.0) * std::exp(0.5i * phi)};
  };
  const auto [b1, b2] = pair(x.z_b, x.phi_b);
  const auto [c1, c2] = pair(x.z_c, x.phi_c);
  FullState out{b1, b2, c1, c2, 0.0, 0.0};
  if (init == FieldInit::steady) {
    const FieldSteadyState f = steady_fields(out, p);
    out.a = f.a;
    out.d = f.d;
  }
  return out;
}

Projection project(const FullState& x, const PhysicalParams& p, const std::optional<State>& previous) {
  const double n = p.n_atoms;
  Projection out;
  out.state.z_b = (std::norm(x.b1) - std::norm(x.b2)) / n;
  out.state.z_c = (std::norm(x.c1) - std::norm(x.c2)) / n;
  out.state.phi_b = relative_phase(x.b1, x.b2, "b");
  out.state.phi_c = relative_phase(x.c1, x.c2, "c");
  if (previous) {
    out.state.phi_b = unwrap_toward(out.state.phi_b, previous->phi_b);
    out.state.phi_c = unwrap_toward(out.state.phi_c, previous->phi_c);
  }
  out.photon = p.coupling_difference() * p.light_shift() / (2.0 * p.omega) * std::norm(x.a);
  return out;
}

FullTrajectory integrate_full(const FullState& x0, const PhysicalParams& p, double t_end,
                              const FullIntegrationControl& control) {
  p.validate();
  FullTrajectory traj;
  traj.frame = control.frame;
  const auto rhs = [&](double t, const std::array<cplx, 6>& y) {
    return full_rhs(FullState::from_array(y), p, t, control.frame).to_array();
  };
  const auto observe = [&](double t, const std::array<cplx, 6>& y) {
    traj.times.push_back(t);
    traj.states.push_back(FullState::from_array(y));
  };
  traj.step_stats = ode::integrate(rhs, x0.to_array(), t_end, control.step, observe);
  return traj;
}

FullState to_lab_frame(const FullState& x, const PhysicalParams& p, double t) {
  FullState out = x;
  const cplx phase = std::exp(-1.0i * p.omega_p * t);
  out.a *= phase;
  out.d *= phase;
  return out;
}

}  // namespace cavjj
