#include "cavjj/cavity.hpp"

#include <cmath>

#include "cavjj/errors.hpp"

namespace cavjj {

namespace {

// D⁴ − 2D²E(s−B) + E²[(s−B)² + C²], written as (E(s−B) − D²)² + E²C² to avoid cancellation.
double lorentz_denominator(double s, const ReducedParams& rp) {
  const double e = rp.e_mirror_detune;
  const double u = e * (s - rp.b_detune) - rp.d_mirror * rp.d_mirror;
  return u * u + e * e * rp.c_loss * rp.c_loss;
}

}  // namespace

std::complex<double> steady_alpha(const PhysicalParams& p, const Populations& n, double t) {
  using namespace std::complex_literals;
  const double u0 = p.light_shift();
  const double shift = u0 * (p.j1 * n.b1 + p.j2 * n.b2 + p.j1p * n.c1 + p.j2p * n.c2);
  const double mirror = p.omega_m - p.omega_p;
  const std::complex<double> numerator = p.eta * std::exp(-1.0i * p.omega_p * t) * mirror;
  const std::complex<double> denominator =
      p.g0_mirror * p.g0_mirror - (p.omega_c + shift - 1.0i * p.kappa - p.omega_p) * mirror;
  if (std::abs(denominator) == 0.0) throw NumericalError("steady_alpha: degenerate denominator");
  return numerator / denominator;
}

double photon_number(double z_b, double z_c, const ReducedParams& rp) {
  const double e = rp.e_mirror_detune;
  if (e == 0.0) return 0.0;
  const double a = rp.a_pump;
  return a * a * e * e / lorentz_denominator(z_b + z_c, rp);
}

double tilt_force(double z_b, double z_c, const ReducedParams& rp) {
  return rp.tilt_scale * photon_number(z_b, z_c, rp);
}

double tilt_force_slope(double z_b, double z_c, const ReducedParams& rp) {
  const double e = rp.e_mirror_detune;
  if (e == 0.0) return 0.0;
  const double s = z_b + z_c;
  const double den = lorentz_denominator(s, rp);
  const double dden = 2.0 * e * (e * (s - rp.b_detune) - rp.d_mirror * rp.d_mirror);
  return -rp.a_tilde() * e * e * dden / (den * den);
}

double tilt_potential(double z_b, double z_c, const ReducedParams& rp) {
  const double e = rp.e_mirror_detune;
  const double c = rp.c_loss;
  if (e == 0.0) throw DomainError("tilt_potential: E = 0");
  if (!(c > 0.0)) throw DomainError("tilt_potential: C must be > 0");
  const double s = z_b + z_c;
  const double a = rp.a_pump;
  return a * a / c * std::atan((e * (s - rp.b_detune) - rp.d_mirror * rp.d_mirror) / (c * e));
}

PhotonProfile lorentzian_profile(const ReducedParams& rp) {
  if (rp.e_mirror_detune == 0.0) throw DomainError("lorentzian_profile: E = 0 has no Lorentzian");
  if (!(rp.c_loss > 0.0)) throw DomainError("lorentzian_profile: C must be > 0");
  const double a = rp.a_pump;
  const double c = rp.c_loss;
  return {rp.peak_location(), a * a / (c * c), 2.0 * c};
}

}  // namespace cavjj
