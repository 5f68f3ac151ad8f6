#pragma once

#include <complex>

#include "cavjj/params.hpp"

namespace cavjj {

// Atom numbers per well: species b in wells 1/2, species c in wells 1/2.
struct Populations {
  double b1 = 0.0;
  double b2 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

// Closed-form description of the photon-number Lorentzian in s = z_b + z_c.
struct PhotonProfile {
  double peak_location = 0.0;  // B + D²/E
  double peak_value = 0.0;     // A²/C²
  double fwhm = 0.0;           // 2C
};

// Adiabatic cavity amplitude at lab time t, including the e^{-iω_p t} factor.
// Throws NumericalError if the denominator vanishes.
[[nodiscard]] std::complex<double> steady_alpha(const PhysicalParams& p, const Populations& n, double t);

// Mean photon number |α|² = A²E² / (D⁴ − 2D²E(s−B) + E²[(s−B)² + C²]), s = z_b + z_c.
// Returns exactly 0 when E = 0.
[[nodiscard]] double photon_number(double z_b, double z_c, const ReducedParams& rp);

// Photon number in units of 2Ω/(δU₀): tilt_scale·|α|². This is the cavity force in the
// phase equations.
[[nodiscard]] double tilt_force(double z_b, double z_c, const ReducedParams& rp);

// d(tilt_force)/ds.
[[nodiscard]] double tilt_force_slope(double z_b, double z_c, const ReducedParams& rp);

// F = (A²/C)·atan((E(s−B) − D²)/(CE)). ∂F/∂z_b = photon_number. Throws DomainError for E = 0.
[[nodiscard]] double tilt_potential(double z_b, double z_c, const ReducedParams& rp);

// Throws DomainError for E = 0 or C <= 0.
[[nodiscard]] PhotonProfile lorentzian_profile(const ReducedParams& rp);

}  // namespace cavjj
