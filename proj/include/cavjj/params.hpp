#pragma once

#include <optional>

namespace cavjj {

// Raw model constants in consistent angular-frequency units (ħ = 1).
struct PhysicalParams {
  double omega = 1.0;     // Ω, single-atom tunneling
  double v_intra = 0.0;   // V, intra-species interaction
  double v_inter = 0.0;   // V′, inter-species interaction
  double s_pair = 0.0;    // S, pair tunneling
  double n_atoms = 1.0;   // N per species

  // Light shift per photon. Either given directly or derived as g0²/Δa.
  std::optional<double> u0;
  std::optional<double> g0_atom;
  std::optional<double> delta_a;

  double kappa = 1.0;     // cavity loss
  double eta = 0.0;       // pump amplitude (constant)
  double omega_c = 0.0;
  double omega_p = 0.0;
  double omega_m = 0.0;
  double g0_mirror = 0.0; // G₀

  // Overlap of the cavity mode with well 1/2 for species b (j) and c (j′).
  double j1 = 1.0;
  double j2 = 0.0;
  double j1p = 1.0;
  double j2p = 0.0;

  // U₀, resolved from u0 or g0_atom²/delta_a. Throws DomainError when neither is usable.
  [[nodiscard]] double light_shift() const;
  // δ = J₁ − J₂.
  [[nodiscard]] double coupling_difference() const { return j1 - j2; }
  // X = δ N U₀ / 2, the common denominator of A..E.
  [[nodiscard]] double reduction_scale() const;
  // Δ = ω_p − ω_c − (J₁+J₂+J₁′+J₂′) N U₀ / 2.
  [[nodiscard]] double cavity_detuning() const;

  void validate() const;
};

// Dimensionless parameters of the reduced (adiabatically eliminated) model.
struct ReducedParams {
  double r_b = 0.0;
  double r_c = 0.0;
  double r_bc = 0.0;
  double lambda = 0.0;           // Λ = N S / 2Ω
  double a_pump = 0.0;           // A
  double b_detune = 0.0;         // B
  double c_loss = 1.0;           // C
  double d_mirror = 0.0;         // D
  double e_mirror_detune = 1.0;  // E
  double tilt_scale = 1.0;       // δU₀/2Ω

  // Ã = tilt_scale · A².
  [[nodiscard]] double a_tilde() const { return tilt_scale * a_pump * a_pump; }

  // Sets A and tilt_scale so that a_tilde() == value (tilt_scale = ±1).
  void set_a_tilde(double value);

  // Peak of the photon Lorentzian in s = z_b + z_c.
  [[nodiscard]] double peak_location() const { return b_detune + d_mirror * d_mirror / e_mirror_detune; }

  void validate() const;

  friend bool operator==(const ReducedParams&, const ReducedParams&) = default;
};

[[nodiscard]] ReducedParams reduce(const PhysicalParams& p);

// Drops the moving mirror: D = 0 and E = 1. With D = 0 the tilt does not depend on E.
[[nodiscard]] ReducedParams no_mirror(const ReducedParams& rp);

// Convenience constructor for the symmetric case r_b = r_c = r.
[[nodiscard]] ReducedParams make_reduced(double r, double r_bc, double lambda, double a_tilde, double b,
                                         double c, double d = 0.0, double e = 1.0);

}  // namespace cavjj
