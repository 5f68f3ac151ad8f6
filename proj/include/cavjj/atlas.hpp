#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cavjj/dynamics.hpp"
#include "cavjj/fixed_points.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

struct GridSpec {
  double z_min = -0.999;
  double z_max = 0.999;
  double phi_min = 0.0;
  double phi_max = 6.283185307179586;
  std::size_t nz = 401;
  std::size_t nphi = 401;

  void validate() const;
  [[nodiscard]] double z_at(std::size_t i) const;
  [[nodiscard]] double phi_at(std::size_t j) const;
};

enum class Quantity { energy_b, energy_c, photon, gradient };

// Samples on the symmetric manifold; values[i * nphi + j] belongs to (z_at(i), phi_at(j)).
struct ScalarField {
  GridSpec spec;
  std::vector<double> values;
  Quantity quantity = Quantity::energy_b;

  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[i * spec.nphi + j]; }
};

// Any quantity on the grid. `gradient` is ∂H_b/∂z_b (= φ̇_b) and needs |z| < 1.
[[nodiscard]] ScalarField sample_field(const ReducedParams& rp, const GridSpec& spec, Quantity q,
                                       unsigned threads = 1);

// H_b(z, φ) with z_c = z, φ_c = φ.
[[nodiscard]] ScalarField energy_grid(const ReducedParams& rp, const GridSpec& spec, unsigned threads = 1);

struct SlicePoint {
  double z = 0.0;
  double f = 0.0;
};

// f₁ (φ = 0) or f₂ (φ = π) at the given z, clipped to |z| ≤ 1 − 1e-6.
[[nodiscard]] std::vector<SlicePoint> gradient_slice(const ReducedParams& rp, Branch axis,
                                                     const std::vector<double>& zs);

// ∂H_b/∂z_b along an arbitrary constant φ (used for the φ = π/2 panels).
[[nodiscard]] std::vector<SlicePoint> gradient_along(const ReducedParams& rp, double phi,
                                                     const std::vector<double>& zs);

// Sign changes of a slice (zero samples count once).
[[nodiscard]] std::size_t sign_changes(const std::vector<SlicePoint>& slice);

struct PhotonSample {
  double t = 0.0;
  double photon = 0.0;  // tilt units
};

struct PhotonSeries {
  std::vector<PhotonSample> samples;
  Trajectory trajectory;
};

[[nodiscard]] PhotonSeries photon_timeseries(const State& x0, const ReducedParams& rp, double t_end,
                                             const IntegrationControl& control = {});

// Number of strict interior local maxima of the photon series.
[[nodiscard]] std::size_t local_maxima(const std::vector<PhotonSample>& series);

[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t n);

[[nodiscard]] std::string to_string(Quantity q);

}  // namespace cavjj
