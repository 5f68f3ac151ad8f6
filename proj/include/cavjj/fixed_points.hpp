#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cavjj/params.hpp"

namespace cavjj {

enum class Branch { axis_0, axis_pi, off_axis };
enum class HessianClass { minimum, maximum, saddle, degenerate };

// Stationary point on the symmetric manifold z_b = z_c = z, φ_b = φ_c = φ.
struct FixedPoint {
  double z = 0.0;
  double phi = 0.0;  // in [0, 2π)
  Branch branch = Branch::axis_0;
  double residual = 0.0;  // max |eom_rhs| at the point
  HessianClass hessian_class = HessianClass::degenerate;
  std::array<double, 2> hessian_eigenvalues{};
  std::array<std::complex<double>, 2> jacobian_eigenvalues{};
};

struct Classification {
  HessianClass hessian_class = HessianClass::degenerate;
  std::array<double, 2> hessian_eigenvalues{};
  double hessian_det = 0.0;
  bool degenerate = false;  // |det| < 1e-9
  std::array<std::complex<double>, 2> jacobian_eigenvalues{};
};

struct ScanOptions {
  std::size_t grid_points = 4001;
  double z_margin = 1e-6;         // scan z ∈ [−1 + margin, 1 − margin]
  std::size_t newton_max_iter = 50;
  double f_tol = 1e-13;
  double dedup_tol = 1e-6;
  double degenerate_tol = 1e-9;
};

// Hessian of H_b in (z_b, φ_b) with (z_c, φ_c) held at the same point. Rows/cols: (z, φ).
[[nodiscard]] std::array<std::array<double, 2>, 2> hessian_b(double z, double phi, const ReducedParams& rp);

// Jacobian of (ż, φ̇) on the symmetric manifold. Rows: (ż, φ̇), cols: (z, φ).
[[nodiscard]] std::array<std::array<double, 2>, 2> symmetric_jacobian(double z, double phi, const ReducedParams& rp);

// Throws NumericalError if the residual at (z, phi) exceeds 1e-8.
[[nodiscard]] Classification classify(double z, double phi, const ReducedParams& rp, const ScanOptions& opt = {});
// Same, without the stationarity check.
[[nodiscard]] Classification classify_unchecked(double z, double phi, const ReducedParams& rp,
                                                const ScanOptions& opt = {});

// Roots of φ̇ on φ = 0 (axis_0) or φ = π (axis_pi), ascending in z.
[[nodiscard]] std::vector<FixedPoint> axis_fixed_points(const ReducedParams& rp, Branch branch,
                                                        const ScanOptions& opt = {});

// Points on cos φ = −1/(2Λ√(1−z²)) where φ̇ also vanishes, reported for φ and 2π − φ.
[[nodiscard]] std::vector<FixedPoint> off_axis_fixed_points(const ReducedParams& rp, const ScanOptions& opt = {});

struct Census {
  std::vector<FixedPoint> axis_0;
  std::vector<FixedPoint> axis_pi;
  std::vector<FixedPoint> off_axis;

  [[nodiscard]] std::size_t count(HessianClass c) const;
  [[nodiscard]] std::vector<FixedPoint> all() const;
};

[[nodiscard]] Census census(const ReducedParams& rp, const ScanOptions& opt = {});

enum class SweepParam { d_mirror, e_mirror_detune, b_detune, lambda, a_tilde };

struct SweepRow {
  double value = 0.0;
  ReducedParams params;
  std::optional<Census> census;
  std::string error;  // set when this value failed
};

// Independent census per value; rows keep the order of `values`.
[[nodiscard]] std::vector<SweepRow> bifurcation_sweep(const ReducedParams& rp, SweepParam param,
                                                      const std::vector<double>& values,
                                                      const ScanOptions& opt = {}, unsigned threads = 1);

[[nodiscard]] ReducedParams with_param(ReducedParams rp, SweepParam param, double value);

[[nodiscard]] std::string to_string(Branch b);
[[nodiscard]] std::string to_string(HessianClass c);
[[nodiscard]] std::string to_string(SweepParam p);
[[nodiscard]] std::optional<SweepParam> parse_sweep_param(const std::string& name);

}  // namespace cavjj
