#pragma once

// Explicit Runge–Kutta drivers shared by the reduced and the full model.
//
// States are fixed-size std::array<T, N> with T = double or std::complex<double>.
// The right-hand side is any callable `Vec f(double t, const Vec& y)`; it may throw, in
// which case the driver stops and the exception propagates after the observer has seen
// every completed sample.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "cavjj/errors.hpp"

namespace cavjj::ode {

enum class Method { rk4, dopri5 };

struct StepControl {
  Method method = Method::rk4;
  double dt = 1e-3;         // fixed step (rk4) or sample spacing unit (dopri5)
  std::size_t stride = 1;   // emit a sample every `stride` steps of size dt
  double rtol = 1e-9;       // dopri5 only
  double atol = 1e-12;      // dopri5 only
  std::size_t max_steps = 100'000'000;
};

struct StepStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

namespace detail {

template <class T, std::size_t N>
std::array<T, N> axpy(const std::array<T, N>& y, double h, const std::array<T, N>& k) {
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h * k[i];
  return out;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

}  // namespace detail

template <class T, std::size_t N, class Rhs>
std::array<T, N> rk4_step(Rhs&& f, double t, const std::array<T, N>& y, double h) {
  using detail::axpy;
  const auto k1 = f(t, y);
  const auto k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const auto k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const auto k4 = f(t + h, axpy(y, h, k3));
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

// Dormand–Prince 5(4) step. Returns the 5th-order solution and writes the scaled error norm.
template <class T, std::size_t N, class Rhs>
std::array<T, N> dopri5_step(Rhs&& f, double t, const std::array<T, N>& y, const std::array<T, N>& k1,
                             double h, double rtol, double atol, double& err_norm,
                             std::array<T, N>& k7_out) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  std::array<T, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
  const auto k2 = f(t + c2 * h, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  const auto k3 = f(t + c3 * h, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  const auto k4 = f(t + c4 * h, tmp);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  const auto k5 = f(t + c5 * h, tmp);
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
  const auto k6 = f(t + h, tmp);
  std::array<T, N> y5;
  for (std::size_t i = 0; i < N; ++i)
    y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  k7_out = f(t + h, y5);

  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const T err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7_out[i]);
    const double scale =
        atol + rtol * std::max(detail::magnitude(y[i]), detail::magnitude(y5[i]));
    const double q = detail::magnitude(err) / scale;
    acc += q * q;
  }
  err_norm = std::sqrt(acc / static_cast<double>(N));
  return y5;
}

// Integrates from t = 0 to t_end. `observe(t, y)` is called at t = 0, every dt·stride, and
// at t_end. Returns step statistics.
template <class T, std::size_t N, class Rhs, class Observer>
StepStats integrate(Rhs&& f, std::array<T, N> y, double t_end, const StepControl& ctl, Observer&& observe) {
  if (!(ctl.dt > 0.0) || !(t_end >= 0.0) || ctl.stride == 0) {
    throw DomainError("integrate: dt > 0, stride >= 1 and t_end >= 0 are required");
  }
  StepStats stats;
  const double sample_dt = ctl.dt * static_cast<double>(ctl.stride);
  // Number of whole sample intervals; a short remainder gets its own final sample.
  const auto n_samples = static_cast<std::size_t>(std::floor(t_end / sample_dt + 1e-9));
  const double aligned_end = static_cast<double>(n_samples) * sample_dt;

  observe(0.0, y);

  if (ctl.method == Method::rk4) {
    const auto n_full = static_cast<std::size_t>(std::llround(aligned_end / ctl.dt));
    for (std::size_t i = 0; i < n_full; ++i) {
      const double t = static_cast<double>(i) * ctl.dt;
      y = rk4_step(f, t, y, ctl.dt);
      ++stats.accepted;
      if ((i + 1) % ctl.stride == 0) observe(static_cast<double>(i + 1) * ctl.dt, y);
    }
    double t = static_cast<double>(n_full) * ctl.dt;
    if (t_end - t > 1e-12 * std::max(1.0, t_end)) {
      while (t_end - t > 1e-12 * std::max(1.0, t_end)) {
        const double h = std::min(ctl.dt, t_end - t);
        y = rk4_step(f, t, y, h);
        t += h;
        ++stats.accepted;
      }
      observe(t_end, y);
    }
    return stats;
  }

  // dopri5: adaptive steps clipped to land on every sample time.
  double h = std::min(ctl.dt, std::max(t_end, ctl.dt));
  double t = 0.0;
  auto k1 = f(t, y);
  std::size_t next = 1;
  const std::size_t total = n_samples + (t_end - aligned_end > 1e-12 * std::max(1.0, t_end) ? 1 : 0);
  while (next <= total) {
    const double target = next <= n_samples ? static_cast<double>(next) * sample_dt : t_end;
    while (target - t > 1e-14 * std::max(1.0, target)) {
      if (stats.accepted + stats.rejected >= ctl.max_steps) throw NumericalError("dopri5: step budget exhausted");
      const bool clipped = t + h >= target;
      const double step = clipped ? target - t : h;
      double err = 0.0;
      std::array<T, N> k7;
      auto y_new = dopri5_step(f, t, y, k1, step, ctl.rtol, ctl.atol, err, k7);
      if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
      if (err <= 1.0) {
        ++stats.accepted;
        t = clipped ? target : t + step;
        y = y_new;
        k1 = k7;
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        // Keep the unclipped step estimate when the clip made the step artificially small.
        h = clipped ? std::max(h, step * factor) : step * factor;
      } else {
        ++stats.rejected;
        h = step * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      }
      if (!(h > 1e-15 * std::max(1.0, target))) throw NumericalError("dopri5: step size underflow");
    }
    observe(target, y);
    ++next;
  }
  return stats;
}

}  // namespace cavjj::ode
