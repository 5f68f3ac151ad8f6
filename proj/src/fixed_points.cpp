#include "cavjj/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "cavjj/cavity.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/parallel.hpp"

namespace cavjj {

namespace {

constexpr double kPi = std::numbers::pi;

using Scalar = std::function<double(double)>;

double residual_at(double z, double phi, const ReducedParams& rp) {
  return eom_rhs(State::symmetric(z, phi), rp).max_abs();
}

double phase_rate(double z, double phi, const ReducedParams& rp) {
  return eom_rhs(State::symmetric(z, phi), rp).phi_b_dot;
}

// Bisection down to adjacent doubles, then Newton steps (central-difference slope) that
// are kept only if they stay in the bracket and reduce |f|.
double polish_root(const Scalar& f, double lo, double hi, double f_lo, const ScanOptions& opt) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  double x = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
  double fx = f(x);
  for (std::size_t it = 0; it < opt.newton_max_iter && std::abs(fx) > opt.f_tol; ++it) {
    const double h = 1e-7 * std::max(1e-3, std::abs(x));
    const double slope = (f(x + h) - f(x - h)) / (2.0 * h);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double next = x - fx / slope;
    if (!(next >= lo - (hi - lo)) || !(next <= hi + (hi - lo))) break;
    const double fn = f(next);
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = next;
    fx = fn;
  }
  return x;
}

std::vector<double> scan_roots(const Scalar& f, double lo, double hi, const ScanOptions& opt) {
  const std::size_t n = std::max<std::size_t>(opt.grid_points, 2);
  std::vector<double> zs(n), fs(n);
  for (std::size_t i = 0; i < n; ++i) {
    zs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    fs[i] = f(zs[i]);
  }
  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i] == 0.0) {
      roots.push_back(zs[i]);
    } else if (i + 1 < n && fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      roots.push_back(polish_root(f, zs[i], zs[i + 1], fs[i], opt));
    }
  }
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > opt.dedup_tol) unique.push_back(r);
  }
  return unique;
}

std::array<double, 2> symmetric_eigenvalues(const std::array<std::array<double, 2>, 2>& m) {
  const double mean = 0.5 * (m[0][0] + m[1][1]);
  const double half_diff = 0.5 * (m[0][0] - m[1][1]);
  const double rad = std::hypot(half_diff, m[0][1]);
  return {mean - rad, mean + rad};
}

std::array<std::complex<double>, 2> general_eigenvalues(const std::array<std::array<double, 2>, 2>& m) {
  const double half_tr = 0.5 * (m[0][0] + m[1][1]);
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const std::complex<double> disc = std::sqrt(std::complex<double>(half_tr * half_tr - det, 0.0));
  return {half_tr - disc, half_tr + disc};
}

FixedPoint make_point(double z, double phi, Branch branch, const ReducedParams& rp, const ScanOptions& opt) {
  FixedPoint fp;
  fp.z = z;
  fp.phi = phi;
  fp.branch = branch;
  fp.residual = residual_at(z, phi, rp);
  const Classification c = classify_unchecked(z, phi, rp, opt);
  fp.hessian_class = c.hessian_class;
  fp.hessian_eigenvalues = c.hessian_eigenvalues;
  fp.jacobian_eigenvalues = c.jacobian_eigenvalues;
  return fp;
}

}  // namespace

std::array<std::array<double, 2>, 2> hessian_b(double z, double phi, const ReducedParams& rp) {
  const double w2 = 1.0 - z * z;
  const double w = std::sqrt(w2);
  const double c = std::cos(phi), s = std::sin(phi);
  const double c2 = std::cos(2.0 * phi), s2 = std::sin(2.0 * phi);
  const double lam = rp.lambda;
  const double hzz = c / (w2 * w) + rp.r_b + lam * c2 + tilt_force_slope(z, z, rp);
  const double hzp = -z / w * s - 2.0 * lam * z * s2;
  const double hpp = w * c + 2.0 * lam * w2 * c2;
  return {{{hzz, hzp}, {hzp, hpp}}};
}

std::array<std::array<double, 2>, 2> symmetric_jacobian(double z, double phi, const ReducedParams& rp) {
  const double w2 = 1.0 - z * z;
  const double w = std::sqrt(w2);
  const double c = std::cos(phi), s = std::sin(phi);
  const double c2 = std::cos(2.0 * phi), s2 = std::sin(2.0 * phi);
  const double lam = rp.lambda;
  const double gz = z / w * s + 2.0 * lam * z * s2;
  const double gp = -w * c - 2.0 * lam * w2 * c2;
  const double hz = c / (w2 * w) + rp.r_b + rp.r_bc / 2.0 + lam * c2 + 2.0 * tilt_force_slope(z, z, rp);
  const double hp = -z / w * s - 2.0 * lam * z * s2;
  return {{{gz, gp}, {hz, hp}}};
}

Classification classify(double z, double phi, const ReducedParams& rp, const ScanOptions& opt) {
  const double res = residual_at(z, phi, rp);
  if (!(res < 1e-8)) throw NumericalError("classify: point is not stationary (residual " + std::to_string(res) + ")");
  return classify_unchecked(z, phi, rp, opt);
}

Classification classify_unchecked(double z, double phi, const ReducedParams& rp, const ScanOptions& opt) {
  Classification out;
  const auto h = hessian_b(z, phi, rp);
  out.hessian_eigenvalues = symmetric_eigenvalues(h);
  out.hessian_det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  out.degenerate = std::abs(out.hessian_det) < opt.degenerate_tol;
  const auto [lo, hi] = out.hessian_eigenvalues;
  if (std::abs(lo) < opt.degenerate_tol || std::abs(hi) < opt.degenerate_tol) {
    out.hessian_class = HessianClass::degenerate;
  } else if (lo > 0.0) {
    out.hessian_class = HessianClass::minimum;
  } else if (hi < 0.0) {
    out.hessian_class = HessianClass::maximum;
  } else {
    out.hessian_class = HessianClass::saddle;
  }
  out.jacobian_eigenvalues = general_eigenvalues(symmetric_jacobian(z, phi, rp));
  return out;
}

std::vector<FixedPoint> axis_fixed_points(const ReducedParams& rp, Branch branch, const ScanOptions& opt) {
  if (branch == Branch::off_axis) throw DomainError("axis_fixed_points: branch must be axis_0 or axis_pi");
  rp.validate();
  const double phi = branch == Branch::axis_0 ? 0.0 : kPi;
  const Scalar f = [&](double z) { return phase_rate(z, phi, rp); };
  const double lim = 1.0 - opt.z_margin;

  std::vector<FixedPoint> out;
  for (double z : scan_roots(f, -lim, lim, opt)) out.push_back(make_point(z, phi, branch, rp, opt));
  return out;
}

std::vector<FixedPoint> off_axis_fixed_points(const ReducedParams& rp, const ScanOptions& opt) {
  rp.validate();
  const double lam = rp.lambda;
  // cos φ = −1/(2Λ√(1−z²)) needs |2Λ√(1−z²)| ≥ 1; the equality case lies on the φ = 0/π axes.
  if (!(std::abs(lam) > 0.5)) return {};
  const double z_lim = std::sqrt(1.0 - 1.0 / (4.0 * lam * lam));
  const double lim = z_lim - std::min(opt.z_margin, 1e-6 * z_lim);

  const auto branch_phase = [lam](double z) {
    const double c = -1.0 / (2.0 * lam * std::sqrt(1.0 - z * z));
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  const Scalar f = [&](double z) { return phase_rate(z, branch_phase(z), rp); };

  std::vector<FixedPoint> out;
  for (double z : scan_roots(f, -lim, lim, opt)) {
    const double phi = branch_phase(z);
    out.push_back(make_point(z, phi, Branch::off_axis, rp, opt));
    out.push_back(make_point(z, 2.0 * kPi - phi, Branch::off_axis, rp, opt));
  }
  return out;
}

std::size_t Census::count(HessianClass c) const {
  std::size_t n = 0;
  for (const auto* list : {&axis_0, &axis_pi, &off_axis}) {
    n += static_cast<std::size_t>(
        std::count_if(list->begin(), list->end(), [c](const FixedPoint& p) { return p.hessian_class == c; }));
  }
  return n;
}

std::vector<FixedPoint> Census::all() const {
  std::vector<FixedPoint> out = axis_0;
  out.insert(out.end(), axis_pi.begin(), axis_pi.end());
  out.insert(out.end(), off_axis.begin(), off_axis.end());
  return out;
}

Census census(const ReducedParams& rp, const ScanOptions& opt) {
  return {axis_fixed_points(rp, Branch::axis_0, opt), axis_fixed_points(rp, Branch::axis_pi, opt),
          off_axis_fixed_points(rp, opt)};
}

ReducedParams with_param(ReducedParams rp, SweepParam param, double value) {
  switch (param) {
    case SweepParam::d_mirror: rp.d_mirror = value; break;
    case SweepParam::e_mirror_detune: rp.e_mirror_detune = value; break;
    case SweepParam::b_detune: rp.b_detune = value; break;
    case SweepParam::lambda: rp.lambda = value; break;
    case SweepParam::a_tilde: rp.set_a_tilde(value); break;
  }
  return rp;
}

std::vector<SweepRow> bifurcation_sweep(const ReducedParams& rp, SweepParam param, const std::vector<double>& values,
                                        const ScanOptions& opt, unsigned threads) {
  return parallel_map(values.size(), threads, [&](std::size_t i) {
    SweepRow row;
    row.value = values[i];
    row.params = with_param(rp, param, values[i]);
    try {
      row.census = census(row.params, opt);
    } catch (const Error& e) {
      row.error = e.what();
    }
    return row;
  });
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::axis_0: return "axis_0";
    case Branch::axis_pi: return "axis_pi";
    case Branch::off_axis: return "off_axis";
  }
  return "unknown";
}

std::string to_string(HessianClass c) {
  switch (c) {
    case HessianClass::minimum: return "minimum";
    case HessianClass::maximum: return "maximum";
    case HessianClass::saddle: return "saddle";
    case HessianClass::degenerate: return "degenerate";
  }
  return "unknown";
}

std::string to_string(SweepParam p) {
  switch (p) {
    case SweepParam::d_mirror: return "D";
    case SweepParam::e_mirror_detune: return "E";
    case SweepParam::b_detune: return "B";
    case SweepParam::lambda: return "lambda";
    case SweepParam::a_tilde: return "a_tilde";
  }
  return "unknown";
}

std::optional<SweepParam> parse_sweep_param(const std::string& name) {
  if (name == "D" || name == "d" || name == "d_mirror") return SweepParam::d_mirror;
  if (name == "E" || name == "e" || name == "e_mirror_detune") return SweepParam::e_mirror_detune;
  if (name == "B" || name == "b" || name == "b_detune") return SweepParam::b_detune;
  if (name == "lambda" || name == "Lambda" || name == "S") return SweepParam::lambda;
  if (name == "a_tilde" || name == "A_tilde") return SweepParam::a_tilde;
  return std::nullopt;
}

}  // namespace cavjj
