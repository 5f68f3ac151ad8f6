#include "cavjj/atlas.hpp"

#include <algorithm>
#include <cmath>

#include "cavjj/cavity.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/parallel.hpp"

namespace cavjj {

namespace {

constexpr double kSliceClip = 1.0 - 1e-6;

double evaluate(Quantity q, double z, double phi, const ReducedParams& rp) {
  const State x = State::symmetric(z, phi);
  switch (q) {
    case Quantity::energy_b: return hamiltonian(x, rp).h_b;
    case Quantity::energy_c: return hamiltonian(x, rp).h_c;
    case Quantity::photon: return tilt_force(z, z, rp);
    case Quantity::gradient: return eom_rhs(x, rp).phi_b_dot;
  }
  return 0.0;
}

}  // namespace

void GridSpec::validate() const {
  if (nz < 2 || nphi < 2) throw DomainError("grid: nz and nphi must be >= 2");
  if (!(z_min < z_max) || !(phi_min < phi_max)) throw DomainError("grid: empty range");
  if (z_min < -1.0 || z_max > 1.0) throw DomainError("grid: z range must lie within [-1, 1]");
}

double GridSpec::z_at(std::size_t i) const {
  // Weighted form keeps grids with z_min = −z_max exactly antisymmetric.
  const double n = static_cast<double>(nz - 1);
  const double k = static_cast<double>(i);
  return (z_min * (n - k) + z_max * k) / n;
}

double GridSpec::phi_at(std::size_t j) const {
  return phi_min + (phi_max - phi_min) * static_cast<double>(j) / static_cast<double>(nphi - 1);
}

ScalarField sample_field(const ReducedParams& rp, const GridSpec& spec, Quantity q, unsigned threads) {
  spec.validate();
  rp.validate();
  const auto rows = parallel_map(spec.nz, threads, [&](std::size_t i) {
    std::vector<double> row(spec.nphi);
    const double z = spec.z_at(i);
    for (std::size_t j = 0; j < spec.nphi; ++j) row[j] = evaluate(q, z, spec.phi_at(j), rp);
    return row;
  });
  ScalarField field{spec, {}, q};
  field.values.reserve(spec.nz * spec.nphi);
  for (const auto& row : rows) field.values.insert(field.values.end(), row.begin(), row.end());
  return field;
}

ScalarField energy_grid(const ReducedParams& rp, const GridSpec& spec, unsigned threads) {
  return sample_field(rp, spec, Quantity::energy_b, threads);
}

std::vector<SlicePoint> gradient_along(const ReducedParams& rp, double phi, const std::vector<double>& zs) {
  std::vector<SlicePoint> out;
  out.reserve(zs.size());
  for (double z : zs) {
    const double zc = std::clamp(z, -kSliceClip, kSliceClip);
    out.push_back({zc, evaluate(Quantity::gradient, zc, phi, rp)});
  }
  return out;
}

std::vector<SlicePoint> gradient_slice(const ReducedParams& rp, Branch axis, const std::vector<double>& zs) {
  if (axis == Branch::off_axis) throw DomainError("gradient_slice: axis must be axis_0 or axis_pi");
  return gradient_along(rp, axis == Branch::axis_0 ? 0.0 : 3.141592653589793, zs);
}

std::size_t sign_changes(const std::vector<SlicePoint>& slice) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& p : slice) {
    const int s = (p.f > 0.0) - (p.f < 0.0);
    if (s == 0) {
      ++n;
      last = 0;
      continue;
    }
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

PhotonSeries photon_timeseries(const State& x0, const ReducedParams& rp, double t_end,
                               const IntegrationControl& control) {
  PhotonSeries out;
  out.trajectory = integrate(x0, rp, t_end, control);
  const auto& traj = out.trajectory;
  out.samples.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) out.samples.push_back({traj.times[i], traj.photons[i]});
  return out;
}

std::size_t local_maxima(const std::vector<PhotonSample>& series) {
  std::size_t n = 0;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    if (series[i].photon > series[i - 1].photon && series[i].photon >= series[i + 1].photon) ++n;
  }
  return n;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::energy_b: return "energy_b";
    case Quantity::energy_c: return "energy_c";
    case Quantity::photon: return "photon";
    case Quantity::gradient: return "gradient";
  }
  return "unknown";
}

}  // namespace cavjj
