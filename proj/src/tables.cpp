#include "cavjj/tables.hpp"

#include "cavjj/cavity.hpp"

namespace cavjj {

Table trajectory_table(const Trajectory& traj, const ReducedParams& rp, bool raw_photons) {
  Table t{{"t", "z_b", "phi_b", "z_c", "phi_c", "H_b", "H_c", raw_photons ? "photon_raw" : "photon", "K"}, {}};
  t.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& x = traj.states[i];
    const double photon = raw_photons ? photon_number(x.z_b, x.z_c, rp) : traj.photons[i];
    t.add({traj.times[i], x.z_b, x.phi_b, x.z_c, x.phi_c, traj.energies[i].h_b, traj.energies[i].h_c, photon,
           traj.total_energy[i]});
  }
  return t;
}

Table full_trajectory_table(const FullTrajectory& traj, const PhysicalParams& p, bool raw_photons) {
  Table t{{"t", "z_b", "phi_b", "z_c", "phi_c", raw_photons ? "photon_raw" : "photon", "abs_a2", "abs_d2",
           "atoms_b", "atoms_c"},
          {}};
  std::optional<State> prev;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& x = traj.states[i];
    const auto pr = project(x, p, prev);
    prev = pr.state;
    const double a2 = std::norm(x.a);
    t.add({2.0 * p.omega * traj.times[i], pr.state.z_b, pr.state.phi_b, pr.state.z_c, pr.state.phi_c,
           raw_photons ? a2 : pr.photon, a2, std::norm(x.d), x.atoms_b(), x.atoms_c()});
  }
  return t;
}

Table fixed_point_table(const Census& c) {
  Table t{{"branch", "z", "phi", "class", "hess_eig1", "hess_eig2", "jac_re1", "jac_im1", "jac_re2", "jac_im2",
           "residual"},
          {}};
  for (const auto& fp : c.all()) {
    t.add({to_string(fp.branch), fp.z, fp.phi, to_string(fp.hessian_class), fp.hessian_eigenvalues[0],
           fp.hessian_eigenvalues[1], fp.jacobian_eigenvalues[0].real(), fp.jacobian_eigenvalues[0].imag(),
           fp.jacobian_eigenvalues[1].real(), fp.jacobian_eigenvalues[1].imag(), fp.residual});
  }
  return t;
}

namespace {

Meta branch_summary(const std::vector<FixedPoint>& pts) {
  Meta m;
  m["count"] = pts.size();
  for (auto cls : {HessianClass::minimum, HessianClass::maximum, HessianClass::saddle, HessianClass::degenerate}) {
    std::size_t n = 0;
    for (const auto& p : pts) n += p.hessian_class == cls;
    m[to_string(cls)] = n;
  }
  return m;
}

}  // namespace

Meta census_summary(const Census& c) {
  Meta m;
  m["axis_0"] = branch_summary(c.axis_0);
  m["axis_pi"] = branch_summary(c.axis_pi);
  m["off_axis"] = branch_summary(c.off_axis);
  return m;
}

Table slice_table(const std::vector<SlicePoint>& slice) {
  Table t{{"z", "f"}, {}};
  for (const auto& p : slice) t.add({p.z, p.f});
  return t;
}

Table photon_table(const std::vector<PhotonSample>& series) {
  Table t{{"t", "photon"}, {}};
  for (const auto& s : series) t.add({s.t, s.photon});
  return t;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table t{{"value", "peak_location", "n_axis_0", "n_axis_pi", "n_off_axis", "n_min", "n_max", "n_saddle",
           "n_degenerate", "error"},
          {}};
  for (const auto& r : rows) {
    if (!r.census) {
      t.add({r.value, r.params.peak_location(), -1L, -1L, -1L, -1L, -1L, -1L, -1L, r.error});
      continue;
    }
    const auto& c = *r.census;
    t.add({r.value, r.params.peak_location(), static_cast<long>(c.axis_0.size()), static_cast<long>(c.axis_pi.size()),
           static_cast<long>(c.off_axis.size()), static_cast<long>(c.count(HessianClass::minimum)),
           static_cast<long>(c.count(HessianClass::maximum)), static_cast<long>(c.count(HessianClass::saddle)),
           static_cast<long>(c.count(HessianClass::degenerate)), std::string{}});
  }
  return t;
}

}  // namespace cavjj
