#pragma once

#include <vector>

#include "cavjj/atlas.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/fixed_points.hpp"
#include "cavjj/full_model.hpp"
#include "cavjj/output.hpp"

namespace cavjj {

// t, z_b, phi_b, z_c, phi_c, H_b, H_c, photon, K. `raw_photons` switches photon to |α|².
[[nodiscard]] Table trajectory_table(const Trajectory& traj, const ReducedParams& rp, bool raw_photons = false);

// The reduced columns of the projected full trajectory (reduced time 2Ωt) plus |a|², |d|²
// and the atom numbers.
[[nodiscard]] Table full_trajectory_table(const FullTrajectory& traj, const PhysicalParams& p, bool raw_photons = false);

[[nodiscard]] Table fixed_point_table(const Census& c);
[[nodiscard]] Meta census_summary(const Census& c);

[[nodiscard]] Table slice_table(const std::vector<SlicePoint>& slice);
[[nodiscard]] Table photon_table(const std::vector<PhotonSample>& series);

// One row per sweep value with the per-branch and per-class counts.
[[nodiscard]] Table sweep_table(const std::vector<SweepRow>& rows);

}  // namespace cavjj
