#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cavjj/atlas.hpp"
#include "cavjj/cavity.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/figures.hpp"
#include "cavjj/fixed_points.hpp"

using namespace cavjj;
constexpr double pi = std::numbers::pi;

TEST_CASE("grid geometry and validation") {
  GridSpec g;
  g.nz = 5;
  g.nphi = 3;
  CHECK(g.z_at(0) == g.z_min);
  CHECK(g.z_at(4) == g.z_max);
  CHECK(g.phi_at(1) == doctest::Approx(pi));
  GridSpec bad = g;
  bad.nz = 1;
  CHECK_THROWS(bad.validate());
  bad = g;
  bad.z_max = 1.0;
  CHECK_THROWS((void)sample_field(fig2_params(0.1), bad, Quantity::gradient));
  CHECK(linspace(0.0, 1.0, 5) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}

TEST_CASE("energy grid equals the Hamiltonian pointwise, independent of threads") {
  GridSpec g;
  g.nz = 41;
  g.nphi = 37;
  const auto rp = fig2_params(kFig2LambdaB);
  const auto a = energy_grid(rp, g, 1);
  const auto b = energy_grid(rp, g, 4);
  CHECK(a.values == b.values);
  for (std::size_t i = 0; i < g.nz; ++i) {
    for (std::size_t j = 0; j < g.nphi; ++j) {
      CHECK(a.at(i, j) == hamiltonian(State::symmetric(g.z_at(i), g.phi_at(j)), rp).h_b);
    }
  }
}

TEST_CASE("bare pendulum: r = Lambda = A = 0 gives -sqrt(1-z^2) cos(phi)") {
  GridSpec g;
  g.nz = 21;
  g.nphi = 21;
  const auto f = energy_grid(make_reduced(0, 0, 0, 0, 0, 1), g);
  for (std::size_t i = 0; i < g.nz; ++i) {
    for (std::size_t j = 0; j < g.nphi; ++j) {
      const double z = g.z_at(i);
      CHECK(f.at(i, j) == doctest::Approx(-std::sqrt(1 - z * z) * std::cos(g.phi_at(j))).epsilon(1e-14));
    }
  }
}

TEST_CASE("z-mirror symmetry holds without tilt and breaks with it") {
  GridSpec g;  // symmetric z range, odd nz
  g.nz = 201;
  g.nphi = 101;
  for (double lam : {kFig2LambdaA, kFig2LambdaB}) {
    auto rp = fig2_params(lam);
    auto flat = rp;
    flat.set_a_tilde(0.0);
    const auto f = energy_grid(flat, g);
    const auto t = energy_grid(rp, g);
    double sym = 0.0, asym = 0.0;
    for (std::size_t i = 0; i < g.nz; ++i) {
      for (std::size_t j = 0; j < g.nphi; ++j) {
        sym = std::max(sym, std::abs(f.at(i, j) - f.at(g.nz - 1 - i, j)));
        asym = std::max(asym, std::abs(t.at(i, j) - t.at(g.nz - 1 - i, j)));
      }
    }
    CHECK(sym < 1e-12);
    CHECK(asym > 1e-3);
  }
}

TEST_CASE("photon and gradient fields") {
  GridSpec g;
  g.nz = 31;
  g.nphi = 11;
  const auto rp = fig6_params(0.3, 1.0);
  const auto ph = sample_field(rp, g, Quantity::photon);
  const auto gr = sample_field(rp, g, Quantity::gradient);
  for (std::size_t i = 0; i < g.nz; ++i) {
    const double z = g.z_at(i);
    CHECK(ph.at(i, 3) == doctest::Approx(tilt_force(z, z, rp)));
    CHECK(ph.at(i, 3) == ph.at(i, 7));  // φ-independent
    CHECK(gr.at(i, 3) == doctest::Approx(eom_rhs(State::symmetric(z, g.phi_at(3)), rp).phi_b_dot));
  }
}

TEST_CASE("slices: phi = 0 and pi match the phase equation; pi/2 slice drops the hopping") {
  const auto rp = fig2_params(kFig2LambdaA);
  const auto zs = linspace(-0.9, 0.9, 19);
  const auto s0 = gradient_slice(rp, Branch::axis_0, zs);
  const auto sp = gradient_slice(rp, Branch::axis_pi, zs);
  const auto sh = gradient_along(rp, pi / 2, zs);
  for (std::size_t k = 0; k < zs.size(); ++k) {
    const double z = zs[k];
    CHECK(s0[k].f == doctest::Approx(eom_rhs(State::symmetric(z, 0.0), rp).phi_b_dot));
    CHECK(sp[k].f == doctest::Approx(eom_rhs(State::symmetric(z, pi), rp).phi_b_dot));
    CHECK(sh[k].f == doctest::Approx(3.0 * z + 0.05 * z - 0.1 * z + tilt_force(z, z, rp)).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)gradient_slice(rp, Branch::off_axis, zs), DomainError);
  // clipping keeps the pole out
  CHECK(std::isfinite(gradient_slice(rp, Branch::axis_0, {1.0, -1.0})[0].f));
}

TEST_CASE("sign changes count zero samples once") {
  CHECK(sign_changes({{0, -1}, {1, 0}, {2, 1}}) == 1);
  CHECK(sign_changes({{0, -1}, {1, 1}, {2, -1}}) == 2);
  CHECK(sign_changes({{0, 1}, {1, 2}}) == 0);
}

TEST_CASE("photon series is the tilt of the trajectory, periodic with its period") {
  const auto rp = fig6_params(0.3, 1.0);
  IntegrationControl c;
  c.step.stride = 10;
  const auto ps = photon_timeseries(State::symmetric(-0.6, 0.0), rp, 50.0, c);
  REQUIRE(ps.samples.size() == ps.trajectory.size());
  for (std::size_t i = 0; i < ps.samples.size(); ++i) {
    const auto& s = ps.trajectory.states[i];
    CHECK(ps.samples[i].photon == tilt_force(s.z_b, s.z_c, rp));
    CHECK(ps.samples[i].t == ps.trajectory.times[i]);
  }
  // the same number of photon peaks in each half of a periodic orbit
  const double period = period_estimate(ps.trajectory);
  const std::size_t half = ps.samples.size() / 2;
  const auto first = local_maxima({ps.samples.begin(), ps.samples.begin() + static_cast<std::ptrdiff_t>(half)});
  const auto second = local_maxima({ps.samples.begin() + static_cast<std::ptrdiff_t>(half), ps.samples.end()});
  CHECK(std::abs(static_cast<double>(first) - static_cast<double>(second)) <= 2.0);
  CHECK(local_maxima(ps.samples) >= static_cast<std::size_t>(50.0 / period));
}

TEST_CASE("local maxima") {
  std::vector<PhotonSample> s;
  for (int i = 0; i <= 400; ++i) s.push_back({i * 0.01, std::sin(i * 0.01 * 2 * pi)});
  CHECK(local_maxima(s) == 4);
  CHECK(local_maxima({{0, 1}, {1, 1}, {2, 1}}) == 0);
}
