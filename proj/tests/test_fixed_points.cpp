#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cavjj/atlas.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/figures.hpp"
#include "cavjj/fixed_points.hpp"

using namespace cavjj;
constexpr double pi = std::numbers::pi;

namespace {

// Finite-difference classification of H_b in (z_b, φ_b) with species c held fixed; a ring of
// directions is the fallback for strongly anisotropic saddles.
HessianClass brute_class(double z, double phi, const ReducedParams& rp) {
  const auto h = [&](double dz, double dp) { return hamiltonian({z + dz, phi + dp, z, phi}, rp).h_b; };
  const double e = 1e-4, h0 = h(0, 0);
  const double hzz = (h(e, 0) - 2 * h0 + h(-e, 0)) / (e * e);
  const double hpp = (h(0, e) - 2 * h0 + h(0, -e)) / (e * e);
  const double hzp = (h(e, e) - h(e, -e) - h(-e, e) + h(-e, -e)) / (4 * e * e);
  const double tr = hzz + hpp, det = hzz * hpp - hzp * hzp;
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  const double l1 = tr / 2 - disc, l2 = tr / 2 + disc;
  if (std::min(std::abs(l1), std::abs(l2)) / std::max(std::abs(l1), std::abs(l2)) >= 0.1) {
    if (l1 > 0) return HessianClass::minimum;
    if (l2 < 0) return HessianClass::maximum;
    return HessianClass::saddle;
  }
  bool up = false, down = false;
  for (int k = 0; k < 720; ++k) {
    const double a = pi * k / 360;
    const double d = h(e * std::cos(a), e * std::sin(a)) - h0;
    up = up || d > 0;
    down = down || d < 0;
  }
  return up && down ? HessianClass::saddle : (up ? HessianClass::minimum : HessianClass::maximum);
}

std::size_t count(const std::vector<FixedPoint>& v, HessianClass c) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const FixedPoint& f) { return f.hessian_class == c; }));
}

}  // namespace

TEST_CASE("closed-form axis roots without tilt") {
  const auto rp = make_reduced(3.0, 0.1, 0.1, 0.0, -0.65, 0.07);
  // φ = π: z(−1/√(1−z²) + r + r_bc/2 + Λ) = 0 → z = 0, ±√(1 − 1/3.15²)
  const auto pi_roots = axis_fixed_points(rp, Branch::axis_pi);
  REQUIRE(pi_roots.size() == 3);
  const double zr = std::sqrt(1 - 1 / (3.15 * 3.15));
  CHECK(std::abs(pi_roots[0].z + zr) < 1e-10);
  CHECK(std::abs(pi_roots[1].z) < 1e-10);
  CHECK(std::abs(pi_roots[2].z - zr) < 1e-10);
  for (const auto& f : pi_roots) CHECK(f.phi == doctest::Approx(pi));
  // φ = 0: 1/√(1−z²) + 3.15 > 0, only z = 0
  const auto zero_roots = axis_fixed_points(rp, Branch::axis_0);
  REQUIRE(zero_roots.size() == 1);
  CHECK(std::abs(zero_roots[0].z) < 1e-12);
  CHECK(zero_roots[0].hessian_class == HessianClass::minimum);
  // r + r_bc/2 + Λ < 1: the φ = π root at 0 is alone
  CHECK(axis_fixed_points(make_reduced(0.5, 0.1, 0.1, 0.0, 0, 1), Branch::axis_pi).size() == 1);
}

TEST_CASE("off-axis branch") {
  const auto rp = make_reduced(3.0, 0.1, 3.87, 0.0, -0.65, 0.07);
  const auto off = off_axis_fixed_points(rp);
  REQUIRE(off.size() == 2);
  const double want = std::acos(-1 / 7.74);
  CHECK(want == doctest::Approx(1.7003).epsilon(1e-4));
  CHECK(std::abs(off[0].z) < 1e-10);
  CHECK(std::abs(off[0].phi - want) < 1e-10);
  CHECK(std::abs(off[1].phi - (2 * pi - want)) < 1e-10);
  for (const auto& f : off) CHECK(eom_rhs(State::symmetric(f.z, f.phi), rp).max_abs() < 1e-10);
  CHECK(off_axis_fixed_points(make_reduced(3.0, 0.1, 0.4, 0.0, -0.65, 0.07)).empty());
}

TEST_CASE("Hessian at the origin") {
  const double r = 3.0, rbc = 0.1, lam = 0.7;
  const auto h = hessian_b(0.0, 0.0, make_reduced(r, rbc, lam, 0.0, 0, 1));
  // species c held fixed: the r_bc z_b z_c / 2 term is linear in z_b
  CHECK(h[0][0] == doctest::Approx(1 + r + lam));
  CHECK(h[1][1] == doctest::Approx(1 + 2 * lam));
  CHECK(std::abs(h[0][1]) < 1e-12);
  CHECK(classify(0.0, 0.0, make_reduced(r, rbc, lam, 0.0, 0, 1)).hessian_class == HessianClass::minimum);
  CHECK_THROWS_AS((void)classify(0.3, 0.0, make_reduced(r, rbc, lam, 0.0, 0, 1)), NumericalError);
}

TEST_CASE("census on the low-Lambda figure set") {
  const auto c = census(fig2_params(kFig2LambdaA));
  REQUIRE(c.axis_0.size() == 3);
  CHECK(count(c.axis_0, HessianClass::minimum) == 2);
  CHECK(count(c.axis_0, HessianClass::saddle) == 1);
  REQUIRE(c.axis_pi.size() == 5);
  CHECK(count(c.axis_pi, HessianClass::maximum) == 3);
  CHECK(count(c.axis_pi, HessianClass::saddle) == 2);
  CHECK(c.off_axis.empty());
  for (const auto& f : c.all()) CHECK(f.residual < 1e-10);
  for (std::size_t i = 1; i < c.axis_0.size(); ++i) CHECK(c.axis_0[i - 1].z < c.axis_0[i].z);
}

TEST_CASE("high-Lambda set has an off-axis maximum in (pi/2, pi)") {
  const auto c = census(fig2_params(kFig2LambdaB));
  const auto it = std::find_if(c.off_axis.begin(), c.off_axis.end(), [](const FixedPoint& f) {
    return f.hessian_class == HessianClass::maximum && f.phi > pi / 2 && f.phi < pi && std::abs(f.z) < 0.2;
  });
  CHECK(it != c.off_axis.end());
}

TEST_CASE("classification agrees with a finite-difference oracle") {
  std::mt19937_64 g(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    const auto rp = make_reduced(0.5 + 5 * u(g), 0.5 * u(g), 4 * u(g), 0.05 * u(g), -1 + u(g), 0.05 + 0.1 * u(g),
                                 0.3 * u(g), 0.1 + u(g));
    for (const auto& f : census(rp).all()) {
      if (f.hessian_class == HessianClass::degenerate) continue;
      CHECK_MESSAGE(brute_class(f.z, f.phi, rp) == f.hessian_class, "z=", f.z, " phi=", f.phi);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Jacobian eigenvalues: centres are imaginary pairs, saddles real") {
  for (const auto& f : census(fig2_params(kFig2LambdaA)).all()) {
    const auto& e = f.jacobian_eigenvalues;
    if (f.hessian_class == HessianClass::saddle) {
      CHECK(std::abs(e[0].imag()) < 1e-9);
      CHECK(e[0].real() * e[1].real() < 0);
    } else {
      CHECK(std::abs(e[0].real()) < 1e-9);
      CHECK(std::abs(e[0].imag()) > 0);
    }
  }
}

TEST_CASE("grid doubling neither gains nor loses roots") {
  for (double lam : {kFig2LambdaA, kFig2LambdaB}) {
    ScanOptions fine;
    fine.grid_points = 8001;
    const auto a = census(fig2_params(lam));
    const auto b = census(fig2_params(lam), fine);
    const auto xa = a.all(), xb = b.all();
    REQUIRE(xa.size() == xb.size());
    for (std::size_t i = 0; i < xa.size(); ++i) {
      CHECK(std::abs(xa[i].z - xb[i].z) < 1e-9);
      CHECK(xa[i].hessian_class == xb[i].hessian_class);
    }
  }
}

TEST_CASE("axis roots coincide with slice sign changes") {
  for (double lam : {kFig2LambdaA, kFig2LambdaB}) {
    const auto rp = fig2_params(lam);
    const auto zs = linspace(-1 + 1e-6, 1 - 1e-6, 20001);
    CHECK(sign_changes(gradient_slice(rp, Branch::axis_0, zs)) == axis_fixed_points(rp, Branch::axis_0).size());
    CHECK(sign_changes(gradient_slice(rp, Branch::axis_pi, zs)) == axis_fixed_points(rp, Branch::axis_pi).size());
  }
}

TEST_CASE("sweep keeps input order and is thread-independent") {
  const std::vector<double> ds{0.4, 0.0, 0.2, 0.1, 0.3};
  const auto one = bifurcation_sweep(fig4_params(0.0, 0.1), SweepParam::d_mirror, ds, {}, 1);
  const auto four = bifurcation_sweep(fig4_params(0.0, 0.1), SweepParam::d_mirror, ds, {}, 4);
  REQUIRE(one.size() == ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(one[i].value == ds[i]);
    CHECK(one[i].params.d_mirror == ds[i]);
    REQUIRE(one[i].census);
    REQUIRE(four[i].census);
    CHECK(one[i].census->all().size() == four[i].census->all().size());
  }
  // a non-finite value is recorded as an error row instead of aborting the sweep
  const auto bad = bifurcation_sweep(fig4_params(0.3, 0.1), SweepParam::e_mirror_detune, {NAN, 0.1});
  CHECK_FALSE(bad[0].error.empty());
  CHECK_FALSE(bad[0].census);
  CHECK(bad[1].census);
  // E = 0 switches the cavity off: the count is that of the bare dimer
  const auto off = bifurcation_sweep(fig4_params(0.3, 0.1), SweepParam::e_mirror_detune, {0.0});
  REQUIRE(off[0].census);
  auto bare = fig2_params(kFig2LambdaB);
  bare.set_a_tilde(0.0);
  CHECK(off[0].census->axis_0.size() == axis_fixed_points(bare, Branch::axis_0).size());
}

TEST_CASE("mirror sweeps: count toggles 3 <-> 1 and the leftmost phi=0 root drifts monotonically") {
  const auto d_rows = bifurcation_sweep(fig4_params(0.0, 0.1), SweepParam::d_mirror, linspace(0.0, 0.3, 13));
  std::vector<std::size_t> counts;
  double last = -INFINITY;
  for (const auto& r : d_rows) {
    REQUIRE(r.census);
    counts.push_back(r.census->axis_0.size());
    const double z = r.census->axis_0.front().z;
    CHECK(z > last);  // moves up with D
    last = z;
  }
  CHECK(counts.front() == 3);
  CHECK(counts.back() == 1);

  const auto e_rows = bifurcation_sweep(fig4_params(0.3, 0.1), SweepParam::e_mirror_detune, {0.1, 0.2, 0.3, 0.5, 1.0});
  last = INFINITY;
  for (const auto& r : e_rows) {
    REQUIRE(r.census);
    const double z = r.census->axis_0.front().z;
    CHECK(z < last);  // moves down with E
    last = z;
  }
  CHECK(e_rows.front().census->axis_0.size() == 1);
  CHECK(e_rows.back().census->axis_0.size() == 3);
}

TEST_CASE("sweep parameter names") {
  for (auto p : {SweepParam::d_mirror, SweepParam::e_mirror_detune, SweepParam::b_detune, SweepParam::lambda,
                 SweepParam::a_tilde}) {
    CHECK(parse_sweep_param(to_string(p)) == p);
  }
  CHECK_FALSE(parse_sweep_param("bogus"));
  CHECK(with_param(fig2_params(0.1), SweepParam::a_tilde, 0.5).a_tilde() == doctest::Approx(0.5));
}
