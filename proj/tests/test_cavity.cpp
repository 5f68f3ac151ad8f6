#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cavjj/cavity.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/params.hpp"

using namespace cavjj;
using cd = std::complex<double>;

TEST_CASE("Lorentzian peak and half maximum without mirror") {
  const auto rp = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07);
  const double a2 = rp.a_pump * rp.a_pump;
  CHECK(photon_number(-0.65, 0.0, rp) == doctest::Approx(a2 / 0.0049).epsilon(1e-14));
  CHECK(photon_number(-0.65 + 0.07, 0.0, rp) == doctest::Approx(a2 / (2 * 0.0049)).epsilon(1e-14));
  CHECK(photon_number(-0.65 - 0.07, 0.0, rp) == doctest::Approx(a2 / (2 * 0.0049)).epsilon(1e-14));
  // tilt units: Ã / C² = 0.02 / 0.0049
  CHECK(tilt_force(-0.325, -0.325, rp) == doctest::Approx(4.081632653061).epsilon(1e-11));
}

TEST_CASE("E = 0 gives exactly zero photons and no profile") {
  auto rp = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.3, 0.0);
  CHECK(photon_number(0.1, 0.2, rp) == 0.0);
  CHECK(tilt_force(0.1, 0.2, rp) == 0.0);
  CHECK(tilt_force_slope(0.1, 0.2, rp) == 0.0);
  CHECK_THROWS_AS((void)tilt_potential(0.1, 0.2, rp), DomainError);
  CHECK_THROWS_AS((void)lorentzian_profile(rp), DomainError);
}

TEST_CASE("profile: peak shifts by D^2/E") {
  const auto nm = lorentzian_profile(make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07));
  CHECK(nm.peak_location == doctest::Approx(-0.65));
  CHECK(nm.fwhm == doctest::Approx(0.14));
  const auto m = lorentzian_profile(make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.3, 0.1));
  CHECK(m.peak_location == doctest::Approx(0.25));
  CHECK(m.peak_value == doctest::Approx(0.02 / 0.0049));
}

TEST_CASE("tilt potential: zero at the peak, arctan limits, monotone") {
  const auto rp = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.3, 0.1);
  CHECK(tilt_potential(0.25, 0.0, rp) == doctest::Approx(0.0).epsilon(1e-15));
  const double lim = rp.a_pump * rp.a_pump * std::numbers::pi / (2 * rp.c_loss);
  CHECK(tilt_potential(1e9, 0.0, rp) == doctest::Approx(lim).epsilon(1e-9));
  CHECK(tilt_potential(-1e9, 0.0, rp) == doctest::Approx(-lim).epsilon(1e-9));
  double last = -INFINITY;
  for (int i = 0; i <= 400; ++i) {
    const double f = tilt_potential(-2.0 + 0.01 * i, 0.0, rp);
    CHECK(f > last);
    last = f;
  }
}

TEST_CASE("derivatives: dF/ds = photon number, d(tilt)/ds by central differences") {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-6;
  for (int k = 0; k < 500; ++k) {
    const auto rp = make_reduced(1.0, 0.1, 0.2, 0.05 * (1 + u(g)), u(g), 0.1 + 0.05 * (1 + u(g)), 0.3 * u(g),
                                 0.2 + 0.9 * (1 + u(g)));
    const double zb = u(g), zc = u(g);
    const double fd = (tilt_potential(zb + h, zc, rp) - tilt_potential(zb - h, zc, rp)) / (2 * h);
    CHECK(std::abs(fd - photon_number(zb, zc, rp)) / photon_number(zb, zc, rp) < 1e-6);
    const double fd2 = (tilt_force(zb + h, zc, rp) - tilt_force(zb - h, zc, rp)) / (2 * h);
    CHECK(std::abs(fd2 - tilt_force_slope(zb, zc, rp)) < 1e-6 * std::max(1.0, std::abs(fd2)));
  }
}

TEST_CASE("steady_alpha without mirror is the driven-cavity steady state") {
  PhysicalParams p;
  p.omega = 1.0;
  p.n_atoms = 50.0;
  p.u0 = 0.2;
  p.kappa = 1.5;
  p.eta = 2.0;
  p.omega_c = 0.3;
  p.omega_p = 2.0;
  p.omega_m = 5.0;
  p.j1 = 1.0;
  p.j2 = 0.25;
  p.j1p = 0.75;
  p.j2p = 0.0;
  const Populations n{30.0, 20.0, 10.0, 40.0};
  const double t = 0.37;
  // i ȧ = (ω_c + U0 ΣJN) a − iκ a + η e^{−iω_p t}; steady a = −η e^{−iω_p t} / (ω_c + U0ΣJN − ω_p − iκ)
  const double shift = 0.2 * (1.0 * 30 + 0.25 * 20 + 0.75 * 10 + 0.0 * 40);
  const cd want = -p.eta * std::exp(cd(0, -p.omega_p * t)) / cd(p.omega_c + shift - p.omega_p, -p.kappa);
  const cd got = steady_alpha(p, n, t);
  CHECK(std::abs(got - want) < 1e-13);
}

TEST_CASE("|steady_alpha|^2 equals photon_number for random physical draws") {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    PhysicalParams p;
    p.omega = 0.5 + u(g);
    p.n_atoms = 10 + 500 * u(g);
    p.u0 = 0.01 + u(g);
    p.kappa = 0.1 + 3 * u(g);
    p.eta = 4 * u(g);
    p.omega_c = 10 * u(g) - 5;
    p.omega_p = 10 * u(g) - 5;
    p.omega_m = 10 * u(g) - 5;
    p.g0_mirror = 2 * u(g);
    p.j1 = 0.5 + 0.5 * u(g);
    p.j2 = 0.4 * u(g);
    p.j2p = 0.4 * u(g);
    p.j1p = p.j2p + p.j1 - p.j2;
    const auto rp = reduce(p);
    const double zb = 2 * u(g) - 1, zc = 2 * u(g) - 1, n = p.n_atoms;
    const double a2 = std::norm(steady_alpha(p, {n * (1 + zb) / 2, n * (1 - zb) / 2, n * (1 + zc) / 2, n * (1 - zc) / 2}, 0.0));
    const double want = photon_number(zb, zc, rp);
    CHECK(std::abs(a2 - want) <= 1e-10 * want + 1e-300);
  }
}

TEST_CASE("photon number depends on s only and is symmetric about the peak") {
  const auto rp = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.2, 0.4);
  const double s0 = rp.peak_location();
  for (double d : {-0.3, 0.1, 0.45}) {
    CHECK(photon_number(0.1 + d, -0.2 - d, rp) == doctest::Approx(photon_number(0.1, -0.2, rp)).epsilon(1e-14));
    CHECK(photon_number(s0 + d, 0.0, rp) == doctest::Approx(photon_number(s0 - d, 0.0, rp)).epsilon(1e-12));
  }
}

TEST_CASE("D = 0: photon number independent of E") {
  auto a = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.0, 0.3);
  auto b = a;
  b.e_mirror_detune = 7.0;
  for (double s : {-1.0, -0.6, 0.2}) CHECK(photon_number(s, 0, a) == doctest::Approx(photon_number(s, 0, b)).epsilon(1e-15));
}
