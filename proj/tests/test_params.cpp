#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cavjj/cavity.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/params.hpp"

using namespace cavjj;

namespace {

PhysicalParams base() {
  PhysicalParams p;
  p.omega = 1.0;
  p.n_atoms = 100.0;
  p.u0 = 0.5;
  p.kappa = 2.0;
  p.eta = 3.0;
  p.omega_c = 1.0;
  p.omega_p = 4.0;
  p.omega_m = 6.0;
  p.g0_mirror = 0.7;
  p.j1 = 0.9;
  p.j2 = 0.2;
  p.j1p = 0.8;
  p.j2p = 0.1;
  return p;
}

}  // namespace

TEST_CASE("interaction ratios: Omega=1, N=100, V=0.06, V'=0.002 -> r=3, r_bc=0.1") {
  auto p = base();
  p.v_intra = 0.06;
  p.v_inter = 0.002;
  p.s_pair = 0.0387;
  const auto rp = reduce(p);
  CHECK(rp.r_b == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(rp.r_c == rp.r_b);
  CHECK(rp.r_bc == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(rp.lambda == doctest::Approx(1.935).epsilon(1e-14));
}

TEST_CASE("cavity parameters follow the hand-computed ratios") {
  const auto p = base();
  const auto rp = reduce(p);
  // X = δ N U0 / 2 = 0.7 * 100 * 0.5 / 2 = 17.5
  const double x = 17.5;
  // Δ = ω_p − ω_c − (J1+J2+J1'+J2') N U0 / 2 = 4 − 1 − 2.0 * 25 = −47
  CHECK(rp.a_pump == doctest::Approx(3.0 / x));
  CHECK(rp.b_detune == doctest::Approx(-47.0 / x));
  CHECK(rp.c_loss == doctest::Approx(2.0 / x));
  CHECK(rp.d_mirror == doctest::Approx(0.7 / x));
  CHECK(rp.e_mirror_detune == doctest::Approx((6.0 - 4.0) / x));
  CHECK(rp.tilt_scale == doctest::Approx(0.7 * 0.5 / 2.0));
  CHECK(rp.a_tilde() == doctest::Approx(rp.tilt_scale * rp.a_pump * rp.a_pump));
}

TEST_CASE("zero pump and equal pump/mirror frequencies") {
  auto p = base();
  p.eta = 0.0;
  CHECK(reduce(p).a_pump == 0.0);
  CHECK(reduce(p).a_tilde() == 0.0);
  p = base();
  p.omega_m = p.omega_p;
  CHECK(reduce(p).e_mirror_detune == 0.0);
}

TEST_CASE("light shift derived from g0^2/delta_a") {
  auto p = base();
  p.u0.reset();
  p.g0_atom = 2.0;
  p.delta_a = 8.0;
  CHECK(p.light_shift() == doctest::Approx(0.5));
  CHECK(reduce(p) == reduce(base()));
  p.g0_atom.reset();
  CHECK_THROWS_AS((void)p.light_shift(), DomainError);
}

TEST_CASE("scale-zero and domain errors") {
  auto p = base();
  p.j2 = p.j1;
  CHECK_THROWS_AS((void)reduce(p), ScaleZeroError);
  p = base();
  p.u0 = 0.0;
  CHECK_THROWS_AS((void)reduce(p), ScaleZeroError);
  p = base();
  p.kappa = 0.0;
  CHECK_THROWS_AS((void)reduce(p), DomainError);
  p = base();
  p.omega = -1.0;
  CHECK_THROWS_AS((void)reduce(p), DomainError);
  p = base();
  p.n_atoms = 0.0;
  CHECK_THROWS_AS((void)reduce(p), DomainError);
  p = base();
  p.j1p = 0.5;  // δ' != δ
  CHECK_THROWS_AS((void)reduce(p), DomainError);
  p = base();
  p.u0 = -0.5;  // X < 0
  CHECK_THROWS_AS((void)reduce(p), DomainError);
}

TEST_CASE("homogeneity of the cavity parameters") {
  const auto p = base();
  for (double c : {0.25, 3.0, 17.0}) {
    auto q = p;
    q.u0 = *p.u0 * c;
    q.eta *= c;
    q.kappa *= c;
    q.g0_mirror *= c;
    q.omega_c *= c;
    q.omega_p *= c;
    q.omega_m *= c;
    const auto a = reduce(p), b = reduce(q);
    CHECK(b.a_pump == doctest::Approx(a.a_pump).epsilon(1e-13));
    CHECK(b.b_detune == doctest::Approx(a.b_detune).epsilon(1e-13));
    CHECK(b.c_loss == doctest::Approx(a.c_loss).epsilon(1e-13));
    CHECK(b.d_mirror == doctest::Approx(a.d_mirror).epsilon(1e-13));
    CHECK(b.e_mirror_detune == doctest::Approx(a.e_mirror_detune).epsilon(1e-13));
  }
}

TEST_CASE("interaction ratios invariant under N -> cN with couplings / c") {
  auto p = base();
  p.v_intra = 0.03;
  p.v_inter = 0.01;
  p.s_pair = 0.02;
  auto q = p;
  q.n_atoms *= 7.0;
  q.v_intra /= 7.0;
  q.v_inter /= 7.0;
  q.s_pair /= 7.0;
  CHECK(reduce(q).r_b == doctest::Approx(reduce(p).r_b).epsilon(1e-14));
  CHECK(reduce(q).r_bc == doctest::Approx(reduce(p).r_bc).epsilon(1e-14));
  CHECK(reduce(q).lambda == doctest::Approx(reduce(p).lambda).epsilon(1e-14));
}

TEST_CASE("no_mirror") {
  const auto rp = make_reduced(3.0, 0.1, 0.1, 0.02, -0.65, 0.07, 0.3, 0.1);
  const auto nm = no_mirror(rp);
  CHECK(nm.d_mirror == 0.0);
  CHECK(nm.e_mirror_detune == 1.0);
  CHECK(nm.r_b == rp.r_b);
  CHECK(nm.b_detune == rp.b_detune);
  CHECK(no_mirror(nm) == nm);
  // Ã / ((s − B)² + C²)
  for (double zb : {-0.7, 0.0, 0.4}) {
    for (double zc : {-0.2, 0.5}) {
      const double s = zb + zc;
      CHECK(tilt_force(zb, zc, nm) == doctest::Approx(0.02 / ((s + 0.65) * (s + 0.65) + 0.0049)).epsilon(1e-14));
      auto other = nm;
      other.e_mirror_detune = -3.7;
      CHECK(tilt_force(zb, zc, other) == doctest::Approx(tilt_force(zb, zc, nm)).epsilon(1e-15));
    }
  }
}

TEST_CASE("a_tilde round trip and validation") {
  ReducedParams rp;
  rp.set_a_tilde(-0.3);
  CHECK(rp.a_tilde() == doctest::Approx(-0.3));
  CHECK(rp.tilt_scale == -1.0);
  rp.set_a_tilde(0.02);
  CHECK(rp.a_tilde() == doctest::Approx(0.02));
  rp.c_loss = 0.0;
  CHECK_THROWS_AS(rp.validate(), DomainError);
  rp.c_loss = NAN;
  CHECK_THROWS_AS(rp.validate(), DomainError);
}
