#include "cavjj/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>

#include "cavjj/atlas.hpp"
#include "cavjj/cavity.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/figures.hpp"
#include "cavjj/fixed_points.hpp"
#include "cavjj/full_model.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

double uniform(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

struct Outcome {
  bool passed;
  std::string detail;
};

struct Check {
  std::string suite;
  std::string name;
  std::function<Outcome(Rng&, unsigned)> run;
};

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

ReducedParams random_reduced(Rng& g) {
  ReducedParams rp = make_reduced(uniform(g, 0.0, 5.0), uniform(g, 0.0, 1.0), uniform(g, 0.0, 4.0),
                                  uniform(g, -0.1, 0.1), uniform(g, -1.0, 1.0), uniform(g, 0.05, 0.5),
                                  uniform(g, 0.0, 0.5), uniform(g, 0.1, 2.0));
  rp.r_c = uniform(g, 0.0, 5.0);
  return rp;
}

PhysicalParams random_physical(Rng& g) {
  PhysicalParams p;
  p.omega = uniform(g, 0.5, 2.0);
  p.n_atoms = uniform(g, 10.0, 1000.0);
  p.u0 = uniform(g, 0.01, 1.0);
  p.v_intra = uniform(g, 0.0, 0.05);
  p.v_inter = uniform(g, 0.0, 0.01);
  p.s_pair = uniform(g, 0.0, 0.01);
  p.kappa = uniform(g, 0.1, 5.0);
  p.eta = uniform(g, 0.0, 5.0);
  p.omega_c = uniform(g, -5.0, 5.0);
  p.omega_p = uniform(g, -5.0, 5.0);
  p.omega_m = uniform(g, -5.0, 5.0);
  p.g0_mirror = uniform(g, 0.0, 2.0);
  p.j1 = uniform(g, 0.5, 1.0);
  p.j2 = uniform(g, 0.0, 0.4);
  p.j2p = uniform(g, 0.0, 0.4);
  p.j1p = p.j2p + (p.j1 - p.j2);
  return p;
}

Outcome outcome(bool ok, const std::string& detail) { return {ok, detail}; }

// ---------------------------------------------------------------- params

std::vector<Check> params_checks() {
  std::vector<Check> out;
  out.push_back({"params", "reduce: r=3, r_bc=0.1 from Omega=1, N=100, V=0.06, V'=0.002", [](Rng&, unsigned) {
    PhysicalParams p;
    p.omega = 1.0;
    p.n_atoms = 100.0;
    p.v_intra = 0.06;
    p.v_inter = 0.002;
    p.u0 = 1.0;
    const auto rp = reduce(p);
    const double err = std::max(std::abs(rp.r_b - 3.0), std::abs(rp.r_bc - 0.1));
    return outcome(err < 1e-12 && rp.r_b == rp.r_c, "max error " + sci(err));
  }});
  out.push_back({"params", "reduce is homogeneous in (eta, kappa, Delta, G0, Delta', X)", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto p = random_physical(g);
      const double c = uniform(g, 0.1, 10.0);
      auto q = p;
      q.u0 = *p.u0 * c;
      q.eta *= c;
      q.kappa *= c;
      q.g0_mirror *= c;
      q.omega_c *= c;
      q.omega_p *= c;
      q.omega_m *= c;
      const auto a = reduce(p), b = reduce(q);
      for (auto [x, y] : {std::pair{a.a_pump, b.a_pump}, {a.b_detune, b.b_detune}, {a.c_loss, b.c_loss},
                          {a.d_mirror, b.d_mirror}, {a.e_mirror_detune, b.e_mirror_detune}}) {
        worst = std::max(worst, rel(y, x));
      }
    }
    return outcome(worst < 1e-12, "max relative change " + sci(worst));
  }});
  out.push_back({"params", "r, r_bc, Lambda invariant under N->cN, (V,V',S)->/c", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto p = random_physical(g);
      const double c = uniform(g, 0.1, 10.0);
      auto q = p;
      q.n_atoms *= c;
      q.v_intra /= c;
      q.v_inter /= c;
      q.s_pair /= c;
      q.u0 = *p.u0 / c;  // keeps X, so the remaining parameters stay comparable
      const auto a = reduce(p), b = reduce(q);
      worst = std::max({worst, rel(b.r_b, a.r_b), rel(b.r_bc, a.r_bc), rel(b.lambda, a.lambda)});
    }
    return outcome(worst < 1e-12, "max relative change " + sci(worst));
  }});
  out.push_back({"params", "no_mirror tilt independent of E", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      auto rp = no_mirror(random_reduced(g));
      auto other = rp;
      other.e_mirror_detune = uniform(g, -5.0, 5.0);
      if (other.e_mirror_detune == 0.0) continue;
      const double zb = uniform(g, -1.0, 1.0), zc = uniform(g, -1.0, 1.0);
      worst = std::max(worst, rel(tilt_force(zb, zc, other), tilt_force(zb, zc, rp)));
    }
    return outcome(worst < 1e-13, "max relative difference " + sci(worst));
  }});
  return out;
}

// ---------------------------------------------------------------- cavity

std::vector<Check> cavity_checks() {
  std::vector<Check> out;
  out.push_back({"cavity", "photon number depends on z_b + z_c only", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const auto rp = random_reduced(g);
      const double zb = uniform(g, -0.5, 0.5), zc = uniform(g, -0.5, 0.5), d = uniform(g, -0.4, 0.4);
      worst = std::max(worst, rel(photon_number(zb + d, zc - d, rp), photon_number(zb, zc, rp)));
    }
    return outcome(worst < 1e-12, "max relative difference " + sci(worst));
  }});
  out.push_back({"cavity", "photon number symmetric about the peak", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const auto rp = random_reduced(g);
      const double s0 = rp.peak_location(), u = uniform(g, 0.0, 1.0);
      worst = std::max(worst, rel(photon_number(s0 + u, 0.0, rp), photon_number(s0 - u, 0.0, rp)));
    }
    return outcome(worst < 1e-10, "max relative difference " + sci(worst));
  }});
  out.push_back({"cavity", "tilt potential strictly increasing with range +-A^2 pi/(2C)", [](Rng& g, unsigned) {
    bool ok = true;
    for (int k = 0; k < 100 && ok; ++k) {
      auto rp = random_reduced(g);
      if (rp.a_pump == 0.0) continue;
      const double bound = rp.a_pump * rp.a_pump * kPi / (2.0 * rp.c_loss);
      double last = -INFINITY;
      for (const double s : linspace(-4.0, 4.0, 801)) {
        const double f = tilt_potential(s, 0.0, rp);
        ok = ok && f > last && std::abs(f) < bound;
        last = f;
      }
    }
    return outcome(ok, ok ? "monotone and bounded on 100 draws" : "violation found");
  }});
  out.push_back({"cavity", "central difference of F reproduces the photon number", [](Rng& g, unsigned) {
    double worst = 0.0;
    const double h = 1e-6;
    for (int k = 0; k < 500; ++k) {
      const auto rp = random_reduced(g);
      const double zb = uniform(g, -1.0, 1.0), zc = uniform(g, -1.0, 1.0);
      const double fd = (tilt_potential(zb + h, zc, rp) - tilt_potential(zb - h, zc, rp)) / (2.0 * h);
      const double exact = photon_number(zb, zc, rp);
      worst = std::max(worst, std::abs(fd - exact) / std::max(exact, 1e-300));
    }
    return outcome(worst < 1e-6, "max relative error " + sci(worst));
  }});
  out.push_back({"cavity", "|steady_alpha|^2 equals the reduced photon number", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto p = random_physical(g);
      const auto rp = reduce(p);
      const double zb = uniform(g, -1.0, 1.0), zc = uniform(g, -1.0, 1.0), n = p.n_atoms;
      const Populations pop{n * (1 + zb) / 2, n * (1 - zb) / 2, n * (1 + zc) / 2, n * (1 - zc) / 2};
      const double a2 = std::norm(steady_alpha(p, pop, uniform(g, 0.0, 10.0)));
      const double want = photon_number(zb, zc, rp);
      worst = std::max(worst, std::abs(a2 - want) / std::max(want, 1e-300));
    }
    return outcome(worst < 1e-9, "max relative error " + sci(worst));
  }});
  out.push_back({"cavity", "Lorentzian argmax and FWHM on a 1e-4 grid", [](Rng& g, unsigned) {
    double peak_err = 0.0, width_err = 0.0;
    for (int k = 0; k < 50; ++k) {
      auto rp = random_reduced(g);
      rp.set_a_tilde(uniform(g, 0.01, 0.1));
      rp.d_mirror = uniform(g, 0.0, 0.3);
      rp.e_mirror_detune = uniform(g, 0.5, 2.0);
      rp.b_detune = uniform(g, -1.0, 1.0) - rp.d_mirror * rp.d_mirror / rp.e_mirror_detune;
      rp.c_loss = uniform(g, 0.05, 0.3);
      const auto s = linspace(-2.0, 2.0, 40001);
      std::vector<double> f(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) f[i] = photon_number(s[i], 0.0, rp);
      const auto imax = static_cast<std::size_t>(std::distance(f.begin(), std::max_element(f.begin(), f.end())));
      peak_err = std::max(peak_err, std::abs(s[imax] - rp.peak_location()) / 1e-4);
      const double half = f[imax] / 2.0;
      std::size_t lo = imax, hi = imax;
      while (lo > 0 && f[lo] > half) --lo;
      while (hi + 1 < f.size() && f[hi] > half) ++hi;
      const auto cross = [&](std::size_t a, std::size_t b) {
        return s[a] + (half - f[a]) * (s[b] - s[a]) / (f[b] - f[a]);
      };
      const double width = cross(hi - 1, hi) - cross(lo, lo + 1);
      width_err = std::max(width_err, std::abs(width - 2.0 * rp.c_loss) / (2.0 * rp.c_loss));
    }
    return outcome(peak_err <= 1.0 && width_err < 0.01,
                   "peak offset " + sci(peak_err) + " grid steps, FWHM error " + sci(width_err));
  }});
  out.push_back({"cavity", "E=0 gives zero photons", [](Rng& g, unsigned) {
    bool ok = true;
    for (int k = 0; k < 100; ++k) {
      auto rp = random_reduced(g);
      rp.e_mirror_detune = 0.0;
      ok = ok && photon_number(uniform(g, -1, 1), uniform(g, -1, 1), rp) == 0.0;
    }
    return outcome(ok, ok ? "exactly 0" : "nonzero value");
  }});
  return out;
}

// ---------------------------------------------------------------- dynamics

double endpoint_error(const State& a, const State& b) {
  return std::sqrt(std::pow(a.z_b - b.z_b, 2) + std::pow(a.phi_b - b.phi_b, 2) + std::pow(a.z_c - b.z_c, 2) +
                   std::pow(a.phi_c - b.phi_c, 2));
}

std::vector<Check> dynamics_checks() {
  std::vector<Check> out;
  out.push_back({"dynamics", "generating functions: dH_n/dz_n = phi_n', -dH_n/dphi_n = z_n'", [](Rng& g, unsigned) {
    double worst = 0.0;
    const double h = 1e-6;
    for (int p = 0; p < 20; ++p) {
      const auto rp = random_reduced(g);
      for (int k = 0; k < 50; ++k) {
        const State x{uniform(g, -0.95, 0.95), uniform(g, -kPi, kPi), uniform(g, -0.95, 0.95), uniform(g, -kPi, kPi)};
        const auto r = eom_rhs(x, rp);
        auto shifted = [&](double dzb, double dpb, double dzc, double dpc) {
          return hamiltonian({x.z_b + dzb, x.phi_b + dpb, x.z_c + dzc, x.phi_c + dpc}, rp);
        };
        const double dhb_dz = (shifted(h, 0, 0, 0).h_b - shifted(-h, 0, 0, 0).h_b) / (2 * h);
        const double dhb_dp = (shifted(0, h, 0, 0).h_b - shifted(0, -h, 0, 0).h_b) / (2 * h);
        const double dhc_dz = (shifted(0, 0, h, 0).h_c - shifted(0, 0, -h, 0).h_c) / (2 * h);
        const double dhc_dp = (shifted(0, 0, 0, h).h_c - shifted(0, 0, 0, -h).h_c) / (2 * h);
        worst = std::max({worst, rel(dhb_dz, r.phi_b_dot), rel(-dhb_dp, r.z_b_dot), rel(dhc_dz, r.phi_c_dot),
                          rel(-dhc_dp, r.z_c_dot)});
      }
    }
    return outcome(worst < 1e-6, "max relative error " + sci(worst));
  }});
  out.push_back({"dynamics", "right-hand side is 2pi-periodic in the phases", [](Rng& g, unsigned) {
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const auto rp = random_reduced(g);
      const State x{uniform(g, -0.95, 0.95), uniform(g, -kPi, kPi), uniform(g, -0.95, 0.95), uniform(g, -kPi, kPi)};
      const State y{x.z_b, x.phi_b + 2 * kPi, x.z_c, x.phi_c - 2 * kPi};
      const auto a = eom_rhs(x, rp), b = eom_rhs(y, rp);
      worst = std::max({worst, rel(b.phi_b_dot, a.phi_b_dot), rel(b.z_b_dot, a.z_b_dot),
                        rel(b.phi_c_dot, a.phi_c_dot), rel(b.z_c_dot, a.z_c_dot)});
    }
    return outcome(worst < 1e-12, "max relative difference " + sci(worst));
  }});
  out.push_back({"dynamics", "coupled energy K conserved (fig2a set, dt=1e-3, t=100)", [](Rng&, unsigned) {
    const auto traj = integrate(State::symmetric(-0.6, 0.0), fig2_params(kFig2LambdaA), 100.0);
    double drift = 0.0;
    for (double k : traj.total_energy) drift = std::max(drift, std::abs(k - traj.total_energy.front()));
    return outcome(drift < 1e-8 && !traj.singular, "max |K - K0| = " + sci(drift));
  }});
  out.push_back({"dynamics", "H_b and H_c conserved separately when decoupled", [](Rng&, unsigned) {
    const auto rp = make_reduced(3.0, 0.0, 0.1, 0.0, -0.65, 0.07);
    const auto traj = integrate({-0.6, 0.0, 0.3, 1.0}, rp, 100.0);
    double drift = 0.0;
    for (const auto& e : traj.energies) {
      drift = std::max({drift, std::abs(e.h_b - traj.energies.front().h_b), std::abs(e.h_c - traj.energies.front().h_c)});
    }
    return outcome(drift < 1e-8, "max drift " + sci(drift));
  }});
  out.push_back({"dynamics", "(z, phi) -> (-z, -phi) maps trajectories to trajectories when A~=0", [](Rng& g, unsigned) {
    auto rp = random_reduced(g);
    rp.set_a_tilde(0.0);
    const State x0{uniform(g, -0.8, 0.8), uniform(g, -1.0, 1.0), uniform(g, -0.8, 0.8), uniform(g, -1.0, 1.0)};
    const auto a = integrate(x0, rp, 10.0);
    const auto b = integrate({-x0.z_b, -x0.phi_b, -x0.z_c, -x0.phi_c}, rp, 10.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      worst = std::max({worst, std::abs(a.states[i].z_b + b.states[i].z_b), std::abs(a.states[i].phi_b + b.states[i].phi_b),
                        std::abs(a.states[i].z_c + b.states[i].z_c), std::abs(a.states[i].phi_c + b.states[i].phi_c)});
    }
    return outcome(worst < 1e-10 && a.size() == b.size(), "max deviation " + sci(worst));
  }});
  out.push_back({"dynamics", "RK4 order 4 +- 0.2 from dt halving", [](Rng&, unsigned) {
    const auto rp = fig2_params(kFig2LambdaA);
    const State x0 = State::symmetric(-0.6, 0.0);
    IntegrationControl ref_ctl;
    ref_ctl.step.dt = 5e-4 / 16.0;
    const auto ref = integrate(x0, rp, 10.0, ref_ctl).states.back();
    const double dts[] = {4e-3, 2e-3, 1e-3, 5e-4};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double dt : dts) {
      IntegrationControl c;
      c.step.dt = dt;
      const double e = endpoint_error(integrate(x0, rp, 10.0, c).states.back(), ref);
      const double lx = std::log(dt), ly = std::log(e);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    return outcome(std::abs(slope - 4.0) <= 0.2, "slope " + std::to_string(slope));
  }});
  out.push_back({"dynamics", "small-amplitude period matches the linearization", [](Rng&, unsigned) {
    double worst = 0.0;
    for (double lambda : {0.0, 1.0, 2.0}) {
      auto rp = fig3_params(lambda);
      rp.set_a_tilde(0.0);
      const double want =
          2 * kPi / std::sqrt((1 + 2 * lambda) * (1 + rp.r_b + rp.r_bc / 2 + lambda));
      const double got = period_estimate(integrate(State::symmetric(0.01, 0.0), rp, 12 * want));
      worst = std::max(worst, std::abs(got - want) / want);
    }
    return outcome(worst < 5e-3, "max relative error " + sci(worst));
  }});
  out.push_back({"dynamics", "Rabi limit period 2pi", [](Rng&, unsigned) {
    const auto rp = make_reduced(0, 0, 0, 0, 0, 1);
    const double got = period_estimate(integrate(State::symmetric(0.01, 0.0), rp, 40.0));
    const double err = std::abs(got - 2 * kPi) / (2 * kPi);
    return outcome(err < 5e-3, "period " + std::to_string(got));
  }});
  out.push_back({"dynamics", "regimes: Josephson (r=0.1) and self-trapped (r=20)", [](Rng&, unsigned) {
    const auto j = classify_regime(integrate(State::symmetric(-0.6, 0.0), make_reduced(0.1, 0, 0, 0, 0, 1), 60.0));
    const auto s = classify_regime(integrate(State::symmetric(0.9, 0.0), make_reduced(20, 0, 0, 0, 0, 1), 60.0));
    const bool ok = j.regime == Regime::josephson && s.regime != Regime::josephson;
    return outcome(ok, to_string(j.regime) + " / " + to_string(s.regime));
  }});
  return out;
}

// ---------------------------------------------------------------- full model

PhysicalParams adiabatic_params() {
  PhysicalParams p;
  p.omega = 0.5;
  p.n_atoms = 100.0;
  p.u0 = 2.0;
  p.kappa = 100.0;
  p.v_intra = 0.03;
  p.v_inter = 0.001;
  p.s_pair = 0.001;
  p.eta = 50.0;
  p.omega_c = 0.0;
  p.omega_p = 170.0;
  p.omega_m = 270.0;
  return p;
}

std::vector<Check> full_model_checks() {
  std::vector<Check> out;
  out.push_back({"full_model", "project(construct(x)) = x", [](Rng& g, unsigned) {
    const auto p = adiabatic_params();
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const State x{uniform(g, -0.99, 0.99), uniform(g, -3.0, 3.0), uniform(g, -0.99, 0.99), uniform(g, -3.0, 3.0)};
      const auto y = project(construct(x, p), p).state;
      worst = std::max(worst, endpoint_error(x, y));
    }
    return outcome(worst < 1e-12, "max error " + sci(worst));
  }});
  out.push_back({"full_model", "adiabatic limit matches the reduced model (kappa/2Omega=100)", [](Rng&, unsigned) {
    const auto p = adiabatic_params();
    const auto rp = reduce(p);
    const State x0 = State::symmetric(-0.6, 0.0);
    IntegrationControl rc;
    rc.step.stride = 10;
    const auto red = integrate(x0, rp, 10.0, rc);
    FullIntegrationControl fc;
    fc.step.dt = 1e-2 / (2 * p.omega);
    const auto full = integrate_full(construct(x0, p), p, 10.0 / (2 * p.omega), fc);
    double dev = 0.0, dn = 0.0;
    std::optional<State> prev;
    for (std::size_t i = 0; i < std::min(full.states.size(), red.size()); ++i) {
      const auto pr = project(full.states[i], p, prev);
      prev = pr.state;
      dev = std::max(dev, std::abs(pr.state.z_b - red.states[i].z_b));
      dn = std::max({dn, std::abs(full.states[i].atoms_b() - p.n_atoms) / p.n_atoms,
                     std::abs(full.states[i].atoms_c() - p.n_atoms) / p.n_atoms});
    }
    return outcome(dev < 0.02 && dn < 1e-8 && full.states.size() == red.size(),
                   "max |dz_b| " + sci(dev) + ", atom drift " + sci(dn));
  }});
  out.push_back({"full_model", "empty cavity decays at rate kappa", [](Rng&, unsigned) {
    auto p = adiabatic_params();
    p.eta = 0.0;
    p.kappa = 3.0;
    auto x = construct(State::symmetric(0.2, 0.0), p, FieldInit::vacuum);
    x.a = 1.0;
    FullIntegrationControl fc;
    fc.step.dt = 0.01;
    const auto traj = integrate_full(x, p, 2.0, fc);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double t = traj.times[i], y = std::log(std::abs(traj.states[i].a));
      sx += t;
      sy += y;
      sxx += t * t;
      sxy += t * y;
    }
    const double rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double err = std::abs(rate - p.kappa) / p.kappa;
    return outcome(err < 0.01, "fitted rate " + std::to_string(rate));
  }});
  out.push_back({"full_model", "cavity relaxes to the steady amplitude (frozen atoms)", [](Rng&, unsigned) {
    auto p = adiabatic_params();
    p.omega = 1e-12;  // frozen atoms
    p.v_intra = p.v_inter = p.s_pair = 0.0;
    const auto x = construct(State::symmetric(0.3, 0.0), p, FieldInit::vacuum);
    const double n = p.n_atoms;
    const double want = std::norm(steady_alpha(p, {n * 1.3 / 2, n * 0.7 / 2, n * 1.3 / 2, n * 0.7 / 2}, 0.0));
    FullIntegrationControl fc;
    fc.step.dt = 1.0 / p.kappa;
    const auto traj = integrate_full(x, p, 8.0 / p.kappa, fc);
    const double at5 = std::abs(std::norm(traj.states[5].a) - want) / want;
    const double at8 = std::abs(std::norm(traj.states.back().a) - want) / want;
    return outcome(at5 < 2.0 * std::exp(-5.0) + 1e-6 && at8 < 1e-3,
                   "relative error " + sci(at5) + " at 5/kappa, " + sci(at8) + " at 8/kappa");
  }});
  return out;
}

// ---------------------------------------------------------------- fixed points

std::vector<Check> fixed_point_checks() {
  std::vector<Check> out;
  out.push_back({"fixed_points", "residuals < 1e-10 on both figure sets", [](Rng&, unsigned) {
    double worst = 0.0;
    for (double lambda : {kFig2LambdaA, kFig2LambdaB}) {
      for (const auto& fp : census(fig2_params(lambda)).all()) worst = std::max(worst, fp.residual);
    }
    return outcome(worst < 1e-10, "max residual " + sci(worst));
  }});
  out.push_back({"fixed_points", "closed-form axis roots (A~=0)", [](Rng&, unsigned) {
    const auto rp = make_reduced(3.0, 0.1, 0.1, 0.0, -0.65, 0.07);
    const auto roots = axis_fixed_points(rp, Branch::axis_pi);
    const double z = std::sqrt(1.0 - 1.0 / (3.15 * 3.15));
    if (roots.size() != 3) return outcome(false, std::to_string(roots.size()) + " roots");
    const double err = std::max({std::abs(roots[0].z + z), std::abs(roots[1].z), std::abs(roots[2].z - z)});
    return outcome(err < 1e-10, "max error " + sci(err));
  }});
  out.push_back({"fixed_points", "A~=0 root lists symmetric under z -> -z", [](Rng& g, unsigned) {
    bool ok = true;
    for (int k = 0; k < 20 && ok; ++k) {
      auto rp = random_reduced(g);
      rp.r_c = rp.r_b;
      rp.set_a_tilde(0.0);
      for (Branch b : {Branch::axis_0, Branch::axis_pi}) {
        const auto r = axis_fixed_points(rp, b);
        for (std::size_t i = 0; i < r.size(); ++i) ok = ok && std::abs(r[i].z + r[r.size() - 1 - i].z) < 1e-9;
      }
    }
    return outcome(ok, ok ? "symmetric on 20 draws" : "asymmetric root list");
  }});
  out.push_back({"fixed_points", "off-axis points pair as (phi, 2pi-phi)", [](Rng&, unsigned) {
    const auto pts = off_axis_fixed_points(fig2_params(kFig2LambdaB));
    bool ok = pts.size() % 2 == 0 && !pts.empty();
    for (const auto& p : pts) {
      const auto partner = std::find_if(pts.begin(), pts.end(), [&](const FixedPoint& q) {
        return std::abs(q.z - p.z) < 1e-12 && std::abs(q.phi + p.phi - 2 * kPi) < 1e-12 &&
               q.hessian_class == p.hessian_class;
      });
      ok = ok && partner != pts.end();
    }
    return outcome(ok, std::to_string(pts.size()) + " off-axis points");
  }});
  out.push_back({"fixed_points", "census unchanged between 4001 and 8001 grid points", [](Rng&, unsigned) {
    ScanOptions fine;
    fine.grid_points = 8001;
    bool ok = true;
    for (double lambda : {kFig2LambdaA, kFig2LambdaB}) {
      const auto a = census(fig2_params(lambda)).all();
      const auto b = census(fig2_params(lambda), fine).all();
      ok = ok && a.size() == b.size();
      for (std::size_t i = 0; ok && i < a.size(); ++i) {
        ok = std::abs(a[i].z - b[i].z) < 1e-9 && a[i].hessian_class == b[i].hessian_class;
      }
    }
    return outcome(ok, ok ? "identical" : "census differs");
  }});
  out.push_back({"fixed_points", "Hessian class agrees with brute-force comparison of H_b", [](Rng& g, unsigned) {
    // 5x5 stencil (radius 1e-4) where its 26.6 deg direction spacing can see both signs
    // (eigenvalue ratio >= 0.1); a 720-direction ring elsewhere.
    std::size_t tested = 0, bad = 0, ring = 0;
    for (int k = 0; k < 400 && tested < 200; ++k) {
      const auto rp = random_reduced(g);
      for (const auto& fp : census(rp).all()) {
        if (tested >= 200 || fp.hessian_class == HessianClass::degenerate) continue;
        const double lo = std::min(std::abs(fp.hessian_eigenvalues[0]), std::abs(fp.hessian_eigenvalues[1]));
        const double hi = std::max(std::abs(fp.hessian_eigenvalues[0]), std::abs(fp.hessian_eigenvalues[1]));
        if (lo < 1e-3 || std::abs(fp.z) > 0.999) continue;
        const double h0 = hamiltonian({fp.z, fp.phi, fp.z, fp.phi}, rp).h_b;
        int above = 0, below = 0;
        const auto probe = [&](double dz, double dphi) {
          (hamiltonian({fp.z + dz, fp.phi + dphi, fp.z, fp.phi}, rp).h_b > h0 ? above : below) += 1;
        };
        if (lo / hi >= 0.1) {
          for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
              if (i != 0 || j != 0) probe(5e-5 * i, 5e-5 * j);
            }
          }
        } else {
          ++ring;
          for (int a = 0; a < 720; ++a) probe(1e-4 * std::cos(a * kPi / 360), 1e-4 * std::sin(a * kPi / 360));
        }
        const HessianClass seen = below == 0 ? HessianClass::minimum
                                  : above == 0 ? HessianClass::maximum
                                               : HessianClass::saddle;
        bad += seen != fp.hessian_class;
        ++tested;
      }
    }
    return outcome(bad == 0 && tested >= 100, std::to_string(bad) + " mismatches in " + std::to_string(tested) + " (" +
                                                  std::to_string(ring) + " via ring)");
  }});
  return out;
}

// ---------------------------------------------------------------- atlas

std::vector<Check> atlas_checks() {
  std::vector<Check> out;
  out.push_back({"atlas", "energy grid equals hamiltonian pointwise", [](Rng&, unsigned threads) {
    const auto rp = fig2_params(kFig2LambdaB);
    GridSpec spec;
    spec.nz = spec.nphi = 41;
    const auto f = energy_grid(rp, spec, threads);
    bool ok = true;
    for (std::size_t i = 0; i < spec.nz; ++i) {
      for (std::size_t j = 0; j < spec.nphi; ++j) {
        ok = ok && f.at(i, j) == hamiltonian(State::symmetric(spec.z_at(i), spec.phi_at(j)), rp).h_b;
      }
    }
    return outcome(ok, ok ? "exact" : "mismatch");
  }});
  out.push_back({"atlas", "A~=0 grid symmetric, A~!=0 grid asymmetric", [](Rng&, unsigned threads) {
    auto rp = fig2_params(kFig2LambdaA);
    const auto asym = [&](const ReducedParams& p) {
      const GridSpec spec;
      const auto f = energy_grid(p, spec, threads);
      double worst = 0.0;
      for (std::size_t i = 0; i < spec.nz; ++i) {
        for (std::size_t j = 0; j < spec.nphi; ++j) worst = std::max(worst, std::abs(f.at(i, j) - f.at(spec.nz - 1 - i, j)));
      }
      return worst;
    };
    const double broken = asym(rp);
    rp.set_a_tilde(0.0);
    const double sym = asym(rp);
    return outcome(sym < 1e-12 && broken > 1e-3, "A~=0: " + sci(sym) + ", A~=0.02: " + sci(broken));
  }});
  out.push_back({"atlas", "slice sign changes equal the axis root census", [](Rng&, unsigned) {
    bool ok = true;
    std::string detail;
    const auto zs = linspace(-1.0 + 1e-6, 1.0 - 1e-6, 4001);
    for (double lambda : {kFig2LambdaA, kFig2LambdaB}) {
      const auto rp = fig2_params(lambda);
      for (Branch b : {Branch::axis_0, Branch::axis_pi}) {
        const auto n_slice = sign_changes(gradient_slice(rp, b, zs));
        const auto n_roots = axis_fixed_points(rp, b).size();
        ok = ok && n_slice == n_roots;
        detail += std::to_string(n_slice) + "/" + std::to_string(n_roots) + " ";
      }
    }
    return outcome(ok, detail);
  }});
  out.push_back({"atlas", "photon series equals photon number along the trajectory", [](Rng&, unsigned) {
    const auto rp = fig6_params(0.2, 0.1);
    const auto s = photon_timeseries(State::symmetric(-0.6, 0.0), rp, 10.0);
    bool ok = !s.samples.empty();
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      const auto& x = s.trajectory.states[i];
      ok = ok && s.samples[i].photon == tilt_force(x.z_b, x.z_c, rp);
    }
    return outcome(ok, ok ? "exact" : "mismatch");
  }});
  return out;
}

// ---------------------------------------------------------------- cli

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<Check> cli_checks() {
  std::vector<Check> out;
  out.push_back({"cli", "reproduce fig2a is byte-identical across runs", [](Rng& g, unsigned threads) {
    const auto base = fs::temp_directory_path() / ("cavjj_validate_" + std::to_string(g()));
    ReproduceOptions a, b;
    a.out_dir = base / "a";
    b.out_dir = base / "b";
    a.threads = threads;
    b.threads = 1;
    const auto ra = reproduce("fig2a", a);
    const auto rb = reproduce("fig2a", b);
    bool ok = ra.files.size() == rb.files.size();
    for (std::size_t i = 0; ok && i < ra.files.size(); ++i) ok = slurp(ra.files[i]) == slurp(rb.files[i]);
    std::error_code ec;
    fs::remove_all(base, ec);
    return outcome(ok, std::to_string(ra.files.size()) + " files compared");
  }});
  return out;
}

std::vector<Check> all_checks(const std::string& suite) {
  std::vector<Check> out;
  const auto add = [&](std::vector<Check> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (suite == "params" || suite == "all") add(params_checks());
  if (suite == "cavity" || suite == "all") add(cavity_checks());
  if (suite == "dynamics" || suite == "all") add(dynamics_checks());
  if (suite == "full_model" || suite == "all") add(full_model_checks());
  if (suite == "fixed_points" || suite == "all") add(fixed_point_checks());
  if (suite == "atlas" || suite == "all") add(atlas_checks());
  if (suite == "cli" || suite == "all") add(cli_checks());
  return out;
}

}  // namespace

const std::vector<std::string>& validation_suites() {
  static const std::vector<std::string> s{"params", "cavity", "dynamics", "full_model", "fixed_points", "atlas", "cli", "all"};
  return s;
}

std::vector<CheckResult> run_validation(const std::string& suite, std::uint64_t seed, unsigned threads) {
  if (std::find(validation_suites().begin(), validation_suites().end(), suite) == validation_suites().end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> results;
  std::size_t index = 0;
  for (const auto& check : all_checks(suite)) {
    // independent stream per check so adding checks does not shift the others' draws
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * ++index);
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{check.suite, check.name, false, {}, 0.0};
    try {
      const auto o = check.run(rng, threads);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cavjj
