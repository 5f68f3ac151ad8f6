#include "cavjj/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cavjj/errors.hpp"

namespace cavjj {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

double PhysicalParams::light_shift() const {
  if (u0) return *u0;
  if (g0_atom && delta_a) {
    if (*delta_a == 0.0) throw DomainError("delta_a must be nonzero to derive u0");
    return (*g0_atom) * (*g0_atom) / (*delta_a);
  }
  throw DomainError("u0 is not set and cannot be derived from g0_atom/delta_a");
}

double PhysicalParams::reduction_scale() const {
  return coupling_difference() * n_atoms * light_shift() / 2.0;
}

double PhysicalParams::cavity_detuning() const {
  return omega_p - omega_c - (j1 + j2 + j1p + j2p) * n_atoms * light_shift() / 2.0;
}

void PhysicalParams::validate() const {
  for (auto [v, name] : {std::pair{omega, "omega"}, {v_intra, "v_intra"}, {v_inter, "v_inter"},
                         {s_pair, "s_pair"}, {n_atoms, "n_atoms"}, {kappa, "kappa"}, {eta, "eta"},
                         {omega_c, "omega_c"}, {omega_p, "omega_p"}, {omega_m, "omega_m"},
                         {g0_mirror, "g0_mirror"}, {j1, "j1"}, {j2, "j2"}, {j1p, "j1p"}, {j2p, "j2p"}}) {
    require_finite(v, name);
  }
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
  if (!(n_atoms > 0.0)) throw DomainError("n_atoms must be > 0");
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (j1 == j2) throw DomainError("j1 must differ from j2");
  require_finite(light_shift(), "u0");
}

void ReducedParams::set_a_tilde(double value) {
  tilt_scale = value < 0.0 ? -1.0 : 1.0;
  a_pump = std::sqrt(std::abs(value));
}

void ReducedParams::validate() const {
  for (auto [v, name] : {std::pair{r_b, "r_b"}, {r_c, "r_c"}, {r_bc, "r_bc"}, {lambda, "lambda"},
                         {a_pump, "a_pump"}, {b_detune, "b_detune"}, {c_loss, "c_loss"},
                         {d_mirror, "d_mirror"}, {e_mirror_detune, "e_mirror_detune"},
                         {tilt_scale, "tilt_scale"}}) {
    require_finite(v, name);
  }
  if (!(c_loss > 0.0)) throw DomainError("c_loss must be > 0");
}

ReducedParams reduce(const PhysicalParams& p) {
  if (p.coupling_difference() == 0.0) throw ScaleZeroError("j1 == j2: the cavity does not tilt the double well");
  if (p.light_shift() == 0.0) throw ScaleZeroError("u0 == 0: the cavity does not tilt the double well");
  p.validate();

  const double delta = p.coupling_difference();
  const double delta_p = p.j1p - p.j2p;
  if (std::abs(delta_p - delta) > 1e-12 * std::max(1.0, std::abs(delta))) {
    throw DomainError("the reduced model requires j1 - j2 == j1p - j2p");
  }
  const double x = p.reduction_scale();
  if (!(x > 0.0)) {
    throw DomainError("delta*N*U0/2 must be > 0 (swap the well labels to flip its sign)");
  }

  const double u0 = p.light_shift();
  ReducedParams rp;
  rp.r_b = p.n_atoms * p.v_intra / (2.0 * p.omega);
  rp.r_c = rp.r_b;
  rp.r_bc = p.n_atoms * p.v_inter / (2.0 * p.omega);
  rp.lambda = p.n_atoms * p.s_pair / (2.0 * p.omega);
  rp.a_pump = p.eta / x;
  rp.b_detune = p.cavity_detuning() / x;
  rp.c_loss = p.kappa / x;
  rp.d_mirror = p.g0_mirror / x;
  rp.e_mirror_detune = (p.omega_m - p.omega_p) / x;
  rp.tilt_scale = delta * u0 / (2.0 * p.omega);
  return rp;
}

ReducedParams no_mirror(const ReducedParams& rp) {
  ReducedParams out = rp;
  out.d_mirror = 0.0;
  out.e_mirror_detune = 1.0;
  return out;
}

ReducedParams make_reduced(double r, double r_bc, double lambda, double a_tilde, double b, double c,
                           double d, double e) {
  ReducedParams rp;
  rp.r_b = r;
  rp.r_c = r;
  rp.r_bc = r_bc;
  rp.lambda = lambda;
  rp.set_a_tilde(a_tilde);
  rp.b_detune = b;
  rp.c_loss = c;
  rp.d_mirror = d;
  rp.e_mirror_detune = e;
  return rp;
}

}  // namespace cavjj
