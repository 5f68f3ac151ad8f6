#include "cavjj/figures.hpp"

#include <cmath>
#include <numbers>

#include "cavjj/cavity.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/fixed_points.hpp"
#include "cavjj/parallel.hpp"
#include "cavjj/tables.hpp"

namespace cavjj {

namespace fs = std::filesystem;

ReducedParams fig2_params(double lambda) { return make_reduced(3.0, 0.1, lambda, 0.02, -0.65, 0.07); }

ReducedParams fig3_params(double lambda) { return make_reduced(0.1, 3.0, lambda, 0.02, -0.65, 0.07); }

ReducedParams fig4_params(double d, double e) {
  return make_reduced(3.0, 0.1, kFig2LambdaB, 0.02, -0.65, 0.07, d, e);
}

ReducedParams fig6_params(double d, double e) { return make_reduced(3.0, 0.1, kFig6Lambda, 0.02, -0.65, 0.07, d, e); }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6", "fig7"};
  return ids;
}

namespace {

const char* kFig2Caption =
    "NV/(2Omega)=r=3, NV'/(2Omega)=r_bc=0.1, A~=0.02, B=-0.65, C=0.07; (a) S=0.1, (b) S=3.87";
const char* kFig3Caption = "(phi(0),z(0))=(0,-0.6), r_bc=3, r_b(r_c)=0.1, (a) S=0, (b) S=1, (c) S=2; other values as fig2";
const char* kFig4Caption =
    "left: E=0.1, D=0.1, 0.2, 0.4; right: D=0.3, E=0.1, 0.3, 1.5; S=3.87; other values as fig2";
const char* kFig5Caption =
    "left: E=0.1, (a) D=0.1, (b) D=0.2, (c) D=0.4; right: D=0.3, (d) E=0.1, (e) E=0.3, (f) E=1.5; other values as fig4";
const char* kFig6Caption = "(a) D=0.1, (b) D=0.2, (c) D=0.4; (phi(0),z(0))=(0,-0.6), E=0.1, S=1.37; other values as fig2";
const char* kFig7Caption = "(a) E=0.1, (b) E=0.4, (c) E=0.9; (phi(0),z(0))=(0,-0.6), D=0.3, S=1.37; other values as fig2";

const char* kLambdaMapping = "S in captions is read as the reduced pair-tunneling strength Lambda = NS/(2Omega)";
const char* kNoMirror = "no mirror: D=0 (E is irrelevant when D=0 and is set to 1)";

struct Bundle {
  fs::path dir;
  OutputFormat format;
  ReproduceResult result;

  void table(const std::string& name, const Table& t, const Meta& meta) {
    for (auto& p : write_table(dir / name, t, meta, format)) result.files.push_back(p);
    result.manifest["outputs"].push_back(name);
  }
  void field(const std::string& name, const ScalarField& f, const Meta& meta) {
    for (auto& p : write_field(dir / name, f, meta, format)) result.files.push_back(p);
    result.manifest["outputs"].push_back(name);
  }
};

Meta base_meta(const std::string& id, const ReducedParams& rp) {
  Meta m;
  m["figure"] = id;
  m["params"] = echo(rp);
  return m;
}

std::string fmt_label(const char* name, double v) { return std::string(name) + "=" + format_number(v); }

void contour_panel(Bundle& b, const std::string& id, const std::string& name, const ReducedParams& rp,
                   const ReproduceOptions& opt, Meta& panels) {
  const auto field = energy_grid(rp, opt.grid, opt.threads);
  b.field(name + "_energy", field, base_meta(id, rp));
  const auto c = census(rp);
  b.table(name + "_fixed_points", fixed_point_table(c), base_meta(id, rp));
  Meta panel;
  panel["params"] = echo(rp);
  panel["peak_location"] = rp.peak_location();
  panel["census"] = census_summary(c);
  panels[name] = std::move(panel);
}

void slice_panel(Bundle& b, const std::string& id, const std::string& name, const ReducedParams& rp,
                 const std::vector<double>& zs) {
  Table t{{"z", "f_phi0", "f_phi_half_pi", "f_phi_pi"}, {}};
  const auto s0 = gradient_slice(rp, Branch::axis_0, zs);
  const auto sh = gradient_along(rp, std::numbers::pi / 2.0, zs);
  const auto sp = gradient_slice(rp, Branch::axis_pi, zs);
  for (std::size_t i = 0; i < zs.size(); ++i) t.add({s0[i].z, s0[i].f, sh[i].f, sp[i].f});
  b.table(name + "_slices", t, base_meta(id, rp));
}

void fig2(Bundle& b, const std::string& id, double lambda, const ReproduceOptions& opt) {
  const auto rp = fig2_params(lambda);
  auto& m = b.result.manifest;
  m["caption_values"] = kFig2Caption;
  m["interpretation"] = {kLambdaMapping, kNoMirror};
  Meta panels;
  contour_panel(b, id, id, rp, opt, panels);
  slice_panel(b, id, id, rp, linspace(-0.999, 0.999, 2001));
  m["panels"] = std::move(panels);
  if (id == "fig2a") {
    m["target_counts"] = {{"axis_0", "3 (two minima, one saddle)"}, {"axis_pi", "5 (three maxima, two saddles)"}};
  } else {
    m["target_counts"] = {{"off_axis", "a maximum near phi=pi/2"}};
  }
}

void fig3(Bundle& b, const ReproduceOptions& opt) {
  auto& m = b.result.manifest;
  m["caption_values"] = kFig3Caption;
  m["interpretation"] = {kLambdaMapping, kNoMirror,
                         "r_b=r_c=0.1 and r_bc=3 as listed for this figure (fig2a/fig2b use the opposite assignment)"};
  const std::vector<double> lambdas{0.0, 1.0, 2.0};
  const auto trajs = parallel_map(lambdas.size(), opt.threads, [&](std::size_t i) {
    return integrate(State::symmetric(-0.6, 0.0), fig3_params(lambdas[i]), opt.fig3_t_end);
  });
  Meta periods = Meta::array();
  bool decreasing = true;
  double last = INFINITY;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto rp = fig3_params(lambdas[i]);
    const std::string name = "fig3_S" + format_number(lambdas[i]);
    b.table(name, trajectory_table(trajs[i], rp), base_meta("fig3", rp));
    Meta row;
    row["S"] = lambdas[i];
    try {
      const double period = period_estimate(trajs[i]);
      row["period"] = period;
      decreasing = decreasing && period < last;
      last = period;
    } catch (const NonOscillatoryError& e) {
      row["period"] = nullptr;
      row["error"] = e.what();
      decreasing = false;
    }
    const auto reg = classify_regime(trajs[i]);
    row["regime"] = to_string(reg.regime);
    row["regime_inconclusive"] = reg.inconclusive;
    periods.push_back(std::move(row));
  }
  m["t_end"] = opt.fig3_t_end;
  m["periods"] = std::move(periods);
  m["periods_strictly_decreasing"] = decreasing;
}

void fig4(Bundle& b, const ReproduceOptions& opt) {
  auto& m = b.result.manifest;
  m["caption_values"] = kFig4Caption;
  m["interpretation"] = {kLambdaMapping, "fig2 values with Lambda=3.87 and the mirror on"};
  const auto zs = linspace(-0.999, 0.999, 2001);
  Meta panels;
  const auto panel = [&](const std::string& name, double d, double e) {
    const auto rp = fig4_params(d, e);
    slice_panel(b, "fig4", name, rp, zs);
    const auto c = census(rp);
    Meta p;
    p["params"] = echo(rp);
    p["peak_location"] = rp.peak_location();
    p["census"] = census_summary(c);
    Meta roots = Meta::array();
    for (const auto& fp : c.axis_0) roots.push_back(fp.z);
    p["axis_0_roots"] = std::move(roots);
    panels[name] = std::move(p);
  };
  for (double d : {0.1, 0.2, 0.4}) panel("fig4_left_" + fmt_label("D", d), d, 0.1);
  for (double e : {0.1, 0.3, 1.5}) panel("fig4_right_" + fmt_label("E", e), 0.3, e);
  (void)opt;
  m["panels"] = std::move(panels);
}

void fig5(Bundle& b, const ReproduceOptions& opt) {
  auto& m = b.result.manifest;
  m["caption_values"] = kFig5Caption;
  m["interpretation"] = {kLambdaMapping, "fig4 values (Lambda=3.87, mirror on)"};
  Meta panels;
  for (double d : {0.1, 0.2, 0.4}) contour_panel(b, "fig5", "fig5_left_" + fmt_label("D", d), fig4_params(d, 0.1), opt, panels);
  for (double e : {0.1, 0.3, 1.5}) contour_panel(b, "fig5", "fig5_right_" + fmt_label("E", e), fig4_params(0.3, e), opt, panels);
  m["panels"] = std::move(panels);
}

void photon_fig(Bundle& b, const std::string& id, const std::vector<std::pair<double, double>>& de,
                const ReproduceOptions& opt) {
  auto& m = b.result.manifest;
  m["caption_values"] = id == "fig6" ? kFig6Caption : kFig7Caption;
  m["interpretation"] = {kLambdaMapping, "fig2 values with Lambda=1.37 and the mirror on",
                         "t_end is not given in the caption; chosen as a run option"};
  m["t_end"] = opt.photon_t_end;
  const auto series = parallel_map(de.size(), opt.threads, [&](std::size_t i) {
    return photon_timeseries(State::symmetric(-0.6, 0.0), fig6_params(de[i].first, de[i].second), opt.photon_t_end);
  });
  Meta panels;
  for (std::size_t i = 0; i < de.size(); ++i) {
    const auto rp = fig6_params(de[i].first, de[i].second);
    const std::string name = id + "_" + fmt_label("D", de[i].first) + "_" + fmt_label("E", de[i].second);
    b.table(name, trajectory_table(series[i].trajectory, rp), base_meta(id, rp));
    Meta p;
    p["params"] = echo(rp);
    p["local_maxima"] = local_maxima(series[i].samples);
    p["singular"] = series[i].trajectory.singular;
    try {
      const double period = period_estimate(series[i].trajectory);
      p["period"] = period;
      p["maxima_per_period"] = static_cast<double>(local_maxima(series[i].samples)) * period / opt.photon_t_end;
    } catch (const NonOscillatoryError&) {
      p["period"] = nullptr;
    }
    panels[name] = std::move(p);
  }
  m["panels"] = std::move(panels);
}

}  // namespace

ReproduceResult reproduce(const std::string& id, const ReproduceOptions& opt) {
  Bundle b{opt.out_dir / id, opt.format, {}};
  auto& m = b.result.manifest;
  m["figure"] = id;
  m["outputs"] = Meta::array();
  m["grid"] = {{"nz", opt.grid.nz}, {"nphi", opt.grid.nphi}, {"z_range", {opt.grid.z_min, opt.grid.z_max}},
               {"phi_range", {opt.grid.phi_min, opt.grid.phi_max}}};
  m["integrator"] = {{"method", "rk4"}, {"dt", 1e-3}};
  ensure_dir(b.dir);
  if (id == "fig2a") fig2(b, id, kFig2LambdaA, opt);
  else if (id == "fig2b") fig2(b, id, kFig2LambdaB, opt);
  else if (id == "fig3") fig3(b, opt);
  else if (id == "fig4") fig4(b, opt);
  else if (id == "fig5") fig5(b, opt);
  else if (id == "fig6") photon_fig(b, id, {{0.1, 0.1}, {0.2, 0.1}, {0.4, 0.1}}, opt);
  else if (id == "fig7") photon_fig(b, id, {{0.3, 0.1}, {0.3, 0.4}, {0.3, 0.9}}, opt);
  else throw UsageError("unknown figure '" + id + "' (fig2a fig2b fig3 fig4 fig5 fig6 fig7)");
  const auto path = b.dir / "manifest.json";
  write_json(path, m);
  b.result.files.push_back(path);
  return b.result;
}

}  // namespace cavjj
