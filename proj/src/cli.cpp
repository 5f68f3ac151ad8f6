#include "cavjj/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "cavjj/atlas.hpp"
#include "cavjj/cavity.hpp"
#include "cavjj/config.hpp"
#include "cavjj/dynamics.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/figures.hpp"
#include "cavjj/fixed_points.hpp"
#include "cavjj/full_model.hpp"
#include "cavjj/output.hpp"
#include "cavjj/tables.hpp"
#include "cavjj/validate.hpp"

namespace cavjj {

namespace {

namespace fs = std::filesystem;

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  std::uint64_t seed = 0;
  bool raw_photons = false;
  bool dry_run = false;
};

// Options given on the command line, keyed like the config file's top-level options.
using FlagMap = std::map<std::string, std::string>;

struct Context {
  std::string command;
  RunConfig cfg;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool raw_photons = false;
  std::ostream& out;
  std::ostream& err;

  [[nodiscard]] fs::path out_dir() const { return cfg.out_dir; }

  [[nodiscard]] Meta meta(const ReducedParams& rp) const {
    Meta m;
    m["command"] = command;
    m["params"] = echo(rp);
    if (std::holds_alternative<PhysicalParams>(cfg.params)) {
      m["physical"] = echo(std::get<PhysicalParams>(cfg.params));
    }
    Meta opts = Meta::object();
    for (const auto& [k, v] : cfg.options) opts[k] = v;
    m["options"] = std::move(opts);
    m["seed"] = seed;
    m["photon_units"] = raw_photons ? "raw |alpha|^2" : "2*Omega/(delta*U0)";
    m["no_mirror_convention"] = "D=0 makes the tilt independent of E; E=1 is used";
    return m;
  }

  void report(const std::vector<fs::path>& files) const {
    for (const auto& f : files) out << f.string() << '\n';
  }
};

void add_opt(CLI::App* sub, FlagMap& flags, const std::string& flag, const std::string& key, const std::string& help) {
  sub->add_option_function<std::string>(flag, [&flags, key](const std::string& v) { flags[key] = v; }, help);
}

void add_switch(CLI::App* sub, FlagMap& flags, const std::string& flag, const std::string& key, const std::string& help) {
  sub->add_flag_callback(flag, [&flags, key] { flags[key] = "1"; }, help);
}

double parse_angle(const std::string& text) {
  if (text == "pi") return std::numbers::pi;
  if (text == "pi/2") return std::numbers::pi / 2.0;
  if (text == "2pi") return 2.0 * std::numbers::pi;
  return parse_double(text, "angle");
}

State initial_state(const RunConfig& cfg) {
  const double z0 = cfg.option_double("z0", -0.6);
  const double phi0 = cfg.option("phi0") ? parse_angle(*cfg.option("phi0")) : 0.0;
  const double zc0 = cfg.option_double("zc0", z0);
  const double phic0 = cfg.option("phic0") ? parse_angle(*cfg.option("phic0")) : phi0;
  return {z0, phi0, zc0, phic0};
}

IntegrationControl integration_control(const RunConfig& cfg) {
  IntegrationControl c;
  c.step.dt = cfg.option_double("dt", 1e-3);
  const long stride = cfg.option_int("stride", 1);
  if (stride < 1) throw UsageError("stride must be >= 1");
  c.step.stride = static_cast<std::size_t>(stride);
  const auto method = cfg.option("method").value_or("rk4");
  if (method == "rk4") c.step.method = ode::Method::rk4;
  else if (method == "dopri5") c.step.method = ode::Method::dopri5;
  else throw UsageError("method must be rk4 or dopri5");
  c.step.rtol = cfg.option_double("rtol", 1e-9);
  c.step.atol = cfg.option_double("atol", 1e-12);
  if (!(c.step.dt > 0.0)) throw UsageError("dt must be > 0");
  return c;
}

GridSpec grid_spec(const RunConfig& cfg) {
  GridSpec g;
  g.nz = static_cast<std::size_t>(cfg.option_int("nz", 401));
  g.nphi = static_cast<std::size_t>(cfg.option_int("nphi", 401));
  g.z_min = cfg.option_double("z_min", g.z_min);
  g.z_max = cfg.option_double("z_max", g.z_max);
  if (auto v = cfg.option("phi_min")) g.phi_min = parse_angle(*v);
  if (auto v = cfg.option("phi_max")) g.phi_max = parse_angle(*v);
  g.validate();
  return g;
}

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions s;
  const long grid = cfg.option_int("grid", 4001);
  if (grid < 3) throw UsageError("grid must be >= 3");
  s.grid_points = static_cast<std::size_t>(grid);
  return s;
}

double positive_t_end(const RunConfig& cfg, double fallback) {
  const double t = cfg.option_double("t_end", fallback);
  if (!(t > 0.0)) throw UsageError("t_end must be > 0");
  return t;
}

// ----------------------------------------------------------------------------- commands

void print_reduced(std::ostream& out, const ReducedParams& rp) {
  const Meta m = echo(rp);
  for (auto it = m.begin(); it != m.end(); ++it) {
    out << it.key() << '=' << format_number(it->get<double>()) << '\n';
  }
}

int cmd_reduce(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  print_reduced(ctx.out, rp);
  if (ctx.cfg.option("write")) {
    const auto p = ctx.out_dir() / "reduced.json";
    write_json(p, ctx.meta(rp));
    ctx.report({p});
  }
  return 0;
}

int cmd_simulate(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const auto traj = integrate(initial_state(ctx.cfg), rp, positive_t_end(ctx.cfg, 20.0), integration_control(ctx.cfg));
  auto meta = ctx.meta(rp);
  meta["singular"] = traj.singular;
  if (traj.singular) meta["abort_reason"] = traj.abort_reason;
  meta["steps_accepted"] = traj.step_stats.accepted;
  meta["steps_rejected"] = traj.step_stats.rejected;
  try {
    meta["period"] = period_estimate(traj);
  } catch (const NonOscillatoryError&) {
    meta["period"] = nullptr;
  }
  try {
    const auto regime = classify_regime(traj);
    meta["regime"] = {{"label", to_string(regime.regime)},
                      {"inconclusive", regime.inconclusive},
                      {"mean_z", regime.mean_z},
                      {"phase_drift", regime.phase_drift},
                      {"thresholds", {{"mean_z", RegimeThresholds{}.mean_z}, {"phase_drift", RegimeThresholds{}.phase_drift}}}};
  } catch (const NumericalError& e) {
    meta["regime"] = {{"label", nullptr}, {"error", e.what()}};
  }
  ctx.report(write_table(ctx.out_dir() / "simulate", trajectory_table(traj, rp, ctx.raw_photons), meta, ctx.cfg.format));
  if (traj.singular) {
    ctx.err << "numerical abort: " << traj.abort_reason << " (partial trajectory written)\n";
    return 4;
  }
  return 0;
}

int cmd_simulate_full(Context& ctx) {
  const auto* p = std::get_if<PhysicalParams>(&ctx.cfg.params);
  if (!p) throw UsageError("simulate-full needs a [physical] block");
  const auto rp = reduce(*p);
  const bool vacuum = ctx.cfg.option("vacuum").has_value();
  const auto x0 = construct(initial_state(ctx.cfg), *p, vacuum ? FieldInit::vacuum : FieldInit::steady);
  FullIntegrationControl fc;
  // times on the command line are reduced (2Ωt)
  fc.step.dt = ctx.cfg.option_double("dt", 1e-2) / (2.0 * p->omega);
  fc.step.rtol = ctx.cfg.option_double("rtol", 1e-10);
  fc.step.atol = ctx.cfg.option_double("atol", 1e-12);
  const long stride = ctx.cfg.option_int("stride", 1);
  if (stride < 1) throw UsageError("stride must be >= 1");
  fc.step.stride = static_cast<std::size_t>(stride);
  const auto traj = integrate_full(x0, *p, positive_t_end(ctx.cfg, 10.0) / (2.0 * p->omega), fc);
  auto meta = ctx.meta(rp);
  meta["frame"] = "rotating at omega_p";
  meta["field_init"] = vacuum ? "vacuum" : "steady";
  meta["time_unit"] = "reduced (2*Omega*t)";
  ctx.report(write_table(ctx.out_dir() / "simulate_full", full_trajectory_table(traj, *p, ctx.raw_photons), meta,
                         ctx.cfg.format));
  return 0;
}

Quantity parse_quantity(const std::string& s) {
  if (s == "energy_b" || s == "energy") return Quantity::energy_b;
  if (s == "energy_c") return Quantity::energy_c;
  if (s == "photon") return Quantity::photon;
  if (s == "gradient") return Quantity::gradient;
  throw UsageError("quantity must be energy_b, energy_c, photon or gradient");
}

int cmd_contours(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  auto spec = grid_spec(ctx.cfg);
  const auto q = parse_quantity(ctx.cfg.option("quantity").value_or("energy_b"));
  if (q == Quantity::gradient) {
    spec.z_min = std::max(spec.z_min, -1.0 + 1e-6);
    spec.z_max = std::min(spec.z_max, 1.0 - 1e-6);
  }
  const auto field = sample_field(rp, spec, q, ctx.threads);
  ctx.report(write_field(ctx.out_dir() / ("contours_" + to_string(q)), field, ctx.meta(rp), ctx.cfg.format));
  return 0;
}

int cmd_slice(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const double phi = parse_angle(ctx.cfg.option("phi").value_or("0"));
  const auto zs = linspace(ctx.cfg.option_double("z_min", -0.999), ctx.cfg.option_double("z_max", 0.999),
                           static_cast<std::size_t>(ctx.cfg.option_int("nz", 2001)));
  const auto slice = gradient_along(rp, phi, zs);
  auto meta = ctx.meta(rp);
  meta["phi"] = phi;
  meta["sign_changes"] = sign_changes(slice);
  ctx.report(write_table(ctx.out_dir() / "slice", slice_table(slice), meta, ctx.cfg.format));
  return 0;
}

int cmd_fixed_points(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const auto opt = scan_options(ctx.cfg);
  const auto c = census(rp, opt);
  auto meta = ctx.meta(rp);
  meta["scan"] = {{"grid_points", opt.grid_points}, {"z_margin", opt.z_margin}, {"newton_max_iter", opt.newton_max_iter},
                  {"f_tol", opt.f_tol}, {"dedup_tol", opt.dedup_tol}, {"degenerate_tol", opt.degenerate_tol}};
  meta["census"] = census_summary(c);
  ctx.report(write_table(ctx.out_dir() / "fixed_points", fixed_point_table(c), meta, ctx.cfg.format));
  return 0;
}

std::vector<double> sweep_values(const RunConfig& cfg) {
  if (auto list = cfg.option("values")) {
    std::vector<double> v;
    std::stringstream ss(*list);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_double(item, "values"));
    if (v.empty()) throw UsageError("values is empty");
    return v;
  }
  if (!cfg.option("from") || !cfg.option("to")) throw UsageError("sweep needs --values or --from/--to");
  const long n = cfg.option_int("count", 21);
  if (n < 1) throw UsageError("count must be >= 1");
  return linspace(cfg.option_double("from", 0.0), cfg.option_double("to", 0.0), static_cast<std::size_t>(n));
}

int cmd_sweep(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const auto name = ctx.cfg.option("param").value_or("");
  const auto param = parse_sweep_param(name);
  if (!param) throw UsageError("param must be one of D, E, B, lambda, a_tilde");
  const auto opt = scan_options(ctx.cfg);
  const auto rows = bifurcation_sweep(rp, *param, sweep_values(ctx.cfg), opt, ctx.threads);
  auto meta = ctx.meta(rp);
  meta["sweep_param"] = to_string(*param);
  ctx.report(write_table(ctx.out_dir() / "sweep", sweep_table(rows), meta, ctx.cfg.format));
  Table points{{"value", "branch", "z", "phi", "class"}, {}};
  for (const auto& r : rows) {
    if (!r.census) continue;
    for (const auto& fp : r.census->all()) points.add({r.value, to_string(fp.branch), fp.z, fp.phi, to_string(fp.hessian_class)});
  }
  ctx.report(write_table(ctx.out_dir() / "sweep_points", points, meta, ctx.cfg.format));
  return 0;
}

int cmd_photons(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const auto ss = linspace(ctx.cfg.option_double("s_min", -2.0), ctx.cfg.option_double("s_max", 2.0),
                           static_cast<std::size_t>(ctx.cfg.option_int("n", 4001)));
  Table t{{"s", ctx.raw_photons ? "photon_raw" : "photon"}, {}};
  for (double s : ss) t.add({s, ctx.raw_photons ? photon_number(s, 0.0, rp) : tilt_force(s, 0.0, rp)});
  auto meta = ctx.meta(rp);
  if (rp.e_mirror_detune != 0.0) {
    const auto prof = lorentzian_profile(rp);
    meta["profile"] = {{"peak_location", prof.peak_location}, {"peak_value_raw", prof.peak_value}, {"fwhm", prof.fwhm}};
  }
  ctx.report(write_table(ctx.out_dir() / "photons", t, meta, ctx.cfg.format));
  return 0;
}

int cmd_photons_ts(Context& ctx) {
  const auto rp = ctx.cfg.reduced();
  const auto series = photon_timeseries(initial_state(ctx.cfg), rp, positive_t_end(ctx.cfg, 50.0), integration_control(ctx.cfg));
  auto meta = ctx.meta(rp);
  meta["local_maxima"] = local_maxima(series.samples);
  meta["singular"] = series.trajectory.singular;
  Table t = photon_table(series.samples);
  if (ctx.raw_photons) {
    t.columns[1] = "photon_raw";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& x = series.trajectory.states[i];
      t.rows[i][1] = photon_number(x.z_b, x.z_c, rp);
    }
  }
  ctx.report(write_table(ctx.out_dir() / "photons_ts", t, meta, ctx.cfg.format));
  return series.trajectory.singular ? 4 : 0;
}

int cmd_reproduce(Context& ctx, const std::vector<std::string>& ids) {
  ReproduceOptions opt;
  opt.out_dir = ctx.out_dir();
  opt.format = ctx.cfg.format;
  opt.threads = ctx.threads;
  opt.grid.nz = static_cast<std::size_t>(ctx.cfg.option_int("nz", 401));
  opt.grid.nphi = static_cast<std::size_t>(ctx.cfg.option_int("nphi", 401));
  opt.grid.validate();
  opt.photon_t_end = ctx.cfg.option_double("t_end", opt.photon_t_end);
  std::vector<std::string> todo = ids;
  if (todo.size() == 1 && todo[0] == "all") todo = figure_ids();
  for (const auto& id : todo) ctx.report(reproduce(id, opt).files);
  return 0;
}

int cmd_validate(Context& ctx) {
  const auto suite = ctx.cfg.option("suite").value_or("all");
  const auto results = run_validation(suite, ctx.seed, ctx.threads);
  std::size_t failed = 0;
  Table t{{"suite", "check", "status", "seconds", "detail"}, {}};
  for (const auto& r : results) {
    ctx.out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.detail << ")\n";
    failed += !r.passed;
    t.add({r.suite, r.name, std::string(r.passed ? "pass" : "fail"), r.seconds, r.detail});
  }
  ctx.out << results.size() - failed << "/" << results.size() << " checks passed\n";
  if (ctx.cfg.option("report")) {
    Meta meta;
    meta["command"] = "validate";
    meta["suite"] = suite;
    meta["seed"] = ctx.seed;
    ctx.report(write_table(ctx.out_dir() / "validate", t, meta, OutputFormat::csv));
  }
  return failed == 0 ? 0 : 1;
}

RunConfig resolve_config(const Common& c, const FlagMap& flags, const std::string& command) {
  RunConfig cfg = c.config_path.empty() ? RunConfig{} : load_config(c.config_path);
  if (!cfg.subcommand.empty() && cfg.subcommand != command) {
    throw UsageError("config is for '" + cfg.subcommand + "', not '" + command + "'");
  }
  cfg.subcommand = command;
  for (const auto& o : c.overrides) apply_override(cfg, o);
  for (const auto& [k, v] : flags) cfg.options[k] = v;
  if (c.out_dir) cfg.out_dir = *c.out_dir;
  else if (const char* env = std::getenv("CAVJJ_OUT"); env && *env) cfg.out_dir = env;
  if (c.format) cfg.format = parse_format(*c.format);
  return cfg;
}

unsigned resolve_threads(const Common& c) {
  if (c.threads) return *c.threads;
  if (const char* env = std::getenv("CAVJJ_THREADS"); env && *env) {
    const double v = parse_double(env, "CAVJJ_THREADS");
    if (v < 0 || v != static_cast<double>(static_cast<unsigned>(v))) throw UsageError("CAVJJ_THREADS must be a count");
    return static_cast<unsigned>(v);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-component BEC double well in an optomechanical cavity: reduced and full mean-field models"};
  app.require_subcommand(1);
  Common common;
  FlagMap flags;
  std::vector<std::string> figure_args;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "INI config with one [reduced] or [physical] block");
    sub->add_option("-p,--set", common.overrides, "override, e.g. reduced.lambda=3.87 or t_end=50");
    sub->add_option("--out", common.out_dir, "output directory (env CAVJJ_OUT)");
    sub->add_option("--format", common.format, "csv | json | binary-matrix");
    sub->add_option("--threads", common.threads, "worker threads, 0 = all cores (env CAVJJ_THREADS)");
    sub->add_option("--seed", common.seed, "seed for randomized checks");
    sub->add_flag("--raw-photons", common.raw_photons, "report |alpha|^2 instead of tilt units");
    sub->add_flag("--dry-run", common.dry_run, "print the resolved reduced parameters and exit");
  };
  const auto add_initial = [&](CLI::App* sub) {
    add_opt(sub, flags, "--z0", "z0", "initial z_b (and z_c unless --zc0)");
    add_opt(sub, flags, "--phi0", "phi0", "initial phi_b (and phi_c unless --phic0); accepts pi");
    add_opt(sub, flags, "--zc0", "zc0", "initial z_c");
    add_opt(sub, flags, "--phic0", "phic0", "initial phi_c");
    add_opt(sub, flags, "--t-end", "t_end", "reduced end time 2*Omega*t");
    add_opt(sub, flags, "--dt", "dt", "step (fixed) or sample spacing (adaptive)");
    add_opt(sub, flags, "--stride", "stride", "emit every n-th step");
    add_opt(sub, flags, "--method", "method", "rk4 | dopri5");
    add_opt(sub, flags, "--rtol", "rtol", "dopri5 relative tolerance");
  };
  const auto add_grid = [&](CLI::App* sub) {
    add_opt(sub, flags, "--nz", "nz", "z samples");
    add_opt(sub, flags, "--nphi", "nphi", "phi samples");
    add_opt(sub, flags, "--z-min", "z_min", "lower z");
    add_opt(sub, flags, "--z-max", "z_max", "upper z");
    add_opt(sub, flags, "--phi-min", "phi_min", "lower phi");
    add_opt(sub, flags, "--phi-max", "phi_max", "upper phi");
  };

  std::map<std::string, CLI::App*> subs;
  const auto make = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    subs[name] = s;
    return s;
  };

  make("reduce", "map physical parameters to reduced ones");
  add_switch(subs["reduce"], flags, "--write", "write", "also write reduced.json");
  add_initial(make("simulate", "integrate the reduced equations"));
  {
    auto* s = make("simulate-full", "integrate the full six-amplitude model");
    add_initial(s);
    add_switch(s, flags, "--vacuum", "vacuum", "start cavity and mirror from zero");
  }
  {
    auto* s = make("contours", "energy / photon / gradient field on the symmetric manifold");
    add_grid(s);
    add_opt(s, flags, "--quantity", "quantity", "energy_b | energy_c | photon | gradient");
  }
  {
    auto* s = make("slice", "dH_b/dz_b along constant phi");
    add_opt(s, flags, "--phi", "phi", "0 | pi/2 | pi | number");
    add_opt(s, flags, "--nz", "nz", "samples");
    add_opt(s, flags, "--z-min", "z_min", "lower z");
    add_opt(s, flags, "--z-max", "z_max", "upper z");
  }
  add_opt(make("fixed-points", "stationary points and their classification"), flags, "--grid", "grid", "scan points");
  {
    auto* s = make("sweep", "stationary-point census over a parameter");
    add_opt(s, flags, "--param", "param", "D | E | B | lambda | a_tilde");
    add_opt(s, flags, "--values", "values", "comma-separated values");
    add_opt(s, flags, "--from", "from", "first value");
    add_opt(s, flags, "--to", "to", "last value");
    add_opt(s, flags, "--count", "count", "number of values");
    add_opt(s, flags, "--grid", "grid", "scan points");
  }
  {
    auto* s = make("photons", "photon number versus s = z_b + z_c");
    add_opt(s, flags, "--s-min", "s_min", "lower s");
    add_opt(s, flags, "--s-max", "s_max", "upper s");
    add_opt(s, flags, "--n", "n", "samples");
  }
  add_initial(make("photons-ts", "photon number along a trajectory"));
  {
    auto* s = make("reproduce", "canned figure recipes");
    s->add_option("figure", figure_args, "fig2a fig2b fig3 fig4 fig5 fig6 fig7 | all")->required();
    add_opt(s, flags, "--nz", "nz", "contour z samples");
    add_opt(s, flags, "--nphi", "nphi", "contour phi samples");
    add_opt(s, flags, "--t-end", "t_end", "photon series end time");
  }
  {
    auto* s = make("validate", "run the invariant checks");
    add_opt(s, flags, "--suite", "suite", "params | cavity | dynamics | full_model | fixed_points | atlas | cli | all");
    add_switch(s, flags, "--report", "report", "also write validate.csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* s : app.get_subcommands()) out << s->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Context ctx{command, resolve_config(common, flags, command), resolve_threads(common), common.seed,
                common.raw_photons, out, err};
    if (common.dry_run) {
      print_reduced(out, ctx.cfg.reduced());
      return 0;
    }
    if (command == "reduce") return cmd_reduce(ctx);
    if (command == "simulate") return cmd_simulate(ctx);
    if (command == "simulate-full") return cmd_simulate_full(ctx);
    if (command == "contours") return cmd_contours(ctx);
    if (command == "slice") return cmd_slice(ctx);
    if (command == "fixed-points") return cmd_fixed_points(ctx);
    if (command == "sweep") return cmd_sweep(ctx);
    if (command == "photons") return cmd_photons(ctx);
    if (command == "photons-ts") return cmd_photons_ts(ctx);
    if (command == "reproduce") return cmd_reproduce(ctx, figure_args);
    if (command == "validate") return cmd_validate(ctx);
    throw UsageError("unknown command " + command);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace cavjj
