#include "cavjj/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cavjj/errors.hpp"

namespace cavjj {

namespace pt = boost::property_tree;

double parse_double(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && (*end == ' ' || *end == '\t')) ++end;
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
  return v;
}

void set_reduced_key(ReducedParams& rp, const std::string& key, double v) {
  if (key == "r") {
    rp.r_b = v;
    rp.r_c = v;
  } else if (key == "r_b") {
    rp.r_b = v;
  } else if (key == "r_c") {
    rp.r_c = v;
  } else if (key == "r_bc") {
    rp.r_bc = v;
  } else if (key == "lambda" || key == "S") {
    rp.lambda = v;
  } else if (key == "a_tilde") {
    rp.set_a_tilde(v);
  } else if (key == "a") {
    rp.a_pump = v;
  } else if (key == "tilt_scale") {
    rp.tilt_scale = v;
  } else if (key == "b") {
    rp.b_detune = v;
  } else if (key == "c") {
    rp.c_loss = v;
  } else if (key == "d") {
    rp.d_mirror = v;
  } else if (key == "e") {
    rp.e_mirror_detune = v;
  } else {
    throw UsageError("unknown reduced parameter '" + key + "'");
  }
}

void set_physical_key(PhysicalParams& p, const std::string& key, double v) {
  if (key == "omega") p.omega = v;
  else if (key == "v") p.v_intra = v;
  else if (key == "v_prime") p.v_inter = v;
  else if (key == "s") p.s_pair = v;
  else if (key == "n") p.n_atoms = v;
  else if (key == "u0") p.u0 = v;
  else if (key == "g0_atom") p.g0_atom = v;
  else if (key == "delta_a") p.delta_a = v;
  else if (key == "kappa") p.kappa = v;
  else if (key == "eta") p.eta = v;
  else if (key == "omega_c") p.omega_c = v;
  else if (key == "omega_p") p.omega_p = v;
  else if (key == "omega_m") p.omega_m = v;
  else if (key == "g0_mirror") p.g0_mirror = v;
  else if (key == "j1") p.j1 = v;
  else if (key == "j2") p.j2 = v;
  else if (key == "j1p") p.j1p = v;
  else if (key == "j2p") p.j2p = v;
  else throw UsageError("unknown physical parameter '" + key + "'");
}

namespace {

void set_top_level(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") cfg.subcommand = value;
  else if (key == "out") cfg.out_dir = value;
  else if (key == "format") cfg.format = parse_format(value);
  else cfg.options[key] = value;
}

void set_block_key(RunConfig& cfg, const std::string& block, const std::string& key, const std::string& value) {
  const double v = parse_double(value, block + "." + key);
  if (block == "reduced") {
    if (std::holds_alternative<PhysicalParams>(cfg.params)) {
      throw UsageError("config has both [physical] and [reduced] blocks");
    }
    if (!std::holds_alternative<ReducedParams>(cfg.params)) cfg.params = ReducedParams{};
    set_reduced_key(std::get<ReducedParams>(cfg.params), key, v);
  } else if (block == "physical") {
    if (std::holds_alternative<ReducedParams>(cfg.params)) {
      throw UsageError("config has both [physical] and [reduced] blocks");
    }
    if (!std::holds_alternative<PhysicalParams>(cfg.params)) cfg.params = PhysicalParams{};
    set_physical_key(std::get<PhysicalParams>(cfg.params), key, v);
  } else {
    throw UsageError("unknown config block [" + block + "]");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  RunConfig cfg;
  for (const auto& [key, node] : tree) {
    if (node.empty() && (key == "reduced" || key == "physical") && node.data().empty()) {
      // empty section: block with defaults
      if (cfg.has_params()) throw UsageError("config has both [physical] and [reduced] blocks");
      if (key == "reduced") cfg.params = ReducedParams{};
      else cfg.params = PhysicalParams{};
      continue;
    }
    if (node.empty()) {
      set_top_level(cfg, key, node.data());
      continue;
    }
    for (const auto& [k, v] : node) set_block_key(cfg, key, k, v.data());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  const auto dot = key.find('.');
  if (dot == std::string::npos) {
    set_top_level(cfg, key, value);
  } else {
    set_block_key(cfg, key.substr(0, dot), key.substr(dot + 1), value);
  }
}

ReducedParams RunConfig::reduced() const {
  if (const auto* rp = std::get_if<ReducedParams>(&params)) {
    rp->validate();
    return *rp;
  }
  if (const auto* p = std::get_if<PhysicalParams>(&params)) return reduce(*p);
  throw UsageError("no parameter block: pass --config or set reduced.* / physical.* keys");
}

std::optional<std::string> RunConfig::option(const std::string& key) const {
  const auto it = options.find(key);
  if (it == options.end()) return std::nullopt;
  return it->second;
}

double RunConfig::option_double(const std::string& key, double fallback) const {
  const auto v = option(key);
  return v ? parse_double(*v, key) : fallback;
}

long RunConfig::option_int(const std::string& key, long fallback) const {
  const auto v = option(key);
  if (!v) return fallback;
  const double d = parse_double(*v, key);
  if (d != static_cast<double>(static_cast<long>(d))) throw UsageError(key + ": expected an integer");
  return static_cast<long>(d);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "binary-matrix") return OutputFormat::binary_matrix;
  throw UsageError("unknown format '" + name + "' (csv | json | binary-matrix)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::binary_matrix: return "binary-matrix";
  }
  return "csv";
}

}  // namespace cavjj
