#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cavjj/params.hpp"

namespace cavjj {

enum class OutputFormat { csv, json, binary_matrix };

// Parsed run configuration. Config files are INI-like: top-level `key = value` options and
// exactly one of the [reduced] / [physical] blocks.
//
//   command = contours
//   nz = 201
//   [reduced]
//   r = 3
//   r_bc = 0.1
//   lambda = 0.1
//   a_tilde = 0.02
//   b = -0.65
//   c = 0.07
struct RunConfig {
  std::string subcommand;
  std::variant<std::monostate, ReducedParams, PhysicalParams> params;
  std::map<std::string, std::string> options;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::csv;

  [[nodiscard]] bool has_params() const { return !std::holds_alternative<std::monostate>(params); }

  // Reduced parameters of whichever block is present (physical blocks go through reduce()).
  [[nodiscard]] ReducedParams reduced() const;

  [[nodiscard]] std::optional<std::string> option(const std::string& key) const;
  [[nodiscard]] double option_double(const std::string& key, double fallback) const;
  [[nodiscard]] long option_int(const std::string& key, long fallback) const;
};

// Throws UsageError on malformed input, unknown keys or a config with both blocks.
[[nodiscard]] RunConfig parse_config_text(const std::string& text);
[[nodiscard]] RunConfig load_config(const std::string& path);

// Applies `key=value` overrides. Keys "reduced.x" / "physical.x" address a block (creating
// it when no block is present yet); plain keys set top-level options.
void apply_override(RunConfig& cfg, const std::string& assignment);

void set_reduced_key(ReducedParams& rp, const std::string& key, double value);
void set_physical_key(PhysicalParams& p, const std::string& key, double value);

[[nodiscard]] double parse_double(const std::string& text, const std::string& what);

[[nodiscard]] OutputFormat parse_format(const std::string& name);
[[nodiscard]] std::string to_string(OutputFormat f);

}  // namespace cavjj
