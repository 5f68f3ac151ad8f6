#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cavjj/atlas.hpp"
#include "cavjj/config.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

using Meta = nlohmann::ordered_json;

using Cell = std::variant<double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// Shortest round-trip decimal form (std::to_chars); identical across runs.
[[nodiscard]] std::string format_number(double v);

[[nodiscard]] Meta echo(const ReducedParams& rp);
[[nodiscard]] Meta echo(const PhysicalParams& p);

// Creates the directory (and parents). Throws UsageError when that fails.
void ensure_dir(const std::filesystem::path& dir);

// CSV with `# key=value` lines carrying the metadata (nested keys joined with '.').
void write_csv(const std::filesystem::path& path, const Table& table, const Meta& meta);
void write_json(const std::filesystem::path& path, const Meta& doc);

// csv: <stem>.csv plus a <stem>.json sidecar; json: one <stem>.json with meta, columns, rows.
// binary-matrix is not meaningful for tables and falls back to csv. Returns the files written.
std::vector<std::filesystem::path> write_table(const std::filesystem::path& stem, const Table& table,
                                               const Meta& meta, OutputFormat format);

// csv: long form (z, phi, value); json: z, phi axes and nested rows; binary-matrix: one JSON
// header line followed by nz·nphi little-endian float64 values, row-major in z.
std::vector<std::filesystem::path> write_field(const std::filesystem::path& stem, const ScalarField& field,
                                               const Meta& meta, OutputFormat format);

}  // namespace cavjj
