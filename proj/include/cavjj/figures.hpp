#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cavjj/atlas.hpp"
#include "cavjj/config.hpp"
#include "cavjj/output.hpp"
#include "cavjj/params.hpp"

namespace cavjj {

// Canned parameter sets. S is read as Λ throughout; see the manifests for the mapping.
inline constexpr double kFig2LambdaA = 0.1;
inline constexpr double kFig2LambdaB = 3.87;
inline constexpr double kFig6Lambda = 1.37;

// r=3, r_bc=0.1, Ã=0.02, B=−0.65, C=0.07, no mirror.
[[nodiscard]] ReducedParams fig2_params(double lambda);
// fig2 set with r=0.1, r_bc=3 (the assignment listed for fig3).
[[nodiscard]] ReducedParams fig3_params(double lambda);
// fig2b set with the mirror on.
[[nodiscard]] ReducedParams fig4_params(double d, double e);
// fig2 set, Λ = 1.37, mirror on.
[[nodiscard]] ReducedParams fig6_params(double d, double e);

struct ReproduceOptions {
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 0;
  GridSpec grid{};
  double fig3_t_end = 30.0;
  double photon_t_end = 50.0;
};

struct ReproduceResult {
  Meta manifest;
  std::vector<std::filesystem::path> files;
};

[[nodiscard]] const std::vector<std::string>& figure_ids();

// Writes every table of the figure under out_dir/<id>/ plus manifest.json.
// Throws UsageError for an unknown id.
ReproduceResult reproduce(const std::string& id, const ReproduceOptions& opt = {});

}  // namespace cavjj
