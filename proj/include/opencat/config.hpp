#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opencat/experiments.hpp"

namespace opencat {

/// Run description read from a JSON document. Keys left out of the document
/// stay empty and are filled with the command's defaults.
struct RunConfig {
  std::array<std::int64_t, 4> matrix{2, 1, 1, 1};
  std::optional<std::vector<int>> n_list;
  std::optional<BumpSpec> cutoff;
  Quantization quantization = Quantization::Left;
  PhaseMode phase = PhaseMode::LeadingRealPositive;
  int k_count = 4;
  int k_max = QuantizerSettings{}.k_max;
  int grid = QuantizerSettings{}.grid;
  std::optional<std::string> out_csv;
  std::optional<std::string> out_svg;
  std::uint64_t seed = 0;
};

/// Throws Error(ConfigError) on malformed JSON, unknown keys or bad types.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Checks the RunConfig invariants after defaults are resolved.
void validate_config(const RunConfig& config);

CatMap config_map(const RunConfig& config);
OpenMapSetup make_setup(const RunConfig& config, const BumpSpec& cutoff);

}  // namespace opencat
