#pragma once

// CSV/JSON emission of result tables and the run manifest.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ntnsim/config.hpp"
#include "ntnsim/scenarios.hpp"

namespace ntnsim {

enum class OutputFormat { csv, json };

// Shortest round-trip decimal for doubles; integers and strings verbatim.
std::string format_cell(const Cell& cell);

// Header line plus one line per row, comma-separated, LF endings.
std::string to_csv(const ResultTable& table);
// {"name": ..., "columns": [...], "rows": [[...], ...]}
std::string to_json(const ResultTable& table);

// Writes <dir>/<table.name>.csv (or .json) per table and returns the paths.
std::vector<std::filesystem::path> write_results(const std::vector<ResultTable>& tables,
                                                 const std::filesystem::path& dir, OutputFormat format);

struct RunManifest {
  std::uint64_t seed = 0;
  ScenarioConfig config;
  double wall_time_s = 0.0;
  std::int64_t estimates = 0;
  std::int64_t trials = 0;
  unsigned workers = 0;
  std::vector<std::string> outputs;
  std::vector<std::string> sweep_values;  // empty unless produced by a sweep
  std::string sweep_param;
};

std::string manifest_json(const RunManifest& m);
std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& dir);

std::string library_version();

}  // namespace ntnsim
