#pragma once

// Experiment runners: each turns a ScenarioConfig into one or more result
// tables ready for CSV/JSON emission.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ntnsim/config.hpp"
#include "ntnsim/estimate.hpp"
#include "ntnsim/metrics.hpp"

namespace ntnsim {

using Cell = std::variant<std::int64_t, double, std::string>;

struct ResultTable {
  std::string name;  // file stem, e.g. "availability"
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Throws std::logic_error unless the row has one cell per column.
  void add_row(std::vector<Cell> row);
};

struct ScenarioOutput {
  std::vector<ResultTable> tables;
  std::vector<std::string> summary;  // one line per metric
  std::int64_t estimates = 0;        // estimator evaluations (grid points, curve cells)
  std::int64_t trials = 0;           // Monte-Carlo trials actually drawn
};

ScenarioOutput scenario_remote(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options = {});

struct ServingCurve {
  std::string label;
  std::vector<ServingSample> samples;  // one per trial, in trial order
};

struct PostDisasterOutput {
  ScenarioOutput output;  // capacity_cdf and ee_cdf tables
  std::vector<ServingCurve> curves;
};

PostDisasterOutput scenario_post_disaster(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options = {});

ScenarioOutput scenario_k_coverage(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options = {});

// Coverage curve plus k-coverage curves for an arbitrary configured deployment.
ScenarioOutput scenario_custom(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options = {});

ScenarioOutput run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options = {});

// Runs the scenario once per value of the dotted key `param` and concatenates
// same-named tables, with the swept value prepended as a `param` column.
ScenarioOutput sweep_scenario(const ScenarioConfig& base, std::string_view param, std::span<const std::string> values,
                              std::uint64_t seed, RunOptions options = {});

// Empirical CDF summary: `points` evenly spaced levels j/(points+1), plus the
// minimum at level 0 and the maximum at level 1. Empty input gives no rows.
std::vector<std::pair<double, double>> cdf_points(std::vector<double> values, std::size_t points = 512);

}  // namespace ntnsim
