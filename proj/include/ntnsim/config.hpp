#pragma once

// Scenario configuration: a YAML document of nested sections whose leaves map
// one-to-one onto dotted schema keys such as `tiers.sat.count`.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/deployment.hpp"

namespace ntnsim {

enum class ScenarioKind { remote, post_disaster, k_coverage, custom };

std::string_view scenario_kind_name(ScenarioKind k);

struct TierConfig {
  std::string process = "none";  // none | bpp_sphere | bpp_cap | ppp_cap | bpp_disk | ppp_disk | cox | orbit
  std::int64_t count = 0;
  double density_per_km2 = 0.0;
  double altitude_km = 0.0;      // sphere/cap processes: height above the Earth radius
  double altitude_m = 0.0;       // disk processes
  double apex_angle = 0.0;       // cap processes; 0 means "same as the user cap"
  double disk_radius_km = 0.0;   // disk processes; 0 means "same as the user disk"
  double cox_orbit_rate = 0.0;
  double cox_sats_per_orbit = 0.0;
  double cox_altitude_min_km = 550.0;
  double cox_altitude_max_km = 550.0;
  std::int64_t orbit_planes = 1;
  double orbit_inclination = 0.0;
  double tx_power_dbw = 0.0;
  double tx_gain_db = 0.0;
  double rx_gain_db = 0.0;
  double frequency_hz = 2e9;
  double bandwidth_hz = 20e6;
  std::string fading_kind = "none";  // none | nakagami | shadowed_rician
  double fading_m = 1.0;
  double fading_b = 0.0;
  double fading_omega = 1.0;

  RadioParams radio() const;

  friend bool operator==(const TierConfig&, const TierConfig&) = default;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::remote;
  std::int64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string label = "run";

  std::string user_process = "cap";  // cap | disk
  double user_density_per_km2 = 1.0;
  double user_apex_angle = 0.0;
  double user_disk_radius_km = 30.0;

  bool base_station_enabled = true;
  double base_station_arc_km = 500.0;

  TierTable<TierConfig> tiers{};
  NoiseSpec noise;

  std::string mode = "snr";  // snr | sinr
  std::vector<double> thresholds_db;
  std::vector<std::int64_t> k_values;
  double capacity_threshold_bps = 300e6;

  std::vector<std::int64_t> remote_n_sat;
  std::vector<std::int64_t> remote_n_hap;

  std::vector<std::string> pd_labels;
  std::vector<std::int64_t> pd_lap_counts;
  std::vector<std::int64_t> pd_hap_counts;
  std::vector<std::int64_t> pd_sat_counts;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Diagnostics name the offending dotted key, e.g. "tiers.sat.count: expected an integer".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults for each scenario kind, reproducing the reference experiments.
ScenarioConfig default_config(ScenarioKind kind);

ScenarioConfig load_config(std::string_view yaml_text);
ScenarioConfig load_config_file(const std::string& path);
std::string write_config(const ScenarioConfig& cfg);

// Applies `key=value` style overrides; `value` uses YAML scalar/flow syntax.
void apply_override(ScenarioConfig& cfg, std::string_view key, std::string_view value);
bool schema_has_key(std::string_view key);

// Dotted key -> printable value, in schema order.
std::vector<std::pair<std::string, std::string>> flatten_config(const ScenarioConfig& cfg);

// Human-readable schema listing (key, type, default, description).
std::string schema_text();

void validate(const ScenarioConfig& cfg);

// Deployment builders for each experiment.
Deployment remote_deployment(const ScenarioConfig& cfg, std::int64_t n_sat, std::int64_t n_hap);
Deployment post_disaster_deployment(const ScenarioConfig& cfg, std::int64_t n_lap, std::int64_t n_hap,
                                    std::int64_t n_sat);
Deployment configured_deployment(const ScenarioConfig& cfg);

}  // namespace ntnsim
