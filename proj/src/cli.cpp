#include "ntnsim/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ntnsim/config.hpp"
#include "ntnsim/results_io.hpp"
#include "ntnsim/scenarios.hpp"
#include "ntnsim/selftest.hpp"

namespace ntnsim {

namespace {

struct RunFlags {
  std::string scenario;
  std::vector<std::string> overrides;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::string format = "csv";
  unsigned workers = 0;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--scenario", f.scenario, "scenario configuration file")->required();
  cmd->add_option("--set", f.overrides, "override a configuration key, e.g. --set tiers.sat.count=60");
  cmd->add_option("--trials", f.trials, "override scenario.trials");
  cmd->add_option("--seed", f.seed, "global seed (default: scenario.seed, else NTNSIM_SEED, else 1)");
  cmd->add_option("--out", f.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--format", f.format, "result format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--workers", f.workers, "worker threads (0: all hardware threads)")->capture_default_str();
}

ScenarioConfig prepare_config(const RunFlags& f) {
  ScenarioConfig cfg = load_config_file(f.scenario);
  for (const std::string& kv : f.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set " + kv + ": expected key=value");
    apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (f.trials) apply_override(cfg, "scenario.trials", std::to_string(*f.trials));
  return cfg;
}

std::uint64_t resolve_seed(const RunFlags& f, const ScenarioConfig& cfg) {
  if (f.seed) return *f.seed;
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("NTNSIM_SEED"); env != nullptr && *env != '\0') {
    ScenarioConfig probe = cfg;
    apply_override(probe, "scenario.seed", env);
    return *probe.seed;
  }
  return 1;
}

int emit(const RunFlags& f, const ScenarioConfig& cfg, std::uint64_t seed, const ScenarioOutput& result,
         double wall_s, const std::string& sweep_param, const std::vector<std::string>& sweep_values,
         std::ostream& out) {
  const auto format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
  const auto paths = write_results(result.tables, f.out_dir, format);
  RunManifest m;
  m.seed = seed;
  m.config = cfg;
  m.config.seed = seed;
  m.wall_time_s = wall_s;
  m.estimates = result.estimates;
  m.trials = result.trials;
  m.workers = resolve_workers(f.workers);
  m.sweep_param = sweep_param;
  m.sweep_values = sweep_values;
  for (const auto& p : paths) m.outputs.push_back(p.filename().string());
  write_manifest(m, f.out_dir);
  for (const auto& line : result.summary) out << line << '\n';
  return kExitOk;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte-Carlo simulator for multi-tier non-terrestrial networks", "ntnsim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run a scenario and write result tables plus manifest.json");
  add_run_flags(run, run_flags);

  RunFlags sweep_flags;
  std::string sweep_param;
  std::vector<std::string> sweep_values;
  CLI::App* sweep = app.add_subcommand("sweep", "run a scenario once per value of one configuration key");
  add_run_flags(sweep, sweep_flags);
  sweep->add_option("--param", sweep_param, "dotted configuration key to sweep")->required();
  sweep->add_option("--values", sweep_values, "values, comma-separated or repeated")->required()->delimiter(',');

  bool corrupt = false;
  CLI::App* selftest = app.add_subcommand("selftest", "run the analytic-vs-Monte-Carlo oracle suite");
  selftest->add_flag("--corrupt-tolerance", corrupt)->group("");

  app.add_subcommand("schema", "print the configuration schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << library_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ntnsim: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (app.got_subcommand("schema")) {
      out << schema_text();
      return kExitOk;
    }
    if (app.got_subcommand("selftest")) {
      SelftestOptions options;
      if (corrupt) options.tolerance_scale = 0.0;
      return run_selftest(out, options);
    }
    const bool is_sweep = app.got_subcommand("sweep");
    const RunFlags& f = is_sweep ? sweep_flags : run_flags;
    const ScenarioConfig cfg = prepare_config(f);
    const std::uint64_t seed = resolve_seed(f, cfg);
    if (is_sweep && !schema_has_key(sweep_param)) throw ConfigError(sweep_param + ": unknown key");
    const RunOptions options{f.workers};
    const auto start = std::chrono::steady_clock::now();
    const ScenarioOutput result =
        is_sweep ? sweep_scenario(cfg, sweep_param, sweep_values, seed, options) : run_scenario(cfg, seed, options);
    return emit(f, cfg, seed, result, seconds_since(start), is_sweep ? sweep_param : "", sweep_values, out);
  } catch (const ConfigError& e) {
    err << "ntnsim: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "ntnsim: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace ntnsim
