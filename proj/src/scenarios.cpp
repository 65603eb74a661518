#include "ntnsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <stdexcept>

namespace ntnsim {

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::vector<std::pair<double, double>> cdf_points(std::vector<double> values, std::size_t points) {
  std::vector<std::pair<double, double>> out;
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  out.reserve(points + 2);
  out.emplace_back(values.front(), 0.0);
  for (std::size_t j = 1; j <= points; ++j) {
    const double level = static_cast<double>(j) / static_cast<double>(points + 1);
    // Smallest sample whose empirical CDF reaches the level.
    auto rank = static_cast<std::size_t>(std::ceil(level * static_cast<double>(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    out.emplace_back(values[rank - 1], level);
  }
  out.emplace_back(values.back(), 1.0);
  return out;
}

namespace {

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string describe(const MetricEstimate& e) {
  return fixed(e.value) + " [" + fixed(e.ci_low) + ", " + fixed(e.ci_high) + "]";
}

}  // namespace

ScenarioOutput scenario_remote(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options) {
  validate(cfg);
  if (!cfg.base_station_enabled) throw ConfigError("base_station.enabled: relay availability needs a base station");
  std::vector<std::int64_t> sats = cfg.remote_n_sat;
  std::vector<std::int64_t> haps = cfg.remote_n_hap;
  if (sats.empty()) sats.push_back(at(cfg.tiers, Tier::sat).count);
  if (haps.empty()) haps.push_back(at(cfg.tiers, Tier::hap).count);

  ScenarioOutput out;
  ResultTable table{"availability", {"n_sat", "n_hap", "trials", "availability", "ci_low", "ci_high"}, {}};
  for (std::int64_t n_hap : haps) {
    for (std::int64_t n_sat : sats) {
      // Every grid point reuses the seed: nested realizations make the grid monotone.
      const Deployment d = remote_deployment(cfg, n_sat, n_hap);
      const MetricEstimate e = relay_availability(d, cfg.trials, seed, options);
      table.add_row({n_sat, n_hap, cfg.trials, e.value, e.ci_low, e.ci_high});
      out.summary.push_back("availability n_sat=" + std::to_string(n_sat) + " n_hap=" + std::to_string(n_hap) + ": " +
                            describe(e));
      ++out.estimates;
      out.trials += cfg.trials;
    }
  }
  out.tables.push_back(std::move(table));
  return out;
}

PostDisasterOutput scenario_post_disaster(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options) {
  validate(cfg);
  struct Curve {
    std::string label;
    std::int64_t lap, hap, sat;
  };
  std::vector<Curve> curves;
  if (cfg.pd_lap_counts.empty()) {
    curves.push_back({cfg.label, at(cfg.tiers, Tier::lap).count, at(cfg.tiers, Tier::hap).count,
                      at(cfg.tiers, Tier::sat).count});
  } else {
    for (std::size_t i = 0; i < cfg.pd_lap_counts.size(); ++i) {
      const std::string label = cfg.pd_labels.empty() ? "curve" + std::to_string(i) : cfg.pd_labels[i];
      curves.push_back({label, cfg.pd_lap_counts[i], cfg.pd_hap_counts[i], cfg.pd_sat_counts[i]});
    }
  }

  PostDisasterOutput result;
  ResultTable capacity{"capacity_cdf", {"label", "tier", "capacity_bps", "cdf"}, {}};
  ResultTable efficiency{"ee_cdf", {"label", "tier", "ee_bits_per_joule", "cdf"}, {}};

  for (const Curve& c : curves) {
    const Deployment d = post_disaster_deployment(cfg, c.lap, c.hap, c.sat);
    d.validate();
    ServingCurve curve{c.label, std::vector<ServingSample>(static_cast<std::size_t>(cfg.trials))};
    parallel_for(curve.samples.size(), options.workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) curve.samples[t] = sample_serving(d, seed, t);
    });

    TierTable<std::vector<double>> cap_by_tier, ee_by_tier;
    std::vector<double> cap_all, ee_all;
    std::int64_t uncovered = 0;
    for (const ServingSample& s : curve.samples) {
      if (!s.tier) {
        ++uncovered;
        continue;
      }
      at(cap_by_tier, *s.tier).push_back(s.capacity_bps);
      at(ee_by_tier, *s.tier).push_back(s.efficiency_bpj);
      cap_all.push_back(s.capacity_bps);
      ee_all.push_back(s.efficiency_bpj);
    }

    auto emit = [&](const std::string& tier, const std::vector<double>& caps, const std::vector<double>& ees) {
      for (const auto& [v, p] : cdf_points(caps)) capacity.add_row({c.label, tier, v, p});
      for (const auto& [v, p] : cdf_points(ees)) efficiency.add_row({c.label, tier, v, p});
    };
    emit("all", cap_all, ee_all);
    for (Tier t : kAllTiers) emit(std::string(tier_name(t)), at(cap_by_tier, t), at(ee_by_tier, t));
    // Explicit no-coverage flag: the share of trials with no visible platform.
    const double none_share = static_cast<double>(uncovered) / static_cast<double>(cfg.trials);
    capacity.add_row({c.label, std::string("none"), 0.0, none_share});
    efficiency.add_row({c.label, std::string("none"), 0.0, none_share});

    std::string line = "serving " + c.label + ": no_coverage=" + fixed(none_share);
    for (Tier t : kAllTiers) {
      line += " " + std::string(tier_name(t)) + "=" +
              fixed(static_cast<double>(at(cap_by_tier, t).size()) / static_cast<double>(cfg.trials));
    }
    result.output.summary.push_back(line);
    ++result.output.estimates;
    result.output.trials += cfg.trials;
    result.curves.push_back(std::move(curve));
  }
  result.output.tables.push_back(std::move(capacity));
  result.output.tables.push_back(std::move(efficiency));
  return result;
}

namespace {

ResultTable kcoverage_table(const Deployment& d, const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options,
                            ScenarioOutput& out) {
  std::vector<std::size_t> ks;
  for (auto k : cfg.k_values) ks.push_back(static_cast<std::size_t>(k));
  const auto curves = k_coverage_curves(d, ks, cfg.thresholds_db, cfg.trials, seed, options);
  ResultTable table{"kcoverage", {"threshold_db", "k", "probability", "ci_low", "ci_high"}, {}};
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    for (std::size_t ti = 0; ti < cfg.thresholds_db.size(); ++ti) {
      const MetricEstimate& e = curves[ki][ti];
      table.add_row({cfg.thresholds_db[ti], cfg.k_values[ki], e.value, e.ci_low, e.ci_high});
      out.summary.push_back("k-coverage k=" + std::to_string(ks[ki]) + " threshold=" +
                            fixed(cfg.thresholds_db[ti], 2) + " dB: " + describe(e));
      ++out.estimates;
    }
  }
  out.trials += cfg.trials;
  return table;
}

}  // namespace

ScenarioOutput scenario_k_coverage(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options) {
  validate(cfg);
  ScenarioOutput out;
  out.tables.push_back(kcoverage_table(configured_deployment(cfg), cfg, seed, options, out));
  return out;
}

ScenarioOutput scenario_custom(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options) {
  validate(cfg);
  const Deployment d = configured_deployment(cfg);
  ScenarioOutput out;
  const auto curve = coverage_curve(d, cfg.thresholds_db, cfg.trials, seed, options);
  ResultTable coverage{"coverage", {"threshold_db", "probability", "ci_low", "ci_high"}, {}};
  for (std::size_t i = 0; i < curve.size(); ++i) {
    coverage.add_row({cfg.thresholds_db[i], curve[i].value, curve[i].ci_low, curve[i].ci_high});
    out.summary.push_back("coverage threshold=" + fixed(cfg.thresholds_db[i], 2) + " dB: " + describe(curve[i]));
    ++out.estimates;
  }
  out.trials += cfg.trials;
  out.tables.push_back(std::move(coverage));
  if (!cfg.k_values.empty()) out.tables.push_back(kcoverage_table(d, cfg, seed, options, out));
  return out;
}

ScenarioOutput run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, RunOptions options) {
  switch (cfg.kind) {
    case ScenarioKind::remote: return scenario_remote(cfg, seed, options);
    case ScenarioKind::post_disaster: return scenario_post_disaster(cfg, seed, options).output;
    case ScenarioKind::k_coverage: return scenario_k_coverage(cfg, seed, options);
    case ScenarioKind::custom: return scenario_custom(cfg, seed, options);
  }
  throw std::logic_error("unhandled scenario kind");
}

ScenarioOutput sweep_scenario(const ScenarioConfig& base, std::string_view param, std::span<const std::string> values,
                              std::uint64_t seed, RunOptions options) {
  if (!schema_has_key(param)) throw ConfigError(std::string(param) + ": unknown key");
  if (values.empty()) throw ConfigError(std::string(param) + ": sweep needs at least one value");
  ScenarioOutput out;
  for (const std::string& value : values) {
    ScenarioConfig cfg = base;
    apply_override(cfg, param, value);
    ScenarioOutput one = run_scenario(cfg, seed, options);
    for (ResultTable& t : one.tables) {
      auto it = std::find_if(out.tables.begin(), out.tables.end(), [&](const ResultTable& r) { return r.name == t.name; });
      if (it == out.tables.end()) {
        ResultTable fresh{t.name, {std::string(param)}, {}};
        fresh.columns.insert(fresh.columns.end(), t.columns.begin(), t.columns.end());
        out.tables.push_back(std::move(fresh));
        it = std::prev(out.tables.end());
      }
      for (auto& row : t.rows) {
        row.insert(row.begin(), Cell{value});
        it->add_row(std::move(row));
      }
    }
    for (auto& line : one.summary) out.summary.push_back(std::string(param) + "=" + value + " " + line);
    out.estimates += one.estimates;
    out.trials += one.trials;
  }
  return out;
}

}  // namespace ntnsim
