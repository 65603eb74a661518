#include "ntnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ntnsim/kernels.hpp"

namespace ntnsim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> clear_ranges_from(const GeoPoint& observer, const Constellation& c) {
  const kernels::PointsSoA soa = c.positions();
  std::vector<double> ranges(c.size());
  kernels::clear_ranges(soa, observer.position(), kBlockingRadiusKm, ranges);
  return ranges;
}

// Runs per_trial(t) for every trial and collects its result by index.
template <typename T>
std::vector<T> run_trials(std::int64_t trials, RunOptions options, const std::function<T(std::uint64_t)>& per_trial) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<T> out(static_cast<std::size_t>(trials));
  parallel_for(out.size(), options.workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) out[t] = per_trial(t);
  });
  return out;
}

}  // namespace

std::optional<int> associate(std::span<const double> ranges_km, const Constellation& constellation,
                             const TierTable<RadioParams>& radio) {
  std::optional<int> best;
  double best_power = kNegInf;
  for (std::size_t i = 0; i < constellation.size(); ++i) {
    if (ranges_km[i] < 0.0) continue;
    const Platform& p = constellation[i];
    // Coincident points have no defined path loss; treat them as unit-loss.
    const double range = std::max(ranges_km[i], 1e-9);
    const double power = mean_rx_power_dbw(at(radio, p.tier), range);
    if (!best || power > best_power) {
      best = p.id;
      best_power = power;
    }
  }
  return best;
}

std::optional<int> associate(const GeoPoint& user, const Constellation& constellation,
                             const TierTable<RadioParams>& radio) {
  const auto ranges = clear_ranges_from(user, constellation);
  return associate(ranges, constellation, radio);
}

TrialLinks evaluate_links(const Deployment& d, std::uint64_t seed, std::uint64_t trial) {
  const TrialSample s = sample_trial(d, seed, trial);
  const auto ranges = clear_ranges_from(s.user, s.platforms);

  TrialLinks out;
  out.serving = associate(ranges, s.platforms, d.radio);
  out.serving_sinr_db = kNegInf;

  std::vector<Link> links;
  std::size_t serving_slot = 0;
  for (std::size_t i = 0; i < s.platforms.size(); ++i) {
    if (ranges[i] < 0.0) continue;
    const Platform& p = s.platforms[i];
    CounterRng rng = fading_stream(seed, trial, p);
    const RadioParams& radio = at(d.radio, p.tier);
    const Link link{&radio, std::max(ranges[i], 1e-9), sample_fading(radio.fading, rng)};
    if (out.serving && *out.serving == p.id) serving_slot = links.size();
    links.push_back(link);
    out.visible_snr_db.push_back(snr_db(radio, link.distance_km, link.fading_gain, d.noise));
  }
  if (out.serving) {
    std::vector<Link> interferers;
    if (d.mode == LinkMode::sinr) {
      interferers.reserve(links.size());
      for (std::size_t j = 0; j < links.size(); ++j) {
        if (j != serving_slot) interferers.push_back(links[j]);
      }
    }
    out.serving_sinr_db = sinr_db(links[serving_slot], interferers, d.noise, d.mode);
  }
  std::sort(out.visible_snr_db.begin(), out.visible_snr_db.end(), std::greater<>());
  return out;
}

std::vector<MetricEstimate> coverage_curve(const Deployment& d, std::span<const double> thresholds_db,
                                           std::int64_t trials, std::uint64_t seed, RunOptions options) {
  d.validate();
  const auto sinr = run_trials<double>(trials, options, [&](std::uint64_t t) {
    return evaluate_links(d, seed, t).serving_sinr_db;
  });
  std::vector<MetricEstimate> out;
  for (double th : thresholds_db) {
    std::int64_t hits = 0;
    for (double v : sinr) hits += v >= th ? 1 : 0;
    out.push_back(wilson_interval(hits, trials));
  }
  return out;
}

MetricEstimate coverage_probability(const Deployment& d, double threshold_db, std::int64_t trials, std::uint64_t seed,
                                    RunOptions options) {
  const double th[] = {threshold_db};
  return coverage_curve(d, th, trials, seed, options).front();
}

std::vector<std::vector<MetricEstimate>> k_coverage_curves(const Deployment& d, std::span<const std::size_t> k_values,
                                                           std::span<const double> thresholds_db,
                                                           std::int64_t trials, std::uint64_t seed,
                                                           RunOptions options) {
  d.validate();
  for (std::size_t k : k_values) {
    if (k < 1) throw std::invalid_argument("k-coverage needs k >= 1");
  }
  // Per trial, the k-th strongest visible SNR decides every threshold at once.
  const auto kth = run_trials<std::vector<double>>(trials, options, [&](std::uint64_t t) {
    const TrialLinks links = evaluate_links(d, seed, t);
    std::vector<double> v;
    v.reserve(k_values.size());
    for (std::size_t k : k_values) {
      // NaN marks a missing k-th platform: it fails every threshold, even -inf.
      v.push_back(k <= links.visible_snr_db.size() ? links.visible_snr_db[k - 1]
                                                    : std::numeric_limits<double>::quiet_NaN());
    }
    return v;
  });
  std::vector<std::vector<MetricEstimate>> out(k_values.size());
  for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
    for (double th : thresholds_db) {
      std::int64_t hits = 0;
      for (const auto& v : kth) hits += v[ki] >= th ? 1 : 0;
      out[ki].push_back(wilson_interval(hits, trials));
    }
  }
  return out;
}

MetricEstimate k_coverage_probability(const Deployment& d, std::size_t k, double threshold_db, std::int64_t trials,
                                      std::uint64_t seed, RunOptions options) {
  const std::size_t ks[] = {k};
  const double th[] = {threshold_db};
  return k_coverage_curves(d, ks, th, trials, seed, options).front().front();
}

MetricEstimate relay_availability(const Deployment& d, std::int64_t trials, std::uint64_t seed, RunOptions options) {
  d.validate();
  if (!d.base_station) throw std::invalid_argument("relay_availability needs a base station position");
  const Vec3 bs = d.base_station->position();
  const auto hit = run_trials<char>(trials, options, [&](std::uint64_t t) -> char {
    const TrialSample s = sample_trial(d, seed, t);
    const kernels::PointsSoA soa = s.platforms.positions();
    return kernels::count_common_clear(soa, s.user.position(), bs, kBlockingRadiusKm) > 0 ? 1 : 0;
  });
  std::int64_t hits = 0;
  for (char h : hit) hits += h;
  return wilson_interval(hits, trials);
}

double common_los_fraction(const GeoPoint& a, const GeoPoint& b, const SphericalCap& region, std::int64_t samples,
                           std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("common_los_fraction: samples must be >= 1");
  constexpr std::int64_t kBatch = 4096;
  const StreamFamily streams(seed, "common-los-integral");
  kernels::PointsSoA batch;
  batch.reserve(kBatch);
  std::int64_t inside = 0;
  for (std::int64_t start = 0, b_index = 0; start < samples; start += kBatch, ++b_index) {
    CounterRng rng = streams.at(static_cast<std::uint32_t>(b_index));
    batch.clear();
    const std::int64_t n = std::min(kBatch, samples - start);
    for (std::int64_t i = 0; i < n; ++i) batch.push_back(uniform_on_cap(region, rng).position());
    inside += static_cast<std::int64_t>(kernels::count_common_clear(batch, a.position(), b.position(), kBlockingRadiusKm));
  }
  return static_cast<double>(inside) / static_cast<double>(samples);
}

double analytic_bpp_availability(double p_single, std::size_t n) {
  if (!(p_single >= 0.0 && p_single <= 1.0)) throw std::invalid_argument("p_single must lie in [0, 1]");
  return 1.0 - std::pow(1.0 - p_single, static_cast<double>(n));
}

double link_capacity_bps(double snr_linear, double bandwidth_hz) {
  if (!(snr_linear >= 0.0)) throw std::invalid_argument("link_capacity_bps: SNR must be nonnegative");
  return bandwidth_hz * std::log2(1.0 + snr_linear);
}

double path_capacity(std::span<const double> hop_capacities) {
  if (hop_capacities.empty()) throw std::invalid_argument("path_capacity: path has no hops");
  return *std::min_element(hop_capacities.begin(), hop_capacities.end());
}

double energy_efficiency(double capacity_bps, double tx_power_w) {
  if (!(tx_power_w > 0.0)) throw std::invalid_argument("energy_efficiency: transmit power must be positive");
  return capacity_bps / tx_power_w;
}

double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

double propagation_latency(std::span<const GeoPoint> path) {
  if (path.size() < 2) throw std::invalid_argument("propagation_latency: path needs at least two points");
  double km = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) km += slant_range(path[i - 1], path[i]);
  return km / kSpeedOfLightKmS;
}

double orbital_period_s(double orbit_radius_km) {
  if (!(orbit_radius_km > 0.0)) throw std::invalid_argument("orbital_period_s: radius must be positive");
  return 2.0 * kPi * std::sqrt(orbit_radius_km * orbit_radius_km * orbit_radius_km / kEarthMu);
}

double pass_duration(double orbit_radius_km, double user_radius_km, double plane_offset) {
  const double alpha = session_arc_half_angle(orbit_radius_km, user_radius_km, plane_offset);
  return (2.0 * alpha / (2.0 * kPi)) * orbital_period_s(orbit_radius_km);
}

double lap_availability(const LapDutyCycle& d) {
  if (!(d.serving_s >= 0.0 && d.backhaul_s >= 0.0 && d.charging_s >= 0.0)) {
    throw std::invalid_argument("LAP duty-cycle durations must be nonnegative");
  }
  const double total = d.serving_s + d.backhaul_s + d.charging_s;
  if (!(total > 0.0)) throw std::invalid_argument("LAP duty cycle has zero total duration");
  return d.serving_s / total;
}

ServingSample sample_serving(const Deployment& d, std::uint64_t seed, std::uint64_t trial) {
  if (d.mode == LinkMode::sinr) {
    const TrialLinks links = evaluate_links(d, seed, trial);
    ServingSample out;
    if (!links.serving) return out;
    const Platform p = sample_platforms(d, seed, trial)[static_cast<std::size_t>(*links.serving)];
    const RadioParams& radio = at(d.radio, p.tier);
    out.tier = p.tier;
    out.capacity_bps = link_capacity_bps(db_to_linear(links.serving_sinr_db), radio.bandwidth_hz);
    out.efficiency_bpj = energy_efficiency(out.capacity_bps, dbw_to_watts(radio.tx_power_dbw));
    return out;
  }
  const TrialSample s = sample_trial(d, seed, trial);
  const auto ranges = clear_ranges_from(s.user, s.platforms);
  const auto serving = associate(ranges, s.platforms, d.radio);
  ServingSample out;
  if (!serving) return out;
  const Platform& p = s.platforms[static_cast<std::size_t>(*serving)];
  const RadioParams& radio = at(d.radio, p.tier);
  CounterRng rng = fading_stream(seed, trial, p);
  const double gain = sample_fading(radio.fading, rng);
  const double range = std::max(ranges[static_cast<std::size_t>(*serving)], 1e-9);
  const double snr = db_to_linear(mean_rx_power_dbw(radio, range) - noise_power_dbw(d.noise, radio.bandwidth_hz)) * gain;
  out.tier = p.tier;
  out.capacity_bps = link_capacity_bps(snr, radio.bandwidth_hz);
  out.efficiency_bpj = energy_efficiency(out.capacity_bps, dbw_to_watts(radio.tx_power_dbw));
  return out;
}

}  // namespace ntnsim
