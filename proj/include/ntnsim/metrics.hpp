#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/deployment.hpp"
#include "ntnsim/estimate.hpp"
#include "ntnsim/geom.hpp"
#include "ntnsim/pointproc.hpp"

namespace ntnsim {

// Visible platform with the strongest mean (fading-free) received power; ties
// go to the lowest id.
std::optional<int> associate(const GeoPoint& user, const Constellation& constellation,
                             const TierTable<RadioParams>& radio);

// Same, reusing precomputed clear ranges (-1 for blocked platforms).
std::optional<int> associate(std::span<const double> ranges_km, const Constellation& constellation,
                             const TierTable<RadioParams>& radio);

// Per-trial link state of the reference user.
struct TrialLinks {
  std::optional<int> serving;
  double serving_sinr_db = 0.0;              // -inf when nothing is visible
  std::vector<double> visible_snr_db;        // one entry per visible platform, sorted descending
};

TrialLinks evaluate_links(const Deployment& d, std::uint64_t seed, std::uint64_t trial);

MetricEstimate coverage_probability(const Deployment& d, double threshold_db, std::int64_t trials, std::uint64_t seed,
                                    RunOptions options = {});
std::vector<MetricEstimate> coverage_curve(const Deployment& d, std::span<const double> thresholds_db,
                                           std::int64_t trials, std::uint64_t seed, RunOptions options = {});

MetricEstimate k_coverage_probability(const Deployment& d, std::size_t k, double threshold_db, std::int64_t trials,
                                      std::uint64_t seed, RunOptions options = {});

// result[ki][ti] for k_values[ki], thresholds_db[ti]; one set of trials shared
// by every (k, threshold) cell.
std::vector<std::vector<MetricEstimate>> k_coverage_curves(const Deployment& d, std::span<const std::size_t> k_values,
                                                           std::span<const double> thresholds_db,
                                                           std::int64_t trials, std::uint64_t seed,
                                                           RunOptions options = {});

// Fraction of trials with at least one platform in the common LoS region of the
// reference user and the base station.
MetricEstimate relay_availability(const Deployment& d, std::int64_t trials, std::uint64_t seed,
                                  RunOptions options = {});

// Fraction of `region` (uniform on the cap's sphere patch) lying in the common
// LoS region of a and b, by Monte-Carlo integration.
double common_los_fraction(const GeoPoint& a, const GeoPoint& b, const SphericalCap& region, std::int64_t samples,
                           std::uint64_t seed);

double analytic_bpp_availability(double p_single, std::size_t n);

double link_capacity_bps(double snr_linear, double bandwidth_hz);
double path_capacity(std::span<const double> hop_capacities);
double energy_efficiency(double capacity_bps, double tx_power_w);
double dbw_to_watts(double dbw);
double propagation_latency(std::span<const GeoPoint> path);

double orbital_period_s(double orbit_radius_km);
double pass_duration(double orbit_radius_km, double user_radius_km, double plane_offset);

struct LapDutyCycle {
  double serving_s = 0.0;
  double backhaul_s = 0.0;
  double charging_s = 0.0;
};
double lap_availability(const LapDutyCycle& d);

// Serving-link outcome of one trial, used for capacity / efficiency CDFs.
struct ServingSample {
  std::optional<Tier> tier;  // empty: no platform visible
  double capacity_bps = 0.0;
  double efficiency_bpj = 0.0;
};

ServingSample sample_serving(const Deployment& d, std::uint64_t seed, std::uint64_t trial);

}  // namespace ntnsim
