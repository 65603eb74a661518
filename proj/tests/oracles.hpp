#pragma once
// Independent reference implementations shared by the unit tests and the
// acceptance runner. Nothing here calls the code it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "ntnsim/geom.hpp"
#include "ntnsim/metrics.hpp"
#include "ntnsim/routing.hpp"

namespace oracle {

using namespace ntnsim;

inline Vec3 random_direction(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  return normalized({n(g), n(g), n(g)});
}

// |a + t(b - a)| is convex in t, so ternary search finds its minimum.
inline double min_distance_to_origin(Vec3 a, Vec3 b) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (norm(a + m1 * (b - a)) < norm(a + m2 * (b - a))) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return norm(a + 0.5 * (lo + hi) * (b - a));
}

inline double pick_radius(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (g() % 5) {
    case 0: return kEarthRadiusKm;
    case 1: return kEarthRadiusKm + 0.08;
    case 2: return kEarthRadiusKm + 20.0;
    case 3: return kEarthRadiusKm + 550.0;
    default: return kEarthRadiusKm + 2000.0 * u(g);
  }
}

// Kolmogorov-Smirnov statistic of `xs` against the continuous CDF `cdf`.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

// Critical value at alpha = 0.01 for large samples.
inline double ks_critical_001(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

inline double fano_factor(const std::vector<double>& counts) {
  double mean = 0.0;
  for (double c : counts) mean += c;
  mean /= static_cast<double>(counts.size());
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= static_cast<double>(counts.size() - 1);
  return var / mean;
}

struct Instance {
  RouteRequest req;
  Constellation platforms;
};

inline RadioParams make_radio(double power, double gain) {
  RadioParams r;
  r.tx_power_dbw = power;
  r.tx_gain_db = gain;
  return r;
}

inline Instance random_instance(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Instance in;
  const Vec3 site{0, 0, 1};
  // Half the instances are HAP-only over spans no single HAP can bridge,
  // which is where multi-hop chains appear.
  const bool chain = u(g) < 0.5;
  const double span_km = chain ? 1050.0 + 400.0 * u(g) : 200.0 + 2500.0 * u(g);
  const double spread_km = chain ? 150.0 : 600.0;
  in.req.source = GeoPoint(kEarthRadiusKm, site);
  in.req.destination = GeoPoint(kEarthRadiusKm, offset_direction(site, span_km / kEarthRadiusKm, 0.0));
  const auto n = static_cast<std::uint32_t>(chain ? 3 + g() % 6 : g() % 9);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Tier t = chain || u(g) < 0.5 ? Tier::hap : Tier::sat;
    const double alt = t == Tier::hap ? 20.0 : 550.0 + 600.0 * u(g);
    const double along = (span_km * (u(g) * 1.4 - 0.2)) / kEarthRadiusKm;
    const double across = (u(g) - 0.5) * spread_km / kEarthRadiusKm;
    const Vec3 dir = offset_direction(offset_direction(site, along, 0.0), across, kPi / 2.0);
    in.platforms.add(t, i, GeoPoint(kEarthRadiusKm + alt, dir));
  }
  in.req.constellation = &in.platforms;
  in.req.radio = {make_radio(1.0, 10.0), make_radio(8.0, 20.0), make_radio(15.0, 40.0)};
  in.req.ground_radio = make_radio(10.0, 30.0);
  const double mins[] = {0.0, 5e7, 1.5e8, 3e8};
  in.req.min_capacity_bps = mins[g() % 4];
  return in;
}

struct Node {
  GeoPoint pos;
  const RadioParams* radio;
};

// Independent hop model: Friis loss in meters, Shannon capacity, linear units.
inline bool hop(const Node& a, const Node& b, const RouteRequest& req, double& capacity, double& watts) {
  const Vec3 pa = a.pos.position(), pb = b.pos.position();
  // Blocked when the closest point of the segment dips below the surface.
  const Vec3 d = pb - pa;
  const double t = std::clamp(-dot(pa, d) / std::max(dot(d, d), 1e-300), 0.0, 1.0);
  if (norm(pa + t * d) < kBlockingRadiusKm) return false;
  const double meters = std::max(norm(d), 1e-9) * 1e3;
  const double loss_db = 20.0 * std::log10(4.0 * kPi * meters * a.radio->frequency_hz / kSpeedOfLight);
  const double rx_w = std::pow(10.0, (a.radio->tx_power_dbw + a.radio->tx_gain_db + a.radio->rx_gain_db - loss_db) / 10.0);
  const double noise_w = std::pow(10.0, (req.noise.psd_dbm_hz - 30.0) / 10.0) * a.radio->bandwidth_hz;
  capacity = a.radio->bandwidth_hz * std::log2(1.0 + rx_w / noise_w);
  watts = std::pow(10.0, a.radio->tx_power_dbw / 10.0);
  return capacity >= req.min_capacity_bps;
}

struct Best {
  std::size_t hops = std::numeric_limits<std::size_t>::max();
  double energy_per_bit = std::numeric_limits<double>::infinity();
};

inline void enumerate(const std::vector<Node>& nodes, const RouteRequest& req, std::size_t at, std::vector<bool>& used,
               std::size_t hops, double epb, Best& best) {
  const std::size_t dst = nodes.size() - 1;
  for (std::size_t next = 1; next < nodes.size(); ++next) {
    if (used[next]) continue;
    double c = 0.0, w = 0.0;
    if (!hop(nodes[at], nodes[next], req, c, w)) continue;
    if (next == dst) {
      best.hops = std::min(best.hops, hops + 1);
      best.energy_per_bit = std::min(best.energy_per_bit, epb + w / c);
      continue;
    }
    used[next] = true;
    enumerate(nodes, req, next, used, hops + 1, epb + w / c, best);
    used[next] = false;
  }
}

inline Best brute_force(const Instance& in) {
  std::vector<Node> nodes{{in.req.source, &in.req.ground_radio}};
  for (const Platform& p : in.platforms) nodes.push_back({p.position, &at(in.req.radio, p.tier)});
  nodes.push_back({in.req.destination, &in.req.ground_radio});
  std::vector<bool> used(nodes.size(), false);
  used[0] = true;
  Best best;
  enumerate(nodes, in.req, 0, used, 0, 0.0, best);
  return best;
}

}  // namespace oracle
