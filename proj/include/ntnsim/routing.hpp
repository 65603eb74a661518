#pragma once

// Relay selection and multi-hop path construction over the visibility and
// capacity feasibility graph of a constellation.

#include <optional>
#include <span>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/geom.hpp"
#include "ntnsim/pointproc.hpp"

namespace ntnsim {

inline constexpr int kSourceNode = -1;
inline constexpr int kDestinationNode = -2;

struct Path {
  std::vector<int> nodes;  // source, relay platform ids..., destination
  std::vector<double> hop_capacities_bps;
  std::vector<double> hop_distances_km;
  std::vector<double> hop_tx_power_w;

  std::size_t hops() const { return hop_capacities_bps.size(); }
  double capacity_bps() const;
  // Sum over hops of transmit power / hop capacity.
  double energy_per_bit() const;
  // Path capacity over the summed hop transmit powers.
  double energy_efficiency() const;
  double latency_s() const;
};

struct RouteRequest {
  GeoPoint source;
  GeoPoint destination;
  const Constellation* constellation = nullptr;
  TierTable<RadioParams> radio{};
  RadioParams ground_radio;  // used by the source on its first hop
  NoiseSpec noise;
  double min_capacity_bps = 0.0;
};

// Directed graph: node 0 is the source, 1..n the platforms in id order, n+1
// the destination. Edge u->v exists when u and v see each other and the
// fading-free capacity of u transmitting to v reaches the minimum.
struct FeasibilityGraph {
  struct Edge {
    std::size_t to;
    double capacity_bps;
    double distance_km;
    double tx_power_w;
  };
  std::vector<std::vector<Edge>> out;  // adjacency sorted by `to`

  std::size_t source() const { return 0; }
  std::size_t destination() const { return out.size() - 1; }
};

FeasibilityGraph build_feasibility_graph(const RouteRequest& req);

// Fewest hops (breadth-first, neighbors in id order).
std::optional<Path> min_hop_path(const RouteRequest& req);

// Least energy per bit (Dijkstra on transmit power / capacity).
std::optional<Path> max_ee_path(const RouteRequest& req);

// Among candidates whose uplink capacity reaches `threshold_bps`, the one with
// the largest downlink capacity; ties go to the lowest id.
std::optional<int> select_relay(std::span<const int> candidate_ids, std::span<const double> uplink_capacity_bps,
                                std::span<const double> downlink_capacity_bps, double threshold_bps);

}  // namespace ntnsim
