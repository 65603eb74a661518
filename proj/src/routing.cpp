#include "ntnsim/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ntnsim/metrics.hpp"

namespace ntnsim {

double Path::capacity_bps() const { return path_capacity(hop_capacities_bps); }

double Path::energy_per_bit() const {
  double e = 0.0;
  for (std::size_t i = 0; i < hops(); ++i) e += hop_tx_power_w[i] / hop_capacities_bps[i];
  return e;
}

double Path::energy_efficiency() const {
  double power = 0.0;
  for (double p : hop_tx_power_w) power += p;
  return ntnsim::energy_efficiency(capacity_bps(), power);
}

double Path::latency_s() const {
  double km = 0.0;
  for (double d : hop_distances_km) km += d;
  return km / kSpeedOfLightKmS;
}

namespace {

struct Node {
  GeoPoint position;
  const RadioParams* radio;
  int id;
};

std::vector<Node> graph_nodes(const RouteRequest& req) {
  if (req.constellation == nullptr) throw std::invalid_argument("route request has no constellation");
  std::vector<Node> nodes;
  nodes.reserve(req.constellation->size() + 2);
  nodes.push_back({req.source, &req.ground_radio, kSourceNode});
  for (const Platform& p : *req.constellation) nodes.push_back({p.position, &at(req.radio, p.tier), p.id});
  nodes.push_back({req.destination, &req.ground_radio, kDestinationNode});
  return nodes;
}

double fading_free_capacity(const RadioParams& tx, double distance_km, const NoiseSpec& noise) {
  const double snr_lin = db_to_linear(mean_rx_power_dbw(tx, distance_km) - noise_power_dbw(noise, tx.bandwidth_hz));
  return link_capacity_bps(snr_lin, tx.bandwidth_hz);
}

Path make_path(const FeasibilityGraph& g, const std::vector<Node>& nodes, const std::vector<std::size_t>& prev) {
  std::vector<std::size_t> order;
  for (std::size_t v = g.destination(); v != g.source(); v = prev[v]) order.push_back(v);
  order.push_back(g.source());
  std::reverse(order.begin(), order.end());
  Path path;
  path.nodes.push_back(nodes[order.front()].id);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& edges = g.out[order[i - 1]];
    const auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.to == order[i]; });
    path.nodes.push_back(nodes[order[i]].id);
    path.hop_capacities_bps.push_back(it->capacity_bps);
    path.hop_distances_km.push_back(it->distance_km);
    path.hop_tx_power_w.push_back(it->tx_power_w);
  }
  return path;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

FeasibilityGraph build_feasibility_graph(const RouteRequest& req) {
  const auto nodes = graph_nodes(req);
  FeasibilityGraph g;
  g.out.resize(nodes.size());
  const std::size_t dst = nodes.size() - 1;
  for (std::size_t u = 0; u < dst; ++u) {
    for (std::size_t v = 1; v < nodes.size(); ++v) {
      if (u == v) continue;
      if (!is_visible(nodes[u].position, nodes[v].position)) continue;
      const double distance = std::max(slant_range(nodes[u].position, nodes[v].position), 1e-9);
      const double capacity = fading_free_capacity(*nodes[u].radio, distance, req.noise);
      if (capacity < req.min_capacity_bps) continue;
      g.out[u].push_back({v, capacity, distance, dbw_to_watts(nodes[u].radio->tx_power_dbw)});
    }
  }
  return g;
}

std::optional<Path> min_hop_path(const RouteRequest& req) {
  const auto nodes = graph_nodes(req);
  const FeasibilityGraph g = build_feasibility_graph(req);
  std::vector<std::size_t> prev(nodes.size(), kNone);
  std::deque<std::size_t> queue{g.source()};
  prev[g.source()] = g.source();
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == g.destination()) return make_path(g, nodes, prev);
    for (const auto& e : g.out[u]) {
      if (prev[e.to] != kNone) continue;
      prev[e.to] = u;
      queue.push_back(e.to);
    }
  }
  return std::nullopt;
}

std::optional<Path> max_ee_path(const RouteRequest& req) {
  const auto nodes = graph_nodes(req);
  const FeasibilityGraph g = build_feasibility_graph(req);
  std::vector<double> cost(nodes.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> prev(nodes.size(), kNone);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  cost[g.source()] = 0.0;
  prev[g.source()] = g.source();
  heap.push({0.0, g.source()});
  while (!heap.empty()) {
    const auto [c, u] = heap.top();
    heap.pop();
    if (c > cost[u]) continue;
    if (u == g.destination()) return make_path(g, nodes, prev);
    for (const auto& e : g.out[u]) {
      const double next = c + e.tx_power_w / e.capacity_bps;
      if (next < cost[e.to]) {
        cost[e.to] = next;
        prev[e.to] = u;
        heap.push({next, e.to});
      }
    }
  }
  return std::nullopt;
}

std::optional<int> select_relay(std::span<const int> candidate_ids, std::span<const double> uplink_capacity_bps,
                                std::span<const double> downlink_capacity_bps, double threshold_bps) {
  if (uplink_capacity_bps.size() != candidate_ids.size() || downlink_capacity_bps.size() != candidate_ids.size()) {
    throw std::invalid_argument("select_relay: per-candidate capacity lists must match the candidate list");
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidate_ids.size(); ++i) {
    if (!(uplink_capacity_bps[i] >= threshold_bps)) continue;
    if (!best || downlink_capacity_bps[i] > downlink_capacity_bps[*best] ||
        (downlink_capacity_bps[i] == downlink_capacity_bps[*best] && candidate_ids[i] < candidate_ids[*best])) {
      best = i;
    }
  }
  if (!best) return std::nullopt;
  return candidate_ids[*best];
}

}  // namespace ntnsim
