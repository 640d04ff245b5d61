#include "udn/routing.hpp"

#include <limits>
#include <stdexcept>

namespace udn {

void validate_topology(const NetworkTopology& topology) {
  if (!(topology.small_cell_radius > 0.0)) {
    throw std::invalid_argument("small cell radius must be > 0");
  }
  if (!(topology.exclusion_factor >= 0.0)) {
    throw std::invalid_argument("exclusion factor must be >= 0");
  }
  if (!(topology.link_rate > 0.0)) throw std::invalid_argument("link rate must be > 0");
  if (topology.gateway_positions.empty()) {
    throw std::invalid_argument("topology needs at least one gateway");
  }
}

std::size_t assign_gateway(const Point2D& bs, const std::vector<Point2D>& gateways) {
  if (gateways.empty()) throw std::invalid_argument("gateway list is empty");
  std::size_t best = 0;
  double best_dist = distance(bs, gateways[0]);
  for (std::size_t g = 1; g < gateways.size(); ++g) {
    const double d = distance(bs, gateways[g]);
    if (d < best_dist) {
      best = g;
      best_dist = d;
    }
  }
  return best;
}

NextHop next_hop(std::size_t bs, const NetworkTopology& topology, const Point2D& gateway) {
  const auto& pos = topology.bs_positions;
  const double r = topology.small_cell_radius;
  const double own = distance(pos.at(bs), gateway);
  if (own <= r) return DirectToGateway{};

  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (j == bs || distance(pos[bs], pos[j]) > r) continue;
    const double d = distance(pos[j], gateway);
    if (d < own && d < best_dist) {
      best = j;
      best_dist = d;
    }
  }
  if (!best) return Disconnected{};
  return RelayVia{*best};
}

namespace {

enum class Visit : unsigned char { kNew, kActive, kDone };

}  // namespace

RouteTable build_routes(const NetworkTopology& topology) {
  validate_topology(topology);
  const std::size_t n = topology.bs_count();
  RouteTable table;
  table.entries.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    auto& e = table.entries[i];
    e.assigned_gateway = assign_gateway(topology.bs_positions[i], topology.gateway_positions);
    e.next_hop = next_hop(i, topology, topology.gateway_positions[e.assigned_gateway]);
  }

  // Resolve hop counts along the forwarding chains. Each relay is strictly
  // closer to its transmitter's gateway than the transmitter, so chains are
  // acyclic; the kActive state only guards that.
  std::vector<Visit> state(n, Visit::kNew);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] == Visit::kDone) continue;
    stack.clear();
    std::size_t cur = start;
    while (state[cur] == Visit::kNew) {
      state[cur] = Visit::kActive;
      stack.push_back(cur);
      const auto* relay = std::get_if<RelayVia>(&table.entries[cur].next_hop);
      if (!relay) break;
      cur = relay->bs;
    }
    if (state[cur] == Visit::kActive && std::holds_alternative<RelayVia>(table.entries[cur].next_hop)) {
      throw std::logic_error("routing cycle detected");
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      auto& e = table.entries[*it];
      if (std::holds_alternative<DirectToGateway>(e.next_hop)) {
        e.hop_count = 1;
        e.terminal_gateway = e.assigned_gateway;
      } else if (const auto* relay = std::get_if<RelayVia>(&e.next_hop)) {
        const auto& down = table.entries[relay->bs];
        if (down.hop_count) {
          e.hop_count = *down.hop_count + 1;
          e.terminal_gateway = down.terminal_gateway;
        }
      }
      state[*it] = Visit::kDone;
    }
  }

  std::size_t hop_sum = 0;
  for (const auto& e : table.entries) {
    if (e.hop_count) {
      ++table.connected_count;
      hop_sum += *e.hop_count;
    }
  }
  if (table.connected_count > 0) {
    table.mean_hops = static_cast<double>(hop_sum) / static_cast<double>(table.connected_count);
  }
  return table;
}

std::vector<std::size_t> RouteTable::path(std::size_t bs) const {
  std::vector<std::size_t> nodes;
  if (!entries.at(bs).connected()) return nodes;
  std::size_t cur = bs;
  for (;;) {
    nodes.push_back(cur);
    const auto* relay = std::get_if<RelayVia>(&entries[cur].next_hop);
    if (!relay) break;
    cur = relay->bs;
  }
  return nodes;
}

}  // namespace udn
