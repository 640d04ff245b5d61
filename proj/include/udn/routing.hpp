#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "udn/geometry.hpp"

namespace udn {

struct NetworkTopology {
  std::vector<Point2D> bs_positions;
  std::vector<Point2D> gateway_positions;
  double small_cell_radius = 100.0;  // r, meters
  double exclusion_factor = 0.5;     // delta
  double link_rate = 1e9;            // W, bits/second

  std::size_t bs_count() const { return bs_positions.size(); }
  /// Transmitters closer than or at this distance may not be active together.
  double exclusion_distance() const { return (1.0 + exclusion_factor) * small_cell_radius; }
};

/// Throws std::invalid_argument when r, delta, W or the gateway list are out of range.
void validate_topology(const NetworkTopology& topology);

struct DirectToGateway {
  friend bool operator==(DirectToGateway, DirectToGateway) = default;
};
struct Disconnected {
  friend bool operator==(Disconnected, Disconnected) = default;
};
struct RelayVia {
  std::size_t bs = 0;
  friend bool operator==(RelayVia, RelayVia) = default;
};

using NextHop = std::variant<RelayVia, DirectToGateway, Disconnected>;

struct RouteEntry {
  std::size_t assigned_gateway = 0;
  NextHop next_hop = Disconnected{};
  /// Transmissions to reach a gateway, including the final hop. Empty when disconnected.
  std::optional<std::size_t> hop_count;
  /// Gateway the forwarding chain ends at; may differ from `assigned_gateway`
  /// when a relay belongs to another gateway's area.
  std::optional<std::size_t> terminal_gateway;

  bool connected() const { return hop_count.has_value(); }
};

struct RouteTable {
  std::vector<RouteEntry> entries;
  std::size_t connected_count = 0;
  /// Mean hop count over connected BSs; empty when nothing is connected.
  std::optional<double> mean_hops;

  /// BS indices visited by the flow originating at `bs`, origin first.
  /// Empty when `bs` is disconnected.
  std::vector<std::size_t> path(std::size_t bs) const;
};

/// Nearest gateway by Euclidean distance, lowest index on ties.
std::size_t assign_gateway(const Point2D& bs, const std::vector<Point2D>& gateways);

/// Forwarding decision for one BS toward `gateway`: direct when within r,
/// otherwise the neighbor within r that is strictly closer to the gateway and
/// closest to it among those (lowest index on ties).
NextHop next_hop(std::size_t bs, const NetworkTopology& topology, const Point2D& gateway);

RouteTable build_routes(const NetworkTopology& topology);

}  // namespace udn
