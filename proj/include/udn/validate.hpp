#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udn/routing.hpp"
#include "udn/scheduler.hpp"

namespace udn {

/// Routing invariants recomputed from raw positions: reach, strict progress
/// toward the transmitter's gateway, acyclicity, hop_count lower bound,
/// nearest-gateway assignment and the k(n) mean. Returns one message per violation.
std::vector<std::string> check_routes(const NetworkTopology& topology, const RouteTable& routes);

/// Schedule invariants: per-slot pairwise feasibility, precedence along
/// every flow, every hop scheduled exactly once, and 1 <= Y <= connected.
std::vector<std::string> check_schedule(const NetworkTopology& topology, const RouteTable& routes,
                                        const ScheduleTrace& trace);

/// Fewest hops from `bs` to any gateway over the unit-disk graph (edges of
/// length <= r). Empty when no gateway is reachable.
std::optional<std::size_t> min_hops_bfs(const NetworkTopology& topology, std::size_t bs);

struct ValidationOptions {
  std::size_t seeds = 100;
  std::size_t max_n = 10;
  std::vector<double> r_values{100.0, 150.0, 200.0};
  double delta = 0.5;
  /// Instances are drawn in a hexagon of this many radii so that small n
  /// still produces multi-hop routes.
  double region_radii = 2.5;
  std::size_t oracle_limit = 12;
  std::uint64_t base_seed = 7;
  ConflictPredicate conflict = links_conflict;  // scheduler under test
};

struct ValidationReport {
  std::size_t instances = 0;
  std::size_t degenerate = 0;
  std::size_t oracle_compared = 0;
  std::size_t greedy_above_oracle = 0;
  std::size_t chain_instances = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // first few messages

  bool passed() const { return violation_count == 0; }
};

ValidationReport run_validation(const ValidationOptions& options);

void print_report(std::ostream& out, const ValidationReport& report);

}  // namespace udn
