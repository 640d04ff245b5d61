#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "udn/errors.hpp"
#include "udn/routing.hpp"

namespace udn {

/// Endpoint of a backhaul link: a small cell BS or a gateway.
struct NodeRef {
  enum class Kind : unsigned char { kBs, kGateway };
  Kind kind = Kind::kBs;
  std::size_t index = 0;

  static NodeRef bs(std::size_t i) { return {Kind::kBs, i}; }
  static NodeRef gateway(std::size_t i) { return {Kind::kGateway, i}; }
  bool is_bs() const { return kind == Kind::kBs; }

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct BackhaulLink {
  std::size_t tx = 0;  // transmitting BS
  NodeRef rx;
  std::size_t owner_flow = 0;  // originating BS
  std::size_t remaining_hops_of_flow = 0;  // including this one

  friend bool operator==(const BackhaulLink&, const BackhaulLink&) = default;
};

struct ScheduleTrace {
  std::vector<std::vector<BackhaulLink>> slots;
  std::size_t total_activations = 0;

  std::size_t slot_count() const { return slots.size(); }
  /// Average number of simultaneous transmissions per slot.
  double mean_simultaneous() const {
    return slots.empty() ? 0.0
                         : static_cast<double>(total_activations) / static_cast<double>(slots.size());
  }
};

/// True when two links may not share a slot: transmitters within
/// (1+delta)r of each other (inclusive), or a BS appearing in both links.
/// Gateways are receive-only and may terminate several links per slot.
bool links_conflict(const BackhaulLink& a, const BackhaulLink& b, const NetworkTopology& topology);

using ConflictPredicate =
    std::function<bool(const BackhaulLink&, const BackhaulLink&, const NetworkTopology&)>;

/// Hop sequence of every connected flow, ordered by originating BS.
std::vector<std::vector<BackhaulLink>> flow_links(const RouteTable& routes);

/// Greedy slot-by-slot delivery of one packet per connected BS. Each slot the
/// eligible hops are ranked by remaining hops (descending) then owner
/// (ascending) and admitted when conflict-free with everything admitted so far.
ScheduleTrace run_schedule(const RouteTable& routes, const NetworkTopology& topology,
                           const ConflictPredicate& conflict = links_conflict);

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxActivations = 20;

/// Minimum slot count over all precedence-respecting, conflict-free
/// schedules, by breadth-first search over flow progress vectors.
std::size_t optimal_schedule_oracle(const RouteTable& routes, const NetworkTopology& topology);

/// One JSON object per slot: {"slot":i,"links":[[tx,"bs:j"|"gw:j",owner],...]}.
void write_trace(std::ostream& out, const ScheduleTrace& trace);

}  // namespace udn
