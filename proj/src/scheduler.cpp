#include "udn/scheduler.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <unordered_set>

namespace udn {

bool links_conflict(const BackhaulLink& a, const BackhaulLink& b, const NetworkTopology& topology) {
  if (a.tx == b.tx) return true;
  if (a.rx.is_bs() && (a.rx.index == b.tx || (b.rx.is_bs() && a.rx.index == b.rx.index))) {
    return true;
  }
  if (b.rx.is_bs() && b.rx.index == a.tx) return true;
  const double sep = distance(topology.bs_positions[a.tx], topology.bs_positions[b.tx]);
  return sep <= topology.exclusion_distance();
}

std::vector<std::vector<BackhaulLink>> flow_links(const RouteTable& routes) {
  std::vector<std::vector<BackhaulLink>> flows;
  for (std::size_t bs = 0; bs < routes.entries.size(); ++bs) {
    const auto& entry = routes.entries[bs];
    if (!entry.connected()) continue;
    const auto nodes = routes.path(bs);
    std::vector<BackhaulLink> links;
    links.reserve(nodes.size());
    for (std::size_t h = 0; h < nodes.size(); ++h) {
      const NodeRef rx = h + 1 < nodes.size() ? NodeRef::bs(nodes[h + 1])
                                              : NodeRef::gateway(*entry.terminal_gateway);
      links.push_back({nodes[h], rx, bs, nodes.size() - h});
    }
    flows.push_back(std::move(links));
  }
  return flows;
}

ScheduleTrace run_schedule(const RouteTable& routes, const NetworkTopology& topology,
                           const ConflictPredicate& conflict) {
  if (routes.connected_count == 0) throw NoConnectedBs();
  const auto flows = flow_links(routes);

  ScheduleTrace trace;
  std::vector<std::size_t> progress(flows.size(), 0);
  std::size_t pending = 0;
  for (const auto& f : flows) pending += f.size();

  std::vector<std::size_t> eligible;
  while (pending > 0) {
    eligible.clear();
    for (std::size_t f = 0; f < flows.size(); ++f) {
      if (progress[f] < flows[f].size()) eligible.push_back(f);
    }
    std::stable_sort(eligible.begin(), eligible.end(), [&](std::size_t x, std::size_t y) {
      const auto& lx = flows[x][progress[x]];
      const auto& ly = flows[y][progress[y]];
      if (lx.remaining_hops_of_flow != ly.remaining_hops_of_flow) {
        return lx.remaining_hops_of_flow > ly.remaining_hops_of_flow;
      }
      return lx.owner_flow < ly.owner_flow;
    });

    std::vector<BackhaulLink> slot;
    std::vector<std::size_t> admitted_flows;
    for (const std::size_t f : eligible) {
      const auto& link = flows[f][progress[f]];
      const bool clash = std::any_of(slot.begin(), slot.end(), [&](const BackhaulLink& other) {
        return conflict(link, other, topology);
      });
      if (!clash) {
        slot.push_back(link);
        admitted_flows.push_back(f);
      }
    }
    if (slot.empty()) throw std::logic_error("scheduler made no progress");
    // Advance only after the slot closes so a flow moves at most one hop per slot.
    for (const std::size_t f : admitted_flows) ++progress[f];
    pending -= slot.size();
    trace.total_activations += slot.size();
    trace.slots.push_back(std::move(slot));
  }
  return trace;
}

namespace {

struct OracleSearch {
  const std::vector<std::vector<BackhaulLink>>& flows;
  const NetworkTopology& topology;
  std::vector<std::uint64_t> radix;  // place value of each flow's progress digit

  std::uint64_t encode(const std::vector<std::size_t>& progress) const {
    std::uint64_t code = 0;
    for (std::size_t f = 0; f < flows.size(); ++f) code += radix[f] * progress[f];
    return code;
  }

  /// Calls `emit` with every maximal conflict-free subset of `candidates`.
  /// Maximal subsets suffice: a state with more progress on some flow can
  /// replay any schedule of the lagging state with the finished hops removed.
  template <typename Emit>
  void maximal_sets(const std::vector<const BackhaulLink*>& candidates, Emit&& emit) const {
    std::vector<const BackhaulLink*> chosen;
    recurse(candidates, 0, chosen, emit);
  }

  template <typename Emit>
  void recurse(const std::vector<const BackhaulLink*>& cand, std::size_t i,
               std::vector<const BackhaulLink*>& chosen, Emit& emit) const {
    if (i == cand.size()) {
      for (const auto* c : cand) {
        if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
        if (compatible(*c, chosen)) return;  // not maximal
      }
      emit(chosen);
      return;
    }
    if (compatible(*cand[i], chosen)) {
      chosen.push_back(cand[i]);
      recurse(cand, i + 1, chosen, emit);
      chosen.pop_back();
      // A link with no rival is in every maximal set.
      const bool has_rival = std::any_of(cand.begin(), cand.end(), [&](const BackhaulLink* o) {
        return o != cand[i] && links_conflict(*o, *cand[i], topology);
      });
      if (!has_rival) return;
    }
    recurse(cand, i + 1, chosen, emit);
  }

  bool compatible(const BackhaulLink& link, const std::vector<const BackhaulLink*>& chosen) const {
    return std::none_of(chosen.begin(), chosen.end(),
                        [&](const BackhaulLink* o) { return links_conflict(link, *o, topology); });
  }
};

}  // namespace

std::size_t optimal_schedule_oracle(const RouteTable& routes, const NetworkTopology& topology) {
  if (routes.connected_count == 0) throw NoConnectedBs();
  const auto flows = flow_links(routes);
  std::size_t total = 0;
  for (const auto& f : flows) total += f.size();
  if (total > kOracleMaxActivations) {
    throw OracleTooLarge("oracle limited to " + std::to_string(kOracleMaxActivations) +
                         " activations, instance has " + std::to_string(total));
  }

  OracleSearch search{flows, topology, {}};
  std::uint64_t place = 1;
  for (const auto& f : flows) {
    search.radix.push_back(place);
    place *= f.size() + 1;
  }

  std::vector<std::size_t> flow_of_owner(routes.entries.size(), 0);
  for (std::size_t f = 0; f < flows.size(); ++f) flow_of_owner[flows[f].front().owner_flow] = f;

  std::vector<std::size_t> done(flows.size());
  for (std::size_t f = 0; f < flows.size(); ++f) done[f] = flows[f].size();
  const std::uint64_t goal = search.encode(done);

  std::vector<std::vector<std::size_t>> frontier{std::vector<std::size_t>(flows.size(), 0)};
  std::unordered_set<std::uint64_t> seen{search.encode(frontier.front())};
  for (std::size_t depth = 1;; ++depth) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& progress : frontier) {
      std::vector<const BackhaulLink*> candidates;
      for (std::size_t f = 0; f < flows.size(); ++f) {
        if (progress[f] < flows[f].size()) candidates.push_back(&flows[f][progress[f]]);
      }
      bool reached = false;
      search.maximal_sets(candidates, [&](const std::vector<const BackhaulLink*>& chosen) {
        auto advanced = progress;
        for (const auto* link : chosen) ++advanced[flow_of_owner[link->owner_flow]];
        const auto code = search.encode(advanced);
        if (code == goal) reached = true;
        if (seen.insert(code).second) next.push_back(std::move(advanced));
      });
      if (reached) return depth;
    }
    if (next.empty()) throw std::logic_error("oracle search exhausted without reaching goal");
    frontier = std::move(next);
  }
}

void write_trace(std::ostream& out, const ScheduleTrace& trace) {
  for (std::size_t s = 0; s < trace.slots.size(); ++s) {
    out << "{\"slot\":" << s << ",\"links\":[";
    bool first = true;
    for (const auto& link : trace.slots[s]) {
      if (!first) out << ',';
      first = false;
      out << '[' << link.tx << ",\"" << (link.rx.is_bs() ? "bs:" : "gw:") << link.rx.index
          << "\"," << link.owner_flow << ']';
    }
    out << "]}\n";
  }
}

}  // namespace udn
