#include "udn/validate.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <ostream>
#include <sstream>

#include "udn/random.hpp"

namespace udn {

namespace {

constexpr std::size_t kMaxMessages = 20;

std::string describe(std::string_view what, std::size_t bs) {
  std::ostringstream os;
  os << what << " (bs " << bs << ")";
  return os.str();
}

bool nodes_shared(const BackhaulLink& a, const BackhaulLink& b) {
  std::vector<std::size_t> na{a.tx}, nb{b.tx};
  if (a.rx.is_bs()) na.push_back(a.rx.index);
  if (b.rx.is_bs()) nb.push_back(b.rx.index);
  for (const auto x : na) {
    for (const auto y : nb) {
      if (x == y) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> check_routes(const NetworkTopology& topology, const RouteTable& routes) {
  std::vector<std::string> bad;
  const auto& pos = topology.bs_positions;
  const auto& gws = topology.gateway_positions;
  const double r = topology.small_cell_radius;
  if (routes.entries.size() != pos.size()) {
    bad.emplace_back("route table size differs from BS count");
    return bad;
  }

  std::size_t connected = 0;
  double hop_sum = 0.0;
  for (std::size_t bs = 0; bs < pos.size(); ++bs) {
    const auto& entry = routes.entries[bs];

    std::size_t nearest = 0;
    for (std::size_t g = 1; g < gws.size(); ++g) {
      if (distance(pos[bs], gws[g]) < distance(pos[bs], gws[nearest])) nearest = g;
    }
    if (entry.assigned_gateway != nearest) bad.push_back(describe("not assigned to nearest gateway", bs));

    if (!entry.connected()) continue;
    ++connected;
    hop_sum += static_cast<double>(*entry.hop_count);

    std::vector<bool> visited(pos.size(), false);
    std::size_t cur = bs;
    std::size_t hops = 0;
    for (;;) {
      if (visited[cur]) {
        bad.push_back(describe("route revisits a BS", bs));
        break;
      }
      visited[cur] = true;
      ++hops;
      const auto& here = routes.entries[cur];
      const Point2D& gw = gws[here.assigned_gateway];
      if (std::holds_alternative<DirectToGateway>(here.next_hop)) {
        if (distance(pos[cur], gw) > r) bad.push_back(describe("final hop longer than r", bs));
        if (here.assigned_gateway != *entry.terminal_gateway) {
          bad.push_back(describe("terminal gateway mismatch", bs));
        }
        break;
      }
      const auto* relay = std::get_if<RelayVia>(&here.next_hop);
      if (!relay) {
        bad.push_back(describe("connected route reaches a disconnected BS", bs));
        break;
      }
      if (distance(pos[cur], pos[relay->bs]) > r) bad.push_back(describe("relay hop longer than r", bs));
      if (!(distance(pos[relay->bs], gw) < distance(pos[cur], gw))) {
        bad.push_back(describe("relay hop does not approach the gateway", bs));
      }
      cur = relay->bs;
    }
    if (hops != *entry.hop_count) bad.push_back(describe("hop_count differs from route length", bs));
    const double lower = std::ceil(distance(pos[bs], gws[entry.assigned_gateway]) / r - 1e-12);
    if (static_cast<double>(*entry.hop_count) < lower) {
      bad.push_back(describe("hop_count below ceil(distance / r)", bs));
    }
  }

  if (connected != routes.connected_count) bad.emplace_back("connected_count mismatch");
  if (connected == 0) {
    if (routes.mean_hops) bad.emplace_back("mean hop count set with nothing connected");
  } else if (!routes.mean_hops ||
             std::abs(*routes.mean_hops - hop_sum / static_cast<double>(connected)) > 1e-12 * hop_sum) {
    bad.emplace_back("mean hop count is not the average of hop counts");
  }
  return bad;
}

std::vector<std::string> check_schedule(const NetworkTopology& topology, const RouteTable& routes,
                                        const ScheduleTrace& trace) {
  std::vector<std::string> bad;
  const auto& pos = topology.bs_positions;
  const double exclusion = (1.0 + topology.exclusion_factor) * topology.small_cell_radius;

  for (std::size_t s = 0; s < trace.slots.size(); ++s) {
    const auto& slot = trace.slots[s];
    if (slot.empty()) bad.push_back("empty slot " + std::to_string(s));
    for (std::size_t i = 0; i < slot.size(); ++i) {
      for (std::size_t j = i + 1; j < slot.size(); ++j) {
        if (distance(pos[slot[i].tx], pos[slot[j].tx]) <= exclusion) {
          bad.push_back("slot " + std::to_string(s) + ": transmitters within (1+delta)r");
        }
        if (nodes_shared(slot[i], slot[j])) {
          bad.push_back("slot " + std::to_string(s) + ": links share a BS");
        }
      }
    }
  }

  // Replay every flow's route against the trace.
  std::vector<std::vector<std::pair<std::size_t, const BackhaulLink*>>> seen(pos.size());
  std::size_t activations = 0;
  for (std::size_t s = 0; s < trace.slots.size(); ++s) {
    for (const auto& link : trace.slots[s]) {
      ++activations;
      if (link.owner_flow >= pos.size()) {
        bad.emplace_back("link with unknown owner");
        continue;
      }
      seen[link.owner_flow].push_back({s, &link});
    }
  }
  std::size_t expected = 0;
  for (std::size_t bs = 0; bs < pos.size(); ++bs) {
    const auto path = routes.path(bs);
    const auto& got = seen[bs];
    if (path.empty()) {
      if (!got.empty()) bad.push_back(describe("disconnected BS was scheduled", bs));
      continue;
    }
    expected += path.size();
    if (got.size() != path.size()) {
      bad.push_back(describe("flow not scheduled exactly once per hop", bs));
      continue;
    }
    for (std::size_t h = 0; h < path.size(); ++h) {
      const auto& link = *got[h].second;
      const bool last = h + 1 == path.size();
      const bool rx_ok = last ? (!link.rx.is_bs() &&
                                 link.rx.index == *routes.entries[bs].terminal_gateway)
                              : (link.rx.is_bs() && link.rx.index == path[h + 1]);
      if (link.tx != path[h] || !rx_ok) bad.push_back(describe("scheduled hop off the route", bs));
      if (h > 0 && got[h].first <= got[h - 1].first) {
        bad.push_back(describe("hop scheduled before its predecessor finished", bs));
      }
    }
  }
  if (activations != trace.total_activations) bad.emplace_back("total_activations miscounted");
  if (activations != expected) bad.emplace_back("activations differ from sum of hop counts");
  if (!trace.slots.empty()) {
    const double y = trace.mean_simultaneous();
    if (y < 1.0 || y > static_cast<double>(routes.connected_count)) {
      bad.emplace_back("Y outside [1, connected_count]");
    }
  }
  return bad;
}

std::optional<std::size_t> min_hops_bfs(const NetworkTopology& topology, std::size_t bs) {
  const auto& pos = topology.bs_positions;
  const double r = topology.small_cell_radius;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> depth(pos.size(), kUnseen);
  std::deque<std::size_t> queue{bs};
  depth[bs] = 0;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (const auto& gw : topology.gateway_positions) {
      if (distance(pos[cur], gw) <= r) return depth[cur] + 1;
    }
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (depth[j] == kUnseen && distance(pos[cur], pos[j]) <= r) {
        depth[j] = depth[cur] + 1;
        queue.push_back(j);
      }
    }
  }
  return std::nullopt;
}

namespace {

struct InstanceResult {
  bool degenerate = false;
  bool oracle_compared = false;
  bool greedy_above = false;
  bool chain = false;
  std::vector<std::string> violations;
};

InstanceResult validate_instance(const ValidationOptions& opt, double r, std::size_t seed_index) {
  InstanceResult res;
  Rng rng(mix_seed(opt.base_seed, static_cast<std::uint64_t>(std::llround(r * 1000.0)), seed_index, 0));
  const std::size_t n = 1 + static_cast<std::size_t>(rng.next_u64() % opt.max_n);

  MacrocellRegion region{opt.region_radii * r, {0.0, 0.0}};
  NetworkTopology topo;
  topo.bs_positions = sample_bs_positions(n, region, {}, rng);
  topo.gateway_positions = place_gateways({}, region);
  topo.small_cell_radius = r;
  topo.exclusion_factor = opt.delta;

  const auto tag = [&](const std::string& msg) {
    std::ostringstream os;
    os << "r=" << r << " seed=" << seed_index << ": " << msg;
    return os.str();
  };

  const auto routes = build_routes(topo);
  for (auto& v : check_routes(topo, routes)) res.violations.push_back(tag(v));
  for (std::size_t bs = 0; bs < n; ++bs) {
    const auto& e = routes.entries[bs];
    if (!e.connected()) continue;
    const auto best = min_hops_bfs(topo, bs);
    if (!best || *e.hop_count < *best) res.violations.push_back(tag(describe("greedy route beats BFS", bs)));
  }
  if (routes.connected_count == 0) {
    res.degenerate = true;
    return res;
  }

  const auto trace = run_schedule(routes, topo, opt.conflict);
  for (auto& v : check_schedule(topo, routes, trace)) res.violations.push_back(tag(v));
  if (trace.total_activations <= opt.oracle_limit) {
    const auto optimum = optimal_schedule_oracle(routes, topo);
    res.oracle_compared = true;
    if (trace.slot_count() < optimum) res.violations.push_back(tag("greedy beat the exhaustive optimum"));
    res.greedy_above = trace.slot_count() > optimum;
    if (routes.connected_count == 1) {
      res.chain = true;
      if (trace.slot_count() != optimum) res.violations.push_back(tag("single chain not scheduled optimally"));
    }
  }
  return res;
}

}  // namespace

ValidationReport run_validation(const ValidationOptions& options) {
  const std::size_t per_r = options.seeds;
  const auto total = static_cast<std::int64_t>(per_r * options.r_values.size());
  std::vector<InstanceResult> results(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t task = 0; task < total; ++task) {
    const auto t = static_cast<std::size_t>(task);
    results[t] = validate_instance(options, options.r_values[t / per_r], t % per_r);
  }

  ValidationReport report;
  for (auto& res : results) {
    ++report.instances;
    report.degenerate += res.degenerate;
    report.oracle_compared += res.oracle_compared;
    report.greedy_above_oracle += res.greedy_above;
    report.chain_instances += res.chain;
    report.violation_count += res.violations.size();
    for (auto& v : res.violations) {
      if (report.violations.size() < kMaxMessages) report.violations.push_back(std::move(v));
    }
  }
  return report;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  out << "instances:            " << report.instances << '\n'
      << "degenerate:           " << report.degenerate << '\n'
      << "oracle comparisons:   " << report.oracle_compared << '\n'
      << "greedy above optimum: " << report.greedy_above_oracle << " (informational)\n"
      << "single-chain checks:  " << report.chain_instances << '\n'
      << "violations:           " << report.violation_count << '\n';
  for (const auto& v : report.violations) out << "  " << v << '\n';
  out << (report.passed() ? "all checks passed" : "VALIDATION FAILED") << '\n';
}

}  // namespace udn
