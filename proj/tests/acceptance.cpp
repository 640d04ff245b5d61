// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "udn/config.hpp"
#include "udn/experiment.hpp"
#include "udn/output.hpp"
#include "udn/validate.hpp"

using namespace udn;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s -- %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Rises to an interior maximum, falls after it, and the last three points
// agree pairwise to within 10%.
struct ShapeCheck {
  bool rises = false;
  bool declines = false;
  bool plateau = false;
  std::size_t peak = 0;
  double worst_tail_gap = 0.0;

  bool ok() const { return rises && declines && plateau; }
};

ShapeCheck unimodal_then_plateau(const std::vector<double>& y) {
  ShapeCheck s;
  const std::size_t n = y.size();
  if (n < 4) return s;
  s.peak = static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
  s.rises = s.peak > 0 && y[s.peak] > y.front();
  s.declines = s.peak + 1 < n && y.back() < y[s.peak];
  for (std::size_t i = n - 3; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(y[i] - y[j]) / std::max(std::abs(y[i]), std::abs(y[j]));
      s.worst_tail_gap = std::max(s.worst_tail_gap, gap);
    }
  }
  s.plateau = s.worst_tail_gap < 0.10;
  return s;
}

std::string describe(const ShapeCheck& s, const std::vector<double>& y, double scale) {
  std::ostringstream os;
  os << "peak at index " << s.peak << " (" << y[s.peak] / scale << "), first " << y.front() / scale
     << ", last " << y.back() / scale << ", tail gap " << 100.0 * s.worst_tail_gap << "%"
     << " [rises=" << s.rises << " declines=" << s.declines << " plateau=" << s.plateau << "]";
  return os.str();
}

std::vector<SweepRecord> series(const std::vector<SweepRecord>& recs, double r) {
  std::vector<SweepRecord> out;
  for (const auto& rec : recs) {
    if (rec.r == r) out.push_back(rec);
  }
  return out;
}

// Smallest x of the final flat stretch: walking down from the largest x,
// points stay within 10% of the value at the largest x.
double plateau_onset(std::vector<FigureRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const FigureRow& a, const FigureRow& b) { return a.x < b.x; });
  const double ref = rows.back().y;
  double onset = rows.back().x;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (std::abs(it->y - ref) > 0.10 * std::abs(ref)) break;
    onset = it->x;
  }
  return onset;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentConfig defaults;

  // Shared random trials for criteria 1-3: n in [1, 100], all three radii.
  std::size_t trials = 0, connected_trials = 0;
  std::size_t identity_bad = 0, route_bad = 0, schedule_bad = 0;
  double worst_identity = 0.0;
  std::string first_route_issue, first_schedule_issue;
  {
    Rng pick(20240601);
    for (std::size_t i = 0; i < 1000; ++i) {
      const double r = defaults.r_values[i % 3];
      const std::size_t n = 1 + static_cast<std::size_t>(pick.next_u64() % 100);
      const auto run = run_trial_detailed(defaults, r, n, i);
      ++trials;
      const auto route_issues = check_routes(run.topology, run.routes);
      route_bad += route_issues.size();
      if (!route_issues.empty() && first_route_issue.empty()) first_route_issue = route_issues.front();
      if (run.degenerate()) continue;
      ++connected_trials;

      const auto sched_issues = check_schedule(run.topology, run.routes, *run.trace);
      schedule_bad += sched_issues.size();
      if (!sched_issues.empty() && first_schedule_issue.empty()) first_schedule_issue = sched_issues.front();

      const double cap = backhaul_capacity(run.trace->mean_simultaneous(), defaults.link_rate,
                                           run.routes.mean_hops);
      const double direct = static_cast<double>(run.routes.connected_count) * defaults.link_rate /
                            static_cast<double>(run.trace->slot_count());
      const double rel = std::abs(cap - direct) / direct;
      worst_identity = std::max(worst_identity, rel);
      if (rel > 1e-9 || std::abs(run.metrics.capacity - direct) / direct > 1e-9) ++identity_bad;
    }
  }
  report(1, "capacity identity Y*W/k == connected*W/slots", identity_bad == 0,
         fmt("%zu non-degenerate trials, worst relative error %.3g (tol 1e-9)", connected_trials,
             worst_identity));
  report(2, "routing property suite", route_bad == 0,
         fmt("%zu trials, %zu violations%s%s", trials, route_bad, route_bad ? ": " : "",
             first_route_issue.c_str()));
  report(3, "scheduler feasibility suite", schedule_bad == 0,
         fmt("%zu scheduled trials, %zu violations%s%s", connected_trials, schedule_bad,
             schedule_bad ? ": " : "", first_schedule_issue.c_str()));

  // 4. Exhaustive-oracle comparisons on small instances plus straight chains.
  {
    ValidationOptions opt;
    opt.seeds = 100;
    opt.oracle_limit = 12;
    const auto v = run_validation(opt);

    std::size_t chain_bad = 0;
    for (std::size_t hops = 1; hops <= 10; ++hops) {
      NetworkTopology t;
      t.gateway_positions = {{0.0, 0.0}};
      t.small_cell_radius = 100.0;
      // BS 0 sits at 90*hops + 10 m with relays every 90 m toward the gateway;
      // only its flow is kept.
      for (std::size_t h = hops; h >= 1; --h) {
        t.bs_positions.push_back({90.0 * static_cast<double>(h) + 10.0, 0.0});
      }
      auto routes = build_routes(t);
      for (std::size_t b = 1; b < t.bs_positions.size(); ++b) routes.entries[b].hop_count.reset();
      routes.connected_count = 1;
      routes.mean_hops = static_cast<double>(*routes.entries[0].hop_count);
      const auto greedy = run_schedule(routes, t).slot_count();
      const auto best = optimal_schedule_oracle(routes, t);
      if (greedy != best || best != *routes.entries[0].hop_count) ++chain_bad;
    }
    const bool ok = v.passed() && v.oracle_compared >= 100 && chain_bad == 0;
    report(4, "oracle equivalence at small scale", ok,
           fmt("%zu oracle comparisons, greedy above optimum in %zu (allowed), %zu random single-flow "
               "chains + 10 built chains, %zu chain mismatches, %zu violations",
               v.oracle_compared, v.greedy_above_oracle, v.chain_instances, chain_bad,
               v.violation_count));
  }

  // Default sweep shared by criteria 5-7 and 9.
  const auto sweep_start = std::chrono::steady_clock::now();
  const auto records = run_sweep(defaults);
  const double sweep_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

  {
    std::vector<double> cap;
    for (const auto& rec : series(records, 100.0)) cap.push_back(rec.capacity.mean);
    const auto shape = unimodal_then_plateau(cap);
    report(5, "fig3a shape (r=100 m): rise, peak, decline, plateau", shape.ok(),
           describe(shape, cap, 1e9) + fmt(", Gbps; sweep %.1f s", sweep_seconds));
  }

  {
    const double targets[3] = {29.0, 25.0, 19.0};
    double ymax[3] = {0, 0, 0};
    std::string detail;
    for (int i = 0; i < 3; ++i) {
      for (const auto& rec : series(records, defaults.r_values[static_cast<std::size_t>(i)])) {
        if (rec.included_trials() > 0) ymax[i] = std::max(ymax[i], rec.y_n.mean);
      }
      const double gap = (ymax[i] - targets[i]) / targets[i];
      detail += fmt("r=%g: Ymax %.2f vs %.0f (%+.0f%%%s); ", defaults.r_values[static_cast<std::size_t>(i)],
                    ymax[i], targets[i], 100.0 * gap, std::abs(gap) <= 0.20 ? ", within 20%" : ", outside 20%");
    }
    const bool ordered = ymax[0] > ymax[1] && ymax[1] > ymax[2];
    report(6, "fig3b Ymax ordering 100 > 150 > 200 (targets soft)", ordered,
           detail + (ordered ? "ordering holds" : "ordering violated"));
  }

  {
    bool all_shapes = true;
    std::string detail;
    std::vector<double> onsets;
    const auto fig4b = reproduce_figure(FigureId::kFig4b, records);
    for (const double r : defaults.r_values) {
      std::vector<double> ee;
      for (const auto& rec : series(records, r)) ee.push_back(rec.energy_efficiency.mean);
      const auto shape = unimodal_then_plateau(ee);
      all_shapes = all_shapes && shape.ok();
      detail += fmt("r=%g: ", r) + describe(shape, ee, 1e-9) + "; ";

      std::vector<FigureRow> rows;
      for (const auto& row : fig4b) {
        if (row.series_r == r) rows.push_back(row);
      }
      onsets.push_back(plateau_onset(rows));
    }
    const bool ordered = onsets[0] > onsets[1] && onsets[1] > onsets[2];
    detail += fmt("fig4b plateau onsets %.3f / %.3f / %.3f Gbps (need 100 > 150 > 200)", onsets[0] / 1e9,
                  onsets[1] / 1e9, onsets[2] / 1e9);
    report(7, "fig4 shape per radius and fig4b plateau-onset ordering", all_shapes && ordered, detail);
  }

  {
    const EnergyParams p;
    const double op = operating_power(1.0, p);
    const double e = bs_energy(79.35, p);
    const bool ok = std::abs(op - 79.35) < 1e-12 && std::abs(e - 1.56506e10) / 1.56506e10 <= 1e-4;
    report(8, "energy golden values", ok,
           fmt("operating_power(1 W) = %.6f W, bs_energy(79.35 W, 5 y, 0.2) = %.6e J (target 1.56506e10 +- 0.01%%)",
               op, e));
  }

  {
    std::ostringstream first, second;
    emit_results(first, records, OutputFormat::kCsv, defaults);
    emit_results(second, run_sweep(defaults), OutputFormat::kCsv, defaults);
    report(9, "sweep determinism (byte-identical CSV)", first.str() == second.str(),
           fmt("%zu bytes per run", first.str().size()));
  }

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d criteria failed; total %.1f s\n", failures, total);
  return failures == 0 ? 0 : 1;
}
