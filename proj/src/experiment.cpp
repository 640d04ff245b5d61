#include "udn/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "udn/random.hpp"

namespace udn {

std::vector<std::size_t> ExperimentConfig::default_n_values() {
  std::vector<std::size_t> values;
  for (std::size_t n = 5; n <= 100; n += 5) values.push_back(n);
  return values;
}

PlacementPolicy ExperimentConfig::placement_for(double r) const {
  return {placement, min_separation.value_or(2.0 * r), max_rejections};
}

void validate_config(const ExperimentConfig& config) {
  if (!(config.region.circumradius > 0.0)) throw std::invalid_argument("macro_radius must be > 0");
  if (config.r_values.empty()) throw std::invalid_argument("r_values must not be empty");
  if (config.n_values.empty()) throw std::invalid_argument("n_values must not be empty");
  for (const double r : config.r_values) {
    if (!(r > 0.0)) throw std::invalid_argument("r_values entries must be > 0");
  }
  if (!(config.delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  if (!(config.link_rate > 0.0)) throw std::invalid_argument("link_rate must be > 0");
  if (config.trials_per_point < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.min_separation && !(*config.min_separation >= 0.0)) {
    throw std::invalid_argument("min_separation must be >= 0");
  }
  validate_energy_params(config.energy);
  place_gateways(config.gateways, config.region);
}

std::uint64_t trial_seed(std::uint64_t base_seed, double r, std::size_t n, std::size_t trial_index) {
  const auto r_mm = static_cast<std::uint64_t>(std::llround(r * 1000.0));
  return mix_seed(base_seed, r_mm, n, trial_index);
}

TrialRun run_trial_detailed(const ExperimentConfig& config, double r, std::size_t n,
                            std::size_t trial_index) {
  TrialRun run;
  run.seed = trial_seed(config.base_seed, r, n, trial_index);
  Rng rng(run.seed);

  auto& topo = run.topology;
  topo.bs_positions = sample_bs_positions(n, config.region, config.placement_for(r), rng);
  topo.gateway_positions = place_gateways(config.gateways, config.region);
  topo.small_cell_radius = r;
  topo.exclusion_factor = config.delta;
  topo.link_rate = config.link_rate;

  run.routes = build_routes(topo);
  run.metrics.n = n;
  if (run.routes.connected_count == 0) return run;

  run.trace = run_schedule(run.routes, topo);
  run.metrics = compute_metrics(n, run.routes.connected_count, run.trace->slot_count(),
                                run.trace->mean_simultaneous(), run.routes.mean_hops,
                                config.link_rate, config.energy);
  return run;
}

TrialMetrics run_trial(const ExperimentConfig& config, double r, std::size_t n,
                       std::size_t trial_index) {
  return run_trial_detailed(config, r, n, trial_index).metrics;
}

Estimate estimate(const std::vector<double>& values) {
  Estimate e;
  if (values.empty()) return e;
  const auto m = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  e.mean = sum / m;
  if (values.size() < 2) return e;
  double sq = 0.0;
  for (const double v : values) sq += (v - e.mean) * (v - e.mean);
  e.ci95 = 1.96 * std::sqrt(sq / (m - 1.0)) / std::sqrt(m);
  return e;
}

SweepRecord aggregate(double r, std::size_t n, const std::vector<TrialMetrics>& trials) {
  SweepRecord rec;
  rec.r = r;
  rec.n = n;
  rec.trials = trials.size();

  std::vector<double> y, k, frac, cap, th, ee, ee_bits;
  for (const auto& t : trials) {
    frac.push_back(t.connected_fraction());
    if (t.connected_count == 0) {
      ++rec.degenerate_trials;
      continue;
    }
    y.push_back(t.y_n);
    k.push_back(t.k_n);
    cap.push_back(t.capacity);
    th.push_back(t.th_avg);
    ee.push_back(t.energy_efficiency);
    ee_bits.push_back(t.ee_bits_per_joule);
  }
  rec.y_n = estimate(y);
  rec.k_n = estimate(k);
  rec.connected_fraction = estimate(frac);
  rec.capacity = estimate(cap);
  rec.th_avg = estimate(th);
  rec.energy_efficiency = estimate(ee);
  rec.ee_bits_per_joule = estimate(ee_bits);
  return rec;
}

namespace {

struct GridPoint {
  double r;
  std::size_t n;
};

std::vector<GridPoint> grid(const ExperimentConfig& config) {
  std::vector<double> rs = config.r_values;
  std::vector<std::size_t> ns = config.n_values;
  std::sort(rs.begin(), rs.end());
  std::sort(ns.begin(), ns.end());
  std::vector<GridPoint> points;
  for (const double r : rs) {
    for (const std::size_t n : ns) points.push_back({r, n});
  }
  return points;
}

std::vector<SweepRecord> collect(const std::vector<GridPoint>& points, std::size_t trials,
                                 const std::vector<TrialMetrics>& flat) {
  std::vector<SweepRecord> records;
  records.reserve(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(p * trials);
    records.push_back(aggregate(points[p].r, points[p].n,
                                std::vector<TrialMetrics>(first, first + static_cast<std::ptrdiff_t>(trials))));
  }
  return records;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
  validate_config(config);
  const auto points = grid(config);
  const std::size_t trials = config.trials_per_point;
  const auto total = static_cast<std::int64_t>(points.size() * trials);
  std::vector<TrialMetrics> flat(points.size() * trials);

  // Each task owns its output slot and its own random stream.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t task = 0; task < total; ++task) {
    const auto t = static_cast<std::size_t>(task);
    const auto& point = points[t / trials];
    flat[t] = run_trial(config, point.r, point.n, t % trials);
  }
  return collect(points, trials, flat);
}

std::vector<SweepRecord> run_sweep_serial(const ExperimentConfig& config) {
  validate_config(config);
  const auto points = grid(config);
  const std::size_t trials = config.trials_per_point;
  std::vector<TrialMetrics> flat;
  flat.reserve(points.size() * trials);
  for (const auto& point : points) {
    for (std::size_t i = 0; i < trials; ++i) flat.push_back(run_trial(config, point.r, point.n, i));
  }
  return collect(points, trials, flat);
}

FigureId parse_figure_id(std::string_view name) {
  if (name == "fig3a") return FigureId::kFig3a;
  if (name == "fig3b") return FigureId::kFig3b;
  if (name == "fig4a") return FigureId::kFig4a;
  if (name == "fig4b") return FigureId::kFig4b;
  throw std::invalid_argument("unknown figure id '" + std::string(name) + "'");
}

std::string_view figure_name(FigureId id) {
  switch (id) {
    case FigureId::kFig3a: return "fig3a";
    case FigureId::kFig3b: return "fig3b";
    case FigureId::kFig4a: return "fig4a";
    case FigureId::kFig4b: return "fig4b";
  }
  return "unknown";
}

std::vector<FigureRow> reproduce_figure(FigureId id, const std::vector<SweepRecord>& records) {
  std::vector<FigureRow> rows;
  for (const auto& rec : records) {
    if (rec.included_trials() == 0) continue;
    FigureRow row{rec.r, 0.0, 0.0, 0.0};
    switch (id) {
      case FigureId::kFig3a:
        row.x = static_cast<double>(rec.n);
        row.y = rec.capacity.mean;
        row.y_ci = rec.capacity.ci95;
        break;
      case FigureId::kFig3b:
        row.x = rec.y_n.mean;
        row.y = rec.capacity.mean;
        row.y_ci = rec.capacity.ci95;
        break;
      case FigureId::kFig4a:
        row.x = static_cast<double>(rec.n);
        row.y = rec.energy_efficiency.mean;
        row.y_ci = rec.energy_efficiency.ci95;
        break;
      case FigureId::kFig4b:
        row.x = rec.th_avg.mean;
        row.y = rec.energy_efficiency.mean;
        row.y_ci = rec.energy_efficiency.ci95;
        break;
    }
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const FigureRow& a, const FigureRow& b) {
    if (a.series_r != b.series_r) return a.series_r < b.series_r;
    return a.x < b.x;
  });
  return rows;
}

std::vector<FigureRow> reproduce_figure(FigureId id, const ExperimentConfig& config) {
  return reproduce_figure(id, run_sweep(config));
}

}  // namespace udn
