#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udn/geometry.hpp"
#include "udn/metrics.hpp"
#include "udn/routing.hpp"
#include "udn/scheduler.hpp"

namespace udn {

struct ExperimentConfig {
  MacrocellRegion region{};
  GatewayConfig gateways{};
  PlacementMode placement = PlacementMode::kUniform;
  /// Hardcore separation; empty means 2r for each swept radius.
  std::optional<double> min_separation;
  std::size_t max_rejections = 10000;
  std::vector<double> r_values{100.0, 150.0, 200.0};
  std::vector<std::size_t> n_values = default_n_values();
  double delta = 0.5;
  double link_rate = 1e9;
  EnergyParams energy{};
  std::size_t trials_per_point = 200;
  std::uint64_t base_seed = 1;

  static std::vector<std::size_t> default_n_values();
  PlacementPolicy placement_for(double r) const;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate_config(const ExperimentConfig& config);

/// Seed of one trial: mix_seed(base_seed, round(r * 1000), n, trial_index).
std::uint64_t trial_seed(std::uint64_t base_seed, double r, std::size_t n, std::size_t trial_index);

/// Everything one trial produced. `trace` is empty for degenerate trials.
struct TrialRun {
  std::uint64_t seed = 0;
  NetworkTopology topology;
  RouteTable routes;
  std::optional<ScheduleTrace> trace;
  TrialMetrics metrics;

  bool degenerate() const { return metrics.connected_count == 0; }
};

TrialRun run_trial_detailed(const ExperimentConfig& config, double r, std::size_t n,
                            std::size_t trial_index);

/// Sample, route, schedule and score one trial. A trial without any
/// connected BS comes back with connected_count == 0 and zeroed metrics.
TrialMetrics run_trial(const ExperimentConfig& config, double r, std::size_t n,
                       std::size_t trial_index);

struct Estimate {
  double mean = 0.0;
  double ci95 = 0.0;  // normal-approximation half-width
};

struct SweepRecord {
  double r = 0.0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t degenerate_trials = 0;
  Estimate y_n;
  Estimate k_n;
  Estimate connected_fraction;  // over all trials, degenerate ones included
  Estimate capacity;
  Estimate th_avg;
  Estimate energy_efficiency;
  Estimate ee_bits_per_joule;

  std::size_t included_trials() const { return trials - degenerate_trials; }
};

/// Mean and 1.96 * s / sqrt(m) over `values`, summed in the given order.
Estimate estimate(const std::vector<double>& values);

/// Aggregates one grid point from its trials, given in trial-index order.
SweepRecord aggregate(double r, std::size_t n, const std::vector<TrialMetrics>& trials);

/// All (r, n) points, trials spread over OpenMP threads. Records ordered by (r, n).
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

/// Single-threaded reference for run_sweep; results are identical.
std::vector<SweepRecord> run_sweep_serial(const ExperimentConfig& config);

enum class FigureId { kFig3a, kFig3b, kFig4a, kFig4b };

FigureId parse_figure_id(std::string_view name);
std::string_view figure_name(FigureId id);

struct FigureRow {
  double series_r = 0.0;
  double x = 0.0;
  double y = 0.0;
  double y_ci = 0.0;
};

/// Re-plots sweep records on a figure's axes, sorted by (series, x).
/// Grid points where every trial was degenerate are skipped.
std::vector<FigureRow> reproduce_figure(FigureId id, const std::vector<SweepRecord>& records);

std::vector<FigureRow> reproduce_figure(FigureId id, const ExperimentConfig& config);

}  // namespace udn
