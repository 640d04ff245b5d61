#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "udn/experiment.hpp"

namespace udn {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(std::string_view name);

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSweepCsvHeader =
    "r_m,n,trials,y_mean,y_ci,k_mean,k_ci,connected_frac,capacity_bps,capacity_ci,th_avg_bps,"
    "ee_paper_units,ee_bits_per_joule";

inline constexpr std::string_view kFigureCsvHeader = "series_r_m,x,y,y_ci";

inline constexpr std::string_view kTrialCsvHeader =
    "r_m,n,trial,seed,connected,slots,k,y,capacity_bps,th_avg_bps,th_delivered_bps,p_tx_w,p_op_w,"
    "e_bs_j,ee_paper_units,ee_bits_per_joule";

/// Sweep records as CSV (fixed header above) or as a JSON object
/// {"seed", "config", "records": [...]} whose record fields reuse the CSV names.
void emit_results(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format,
                  const ExperimentConfig& config);

/// Writes to `path`; throws OutputError if the file cannot be written.
void emit_results(const std::vector<SweepRecord>& records, OutputFormat format,
                  const std::string& path, const ExperimentConfig& config);

void emit_figure(std::ostream& out, FigureId id, const std::vector<FigureRow>& rows,
                 OutputFormat format, const ExperimentConfig& config);

struct TrialReport {
  double r = 0.0;
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  TrialMetrics metrics;
};

void emit_trial(std::ostream& out, const TrialReport& report, OutputFormat format,
                const ExperimentConfig& config);

}  // namespace udn
