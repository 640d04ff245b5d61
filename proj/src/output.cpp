#include "udn/output.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "udn/config.hpp"

namespace udn {

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const ExperimentConfig& config) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : config_entries(config)) obj[key] = value;
  return obj;
}

ordered_json record_json(const SweepRecord& r) {
  ordered_json obj;
  obj["r_m"] = r.r;
  obj["n"] = r.n;
  obj["trials"] = r.trials;
  obj["y_mean"] = r.y_n.mean;
  obj["y_ci"] = r.y_n.ci95;
  obj["k_mean"] = r.k_n.mean;
  obj["k_ci"] = r.k_n.ci95;
  obj["connected_frac"] = r.connected_fraction.mean;
  obj["capacity_bps"] = r.capacity.mean;
  obj["capacity_ci"] = r.capacity.ci95;
  obj["th_avg_bps"] = r.th_avg.mean;
  obj["ee_paper_units"] = r.energy_efficiency.mean;
  obj["ee_bits_per_joule"] = r.ee_bits_per_joule.mean;
  obj["degenerate_trials"] = r.degenerate_trials;
  return obj;
}

template <typename... Ts>
void csv_row(std::ostream& out, const Ts&... fields) {
  bool first = true;
  auto put = [&](const auto& v) {
    if (!first) out << ',';
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      out << format_number(v);
    } else {
      out << v;
    }
  };
  (put(fields), ...);
  out << '\n';
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void emit_results(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format,
                  const ExperimentConfig& config) {
  if (records.empty()) throw OutputError("no records to emit");
  if (format == OutputFormat::kCsv) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
      csv_row(out, r.r, r.n, r.trials, r.y_n.mean, r.y_n.ci95, r.k_n.mean, r.k_n.ci95,
              r.connected_fraction.mean, r.capacity.mean, r.capacity.ci95, r.th_avg.mean,
              r.energy_efficiency.mean, r.ee_bits_per_joule.mean);
    }
    return;
  }
  ordered_json doc;
  doc["seed"] = config.base_seed;
  doc["config"] = config_json(config);
  doc["records"] = ordered_json::array();
  for (const auto& r : records) doc["records"].push_back(record_json(r));
  out << doc.dump(2) << '\n';
}

void emit_results(const std::vector<SweepRecord>& records, OutputFormat format,
                  const std::string& path, const ExperimentConfig& config) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot write '" + path + "'");
  emit_results(file, records, format, config);
  if (!file) throw OutputError("write failed for '" + path + "'");
}

void emit_figure(std::ostream& out, FigureId id, const std::vector<FigureRow>& rows,
                 OutputFormat format, const ExperimentConfig& config) {
  if (format == OutputFormat::kCsv) {
    out << kFigureCsvHeader << '\n';
    for (const auto& row : rows) csv_row(out, row.series_r, row.x, row.y, row.y_ci);
    return;
  }
  ordered_json doc;
  doc["figure"] = figure_name(id);
  doc["seed"] = config.base_seed;
  doc["config"] = config_json(config);
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    doc["rows"].push_back(
        {{"series_r_m", row.series_r}, {"x", row.x}, {"y", row.y}, {"y_ci", row.y_ci}});
  }
  out << doc.dump(2) << '\n';
}

void emit_trial(std::ostream& out, const TrialReport& report, OutputFormat format,
                const ExperimentConfig& config) {
  const auto& m = report.metrics;
  if (format == OutputFormat::kCsv) {
    out << kTrialCsvHeader << '\n';
    csv_row(out, report.r, m.n, report.trial_index, report.seed, m.connected_count, m.slot_count,
            m.k_n, m.y_n, m.capacity, m.th_avg, m.th_delivered, m.p_tx, m.p_op, m.e_bs,
            m.energy_efficiency, m.ee_bits_per_joule);
    return;
  }
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["config"] = config_json(config);
  doc["trial"] = {{"r_m", report.r},
                  {"n", m.n},
                  {"trial", report.trial_index},
                  {"connected", m.connected_count},
                  {"slots", m.slot_count},
                  {"k", m.k_n},
                  {"y", m.y_n},
                  {"capacity_bps", m.capacity},
                  {"th_avg_bps", m.th_avg},
                  {"th_delivered_bps", m.th_delivered},
                  {"p_tx_w", m.p_tx},
                  {"p_op_w", m.p_op},
                  {"e_bs_j", m.e_bs},
                  {"ee_paper_units", m.energy_efficiency},
                  {"ee_bits_per_joule", m.ee_bits_per_joule}};
  out << doc.dump(2) << '\n';
}

}  // namespace udn
