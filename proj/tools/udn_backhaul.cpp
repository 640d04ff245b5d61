// Command-line front end: trial, sweep, figure and validate subcommands.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udn/config.hpp"
#include "udn/experiment.hpp"
#include "udn/output.hpp"
#include "udn/validate.hpp"

namespace {

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "key=value configuration file")->check(CLI::ExistingFile);
  app->add_option("--set", c.overrides, "override KEY=VALUE (repeatable)")->take_all();
  app->add_option("--out", c.out_path, "output file (default: stdout)");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", c.seed, "base seed");
  app->add_option("--trials", c.trials, "trials per grid point");
}

udn::ExperimentConfig resolve(const Common& c) {
  auto overrides = c.overrides;
  if (c.seed) overrides.push_back("seed=" + std::to_string(*c.seed));
  if (c.trials) overrides.push_back("trials=" + std::to_string(*c.trials));
  return c.config_path.empty() ? udn::parse_config("", overrides)
                               : udn::load_config(c.config_path, overrides);
}

template <typename Write>
void with_output(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw udn::OutputError("cannot write '" + path + "'");
  write(file);
  if (!file) throw udn::OutputError("write failed for '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-hop small-cell backhaul capacity and energy-efficiency simulator"};
  app.require_subcommand(1);

  Common trial_opts, sweep_opts, figure_opts;
  double trial_r = 100.0;
  std::size_t trial_n = 50;
  std::size_t trial_index = 0;
  std::string trace_path;
  auto* trial = app.add_subcommand("trial", "run one Monte Carlo trial");
  add_common(trial, trial_opts);
  trial->add_option("--r", trial_r, "small cell radius in meters");
  trial->add_option("--n", trial_n, "number of small cell BSs");
  trial->add_option("--index", trial_index, "trial index");
  trial->add_option("--trace", trace_path, "write the slot trace as JSON lines");

  auto* sweep = app.add_subcommand("sweep", "run every (r, n) grid point");
  add_common(sweep, sweep_opts);

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "dataset for fig3a, fig3b, fig4a or fig4b");
  add_common(figure, figure_opts);
  figure->add_option("id", figure_id, "figure id")
      ->required()
      ->check(CLI::IsMember({"fig3a", "fig3b", "fig4a", "fig4b"}));

  udn::ValidationOptions vopts;
  auto* validate = app.add_subcommand("validate", "routing and scheduling invariant/oracle checks");
  validate->add_option("--seeds", vopts.seeds, "random instances per radius");
  validate->add_option("--max-n", vopts.max_n, "largest instance size");
  validate->add_option("--seed", vopts.base_seed, "base seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*trial) {
      const auto config = resolve(trial_opts);
      const auto run = udn::run_trial_detailed(config, trial_r, trial_n, trial_index);
      if (!trace_path.empty()) {
        with_output(trace_path, [&](std::ostream& out) {
          if (run.trace) udn::write_trace(out, *run.trace);
        });
      }
      with_output(trial_opts.out_path, [&](std::ostream& out) {
        udn::emit_trial(out, {trial_r, trial_index, run.seed, run.metrics},
                        udn::parse_format(trial_opts.format), config);
      });
      if (run.degenerate()) std::cerr << "note: no connected BS in this trial\n";
    } else if (*sweep) {
      const auto config = resolve(sweep_opts);
      const auto records = udn::run_sweep(config);
      with_output(sweep_opts.out_path, [&](std::ostream& out) {
        udn::emit_results(out, records, udn::parse_format(sweep_opts.format), config);
      });
    } else if (*figure) {
      const auto config = resolve(figure_opts);
      const auto id = udn::parse_figure_id(figure_id);
      const auto rows = udn::reproduce_figure(id, config);
      with_output(figure_opts.out_path, [&](std::ostream& out) {
        udn::emit_figure(out, id, rows, udn::parse_format(figure_opts.format), config);
      });
    } else if (*validate) {
      const auto report = udn::run_validation(vopts);
      udn::print_report(std::cout, report);
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
