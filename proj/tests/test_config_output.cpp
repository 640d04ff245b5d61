#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "udn/config.hpp"
#include "udn/output.hpp"

using namespace udn;

TEST_CASE("empty config gives the default parameter table") {
  const auto c = parse_config("");
  CHECK(c.region.circumradius == 1000.0);
  CHECK(c.gateways.mode == GatewayMode::kTopVertices);
  CHECK(c.r_values == std::vector<double>{100.0, 150.0, 200.0});
  CHECK(c.delta == 0.5);
  CHECK(c.link_rate == 1e9);
  CHECK(c.energy.a == 7.85);
  CHECK(c.energy.b == 71.5);
  CHECK(c.energy.p_norm == 1.0);
  CHECK(c.energy.th_0 == 1e9);
  CHECK(c.energy.lifetime == 5.0 * 365.25 * 86400.0);
  CHECK(c.energy.embodied_fraction == 0.2);
  CHECK(c.n_values.front() == 5);
  CHECK(c.n_values.back() == 100);
  CHECK(c.n_values.size() == 20);
  CHECK(c.trials_per_point == 200);
}

TEST_CASE("file values, suffixes and overrides") {
  const std::string text =
      "# macrocell\n"
      "macro_radius = 1.5 km\n"
      "r_values = 100m, 0.2km\n"
      "n_values = 10:30:10   # inclusive range\n"
      "link_rate = 2 Gbps\n"
      "lifetime = 10 years\n"
      "b = 500 mW\n"
      "delta = 0.75\n";
  const auto c = parse_config(text, {"delta=0.25", "seed=77"});
  CHECK(c.region.circumradius == 1500.0);
  CHECK(c.r_values == std::vector<double>{100.0, 200.0});
  CHECK(c.n_values == std::vector<std::size_t>{10, 20, 30});
  CHECK(c.link_rate == 2e9);
  CHECK(c.energy.lifetime == doctest::Approx(10.0 * kSecondsPerYear));
  CHECK(c.energy.b == doctest::Approx(0.5));
  CHECK(c.delta == 0.25);
  CHECK(c.base_seed == 77);
}

TEST_CASE("override alone changes only its key") {
  const auto c = parse_config("", {"delta=0.25"});
  const ExperimentConfig d;
  CHECK(c.delta == 0.25);
  auto entries = config_entries(c);
  auto defaults = config_entries(d);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != "delta") CHECK(entries[i] == defaults[i]);
  }
}

TEST_CASE("config errors name the key") {
  auto message = [](const std::string& text, std::vector<std::string> overrides = {}) {
    try {
      parse_config(text, overrides);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("", {"embodied_fraction=1.0"}) == "embodied_fraction: must be < 1");
  CHECK(message("bogus = 3\n") == "bogus: unknown key");
  CHECK(message("delta 0.5\n").find("malformed line 1") != std::string::npos);
  CHECK(message("delta = -1\n") == "delta: must be >= 0");
  CHECK(message("r_values = 100 furlongs\n").rfind("r_values:", 0) == 0);
  CHECK(message("trials = many\n").rfind("trials:", 0) == 0);
  CHECK(message("gateways = explicit\ngateway_positions = 0,2000\n") ==
        "gateway_positions: gateway outside region");
  CHECK(message("", {"noequals"}).find("malformed override") != std::string::npos);
}

TEST_CASE("config listing round-trips") {
  const auto c = parse_config("gateways=explicit\ngateway_positions=0,0;10,20\nmin_separation=250\n",
                              {"a=7.84", "embodied_mode=operating", "throughput_mode=delivered"});
  std::string text;
  for (const auto& [k, v] : config_entries(c)) text += k + "=" + v + "\n";
  const auto back = parse_config(text);
  CHECK(config_entries(back) == config_entries(c));
  CHECK(back.gateways.explicit_positions.size() == 2);
  CHECK(back.min_separation == 250.0);
}

namespace {

std::vector<SweepRecord> sample_records() {
  SweepRecord a;
  a.r = 100.0;
  a.n = 5;
  a.trials = 200;
  a.degenerate_trials = 3;
  a.y_n = {1.0 / 3.0, 0.0123456789};
  a.k_n = {1.1, 0.2};
  a.connected_fraction = {0.012, 0.0};
  a.capacity = {1.2345678901234567e9, 1e7};
  a.th_avg = {2e8, 0.0};
  a.energy_efficiency = {6.389532514485989e-2, 0.0};
  a.ee_bits_per_joule = {10081915.563957153, 0.0};
  SweepRecord b = a;
  b.n = 10;
  return {a, b};
}

}  // namespace

TEST_CASE("CSV output") {
  std::ostringstream os;
  emit_results(os, {sample_records().front()}, OutputFormat::kCsv, ExperimentConfig{});
  const std::string csv = os.str();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv ==
        "r_m,n,trials,y_mean,y_ci,k_mean,k_ci,connected_frac,capacity_bps,capacity_ci,th_avg_bps,"
        "ee_paper_units,ee_bits_per_joule\n"
        "100,5,200,0.3333333333333333,0.0123456789,1.1,0.2,0.012,1234567890.1234567,10000000,"
        "200000000,0.06389532514485989,10081915.563957153\n");
  CHECK_THROWS_AS(emit_results(os, {}, OutputFormat::kCsv, ExperimentConfig{}), OutputError);
}

TEST_CASE("JSON output round-trips numbers exactly") {
  const auto recs = sample_records();
  ExperimentConfig config;
  config.base_seed = 99;
  std::ostringstream os;
  emit_results(os, recs, OutputFormat::kJson, config);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["seed"] == 99);
  CHECK(doc["config"]["a"] == "7.85");
  REQUIRE(doc["records"].size() == 2);
  const auto& r = doc["records"][0];
  CHECK(r["y_mean"].get<double>() == recs[0].y_n.mean);
  CHECK(r["capacity_bps"].get<double>() == recs[0].capacity.mean);
  CHECK(r["ee_paper_units"].get<double>() == recs[0].energy_efficiency.mean);
  CHECK(r["ee_bits_per_joule"].get<double>() == recs[0].ee_bits_per_joule.mean);
  CHECK(r["degenerate_trials"] == 3);
  CHECK(doc["records"][1]["n"] == 10);
}

TEST_CASE("unwritable path") {
  CHECK_THROWS_AS(emit_results(sample_records(), OutputFormat::kCsv, "/nonexistent-dir/x.csv",
                               ExperimentConfig{}),
                  OutputError);
  const auto path = std::filesystem::temp_directory_path() / "udn_emit_test.csv";
  emit_results(sample_records(), OutputFormat::kCsv, path.string(), ExperimentConfig{});
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kSweepCsvHeader);
  std::filesystem::remove(path);
}

TEST_CASE("figure output") {
  std::vector<FigureRow> rows{{100.0, 5.0, 1e9, 1e8}, {150.0, 5.0, 2e9, 0.0}};
  std::ostringstream csv;
  emit_figure(csv, FigureId::kFig3a, rows, OutputFormat::kCsv, ExperimentConfig{});
  CHECK(csv.str() == "series_r_m,x,y,y_ci\n100,5,1000000000,100000000\n150,5,2000000000,0\n");
  std::ostringstream js;
  emit_figure(js, FigureId::kFig4b, rows, OutputFormat::kJson, ExperimentConfig{});
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["figure"] == "fig4b");
  CHECK(doc["rows"][1]["y"].get<double>() == 2e9);
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::kCsv);
  CHECK(parse_format("json") == OutputFormat::kJson);
  CHECK_THROWS(parse_format("xml"));
}
