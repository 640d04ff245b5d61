#include "udn/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace udn {

namespace {

enum class Unit { kNone, kLength, kRate, kDuration, kPower };

struct KeySpec {
  std::string_view name;
  Unit unit;
};

constexpr KeySpec kKeys[] = {
    {"macro_radius", Unit::kLength},   {"center_x", Unit::kLength},
    {"center_y", Unit::kLength},       {"gateways", Unit::kNone},
    {"gateway_positions", Unit::kLength}, {"placement", Unit::kNone},
    {"min_separation", Unit::kLength}, {"max_rejections", Unit::kNone},
    {"r_values", Unit::kLength},       {"n_values", Unit::kNone},
    {"delta", Unit::kNone},            {"link_rate", Unit::kRate},
    {"a", Unit::kNone},                {"b", Unit::kPower},
    {"p_norm", Unit::kPower},          {"th_0", Unit::kRate},
    {"lifetime", Unit::kDuration},     {"embodied_fraction", Unit::kNone},
    {"embodied_mode", Unit::kNone},    {"throughput_mode", Unit::kNone},
    {"trials", Unit::kNone},           {"seed", Unit::kNone},
};

const KeySpec* find_key(std::string_view key) {
  for (const auto& spec : kKeys) {
    if (spec.name == key) return &spec;
  }
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double unit_scale(Unit unit, std::string_view suffix, const std::string& key) {
  if (suffix.empty()) return 1.0;
  const std::string s = lower(suffix);
  switch (unit) {
    case Unit::kLength:
      if (s == "m") return 1.0;
      if (s == "km") return 1000.0;
      break;
    case Unit::kRate:
      if (s == "bps") return 1.0;
      if (s == "kbps") return 1e3;
      if (s == "mbps") return 1e6;
      if (s == "gbps") return 1e9;
      break;
    case Unit::kDuration:
      if (s == "s") return 1.0;
      if (s == "min") return 60.0;
      if (s == "h") return 3600.0;
      if (s == "d" || s == "day" || s == "days") return 86400.0;
      if (s == "y" || s == "year" || s == "years") return kSecondsPerYear;
      break;
    case Unit::kPower:
      if (suffix == "W" || s == "w") return 1.0;
      if (suffix == "mW") return 1e-3;
      if (suffix == "kW") return 1e3;
      break;
    case Unit::kNone:
      break;
  }
  throw ConfigError(key, "unknown unit '" + std::string(suffix) + "'");
}

double parse_quantity(std::string_view text, Unit unit, const std::string& key) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data()) {
    throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
  }
  const auto suffix = trim(text.substr(static_cast<std::size_t>(ptr - text.data())));
  value *= unit_scale(unit, suffix, key);
  if (!std::isfinite(value)) throw ConfigError(key, "value must be finite");
  return value;
}

std::uint64_t parse_unsigned(std::string_view text, const std::string& key) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::size_t> parse_counts(std::string_view text, const std::string& key) {
  std::vector<std::size_t> out;
  // start:stop:step, inclusive of stop
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError(key, "range must be start:stop:step");
    const auto start = parse_unsigned(parts[0], key);
    const auto stop = parse_unsigned(parts[1], key);
    const auto step = parse_unsigned(parts[2], key);
    if (step == 0 || stop < start) throw ConfigError(key, "empty or invalid range");
    for (auto n = start; n <= stop; n += step) out.push_back(n);
    return out;
  }
  for (const auto part : split(text, ',')) out.push_back(parse_unsigned(part, key));
  return out;
}

void apply(ExperimentConfig& c, const std::string& key, std::string_view value) {
  const KeySpec* spec = find_key(key);
  if (!spec) throw ConfigError(key, "unknown key");
  const Unit unit = spec->unit;
  auto number = [&] { return parse_quantity(value, unit, key); };
  const std::string word = lower(trim(value));

  if (key == "macro_radius") c.region.circumradius = number();
  else if (key == "center_x") c.region.center.x = number();
  else if (key == "center_y") c.region.center.y = number();
  else if (key == "gateways") {
    if (word == "top_vertices") c.gateways.mode = GatewayMode::kTopVertices;
    else if (word == "single_center") c.gateways.mode = GatewayMode::kSingleCenter;
    else if (word == "explicit") c.gateways.mode = GatewayMode::kExplicit;
    else throw ConfigError(key, "expected top_vertices, single_center or explicit");
  } else if (key == "gateway_positions") {
    c.gateways.explicit_positions.clear();
    for (const auto pair : split(value, ';')) {
      if (pair.empty()) continue;
      const auto xy = split(pair, ',');
      if (xy.size() != 2) throw ConfigError(key, "expected x,y pairs separated by ';'");
      c.gateways.explicit_positions.push_back(
          {parse_quantity(xy[0], unit, key), parse_quantity(xy[1], unit, key)});
    }
  } else if (key == "placement") {
    if (word == "uniform") c.placement = PlacementMode::kUniform;
    else if (word == "hardcore") c.placement = PlacementMode::kHardcore;
    else throw ConfigError(key, "expected uniform or hardcore");
  } else if (key == "min_separation") {
    if (word == "auto") c.min_separation.reset();
    else c.min_separation = number();
  } else if (key == "max_rejections") {
    c.max_rejections = parse_unsigned(value, key);
  } else if (key == "r_values") {
    c.r_values.clear();
    for (const auto part : split(value, ',')) c.r_values.push_back(parse_quantity(part, unit, key));
  } else if (key == "n_values") {
    c.n_values = parse_counts(value, key);
  } else if (key == "delta") c.delta = number();
  else if (key == "link_rate") c.link_rate = number();
  else if (key == "a") c.energy.a = number();
  else if (key == "b") c.energy.b = number();
  else if (key == "p_norm") c.energy.p_norm = number();
  else if (key == "th_0") c.energy.th_0 = number();
  else if (key == "lifetime") c.energy.lifetime = number();
  else if (key == "embodied_fraction") c.energy.embodied_fraction = number();
  else if (key == "embodied_mode") {
    if (word == "total") c.energy.embodied_mode = EmbodiedMode::kShareOfTotal;
    else if (word == "operating") c.energy.embodied_mode = EmbodiedMode::kShareOfOperating;
    else throw ConfigError(key, "expected total or operating");
  } else if (key == "throughput_mode") {
    if (word == "transmitted") c.energy.throughput_mode = ThroughputMode::kTransmitted;
    else if (word == "delivered") c.energy.throughput_mode = ThroughputMode::kDelivered;
    else throw ConfigError(key, "expected transmitted or delivered");
  } else if (key == "trials") {
    c.trials_per_point = parse_unsigned(value, key);
  } else if (key == "seed") {
    c.base_seed = parse_unsigned(value, key);
  }
}

void check_ranges(const ExperimentConfig& c) {
  if (!(c.region.circumradius > 0.0)) throw ConfigError("macro_radius", "must be > 0");
  if (c.r_values.empty()) throw ConfigError("r_values", "must not be empty");
  for (const double r : c.r_values) {
    if (!(r > 0.0)) throw ConfigError("r_values", "entries must be > 0");
  }
  if (c.n_values.empty()) throw ConfigError("n_values", "must not be empty");
  if (c.min_separation && *c.min_separation < 0.0) throw ConfigError("min_separation", "must be >= 0");
  if (c.max_rejections < 1) throw ConfigError("max_rejections", "must be >= 1");
  if (!(c.delta >= 0.0)) throw ConfigError("delta", "must be >= 0");
  if (!(c.link_rate > 0.0)) throw ConfigError("link_rate", "must be > 0");
  if (!(c.energy.a > 0.0)) throw ConfigError("a", "must be > 0");
  if (!(c.energy.b >= 0.0)) throw ConfigError("b", "must be >= 0");
  if (!(c.energy.p_norm > 0.0)) throw ConfigError("p_norm", "must be > 0");
  if (!(c.energy.th_0 > 0.0)) throw ConfigError("th_0", "must be > 0");
  if (!(c.energy.lifetime > 0.0)) throw ConfigError("lifetime", "must be > 0");
  if (!(c.energy.embodied_fraction >= 0.0)) throw ConfigError("embodied_fraction", "must be >= 0");
  if (c.energy.embodied_mode == EmbodiedMode::kShareOfTotal && !(c.energy.embodied_fraction < 1.0)) {
    throw ConfigError("embodied_fraction", "must be < 1");
  }
  if (c.trials_per_point < 1) throw ConfigError("trials", "must be >= 1");
  if (c.gateways.mode == GatewayMode::kExplicit) {
    if (c.gateways.explicit_positions.empty()) {
      throw ConfigError("gateway_positions", "required when gateways=explicit");
    }
    for (const auto& p : c.gateways.explicit_positions) {
      if (!hex_contains(p, c.region)) throw ConfigError("gateway_positions", "gateway outside region");
    }
  }
}

std::pair<std::string, std::string> split_assignment(std::string_view line, bool& ok) {
  const auto eq = line.find('=');
  ok = eq != std::string_view::npos;
  if (!ok) return {};
  return {std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
}

}  // namespace

std::string format_number(double value) {
  char buf[400];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, ptr);
}

ExperimentConfig parse_config(std::string_view contents, const std::vector<std::string>& overrides) {
  std::vector<std::pair<std::string, std::string>> assignments;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    const auto end = contents.find('\n', start);
    std::string_view line =
        contents.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? contents.size() + 1 : end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    bool ok = false;
    auto kv = split_assignment(line, ok);
    if (!ok || kv.first.empty()) {
      throw ConfigError("", "malformed line " + std::to_string(line_no) + ": expected key=value");
    }
    assignments.push_back(std::move(kv));
  }
  for (const auto& o : overrides) {
    bool ok = false;
    auto kv = split_assignment(o, ok);
    if (!ok || kv.first.empty()) throw ConfigError("", "malformed override '" + o + "'");
    assignments.push_back(std::move(kv));
  }

  ExperimentConfig config;
  for (const auto& [key, value] : assignments) apply(config, key, value);
  check_ranges(config);
  return config;
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), overrides);
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& c) {
  auto join_doubles = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
    return s;
  };
  std::string ns;
  for (std::size_t i = 0; i < c.n_values.size(); ++i) {
    ns += (i ? "," : "") + std::to_string(c.n_values[i]);
  }
  std::string gw_positions;
  for (std::size_t i = 0; i < c.gateways.explicit_positions.size(); ++i) {
    const auto& p = c.gateways.explicit_positions[i];
    gw_positions += (i ? ";" : "") + format_number(p.x) + "," + format_number(p.y);
  }
  const char* gw_mode = c.gateways.mode == GatewayMode::kTopVertices    ? "top_vertices"
                        : c.gateways.mode == GatewayMode::kSingleCenter ? "single_center"
                                                                        : "explicit";

  std::vector<std::pair<std::string, std::string>> out{
      {"macro_radius", format_number(c.region.circumradius)},
      {"center_x", format_number(c.region.center.x)},
      {"center_y", format_number(c.region.center.y)},
      {"gateways", gw_mode},
      {"gateway_positions", gw_positions},
      {"placement", c.placement == PlacementMode::kUniform ? "uniform" : "hardcore"},
      {"min_separation", c.min_separation ? format_number(*c.min_separation) : "auto"},
      {"max_rejections", std::to_string(c.max_rejections)},
      {"r_values", join_doubles(c.r_values)},
      {"n_values", ns},
      {"delta", format_number(c.delta)},
      {"link_rate", format_number(c.link_rate)},
      {"a", format_number(c.energy.a)},
      {"b", format_number(c.energy.b)},
      {"p_norm", format_number(c.energy.p_norm)},
      {"th_0", format_number(c.energy.th_0)},
      {"lifetime", format_number(c.energy.lifetime)},
      {"embodied_fraction", format_number(c.energy.embodied_fraction)},
      {"embodied_mode", c.energy.embodied_mode == EmbodiedMode::kShareOfTotal ? "total" : "operating"},
      {"throughput_mode",
       c.energy.throughput_mode == ThroughputMode::kTransmitted ? "transmitted" : "delivered"},
      {"trials", std::to_string(c.trials_per_point)},
      {"seed", std::to_string(c.base_seed)},
  };
  return out;
}

}  // namespace udn
