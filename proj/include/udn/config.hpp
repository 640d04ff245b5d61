#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "udn/experiment.hpp"

namespace udn {

/// Configuration problem; `key()` names the offending key when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Parses flat `key = value` text (one per line, `#` starts a comment) and
/// then applies `overrides` ("key=value") on top. Missing keys keep their
/// defaults. Values accept unit suffixes: m/km, bps/kbps/Mbps/Gbps,
/// s/min/h/days/years, mW/W/kW.
ExperimentConfig parse_config(std::string_view contents,
                              const std::vector<std::string>& overrides = {});

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Canonical key/value listing of a config in base units; parse_config of
/// the joined lines reproduces the config.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& config);

/// Shortest fixed-notation text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace udn
