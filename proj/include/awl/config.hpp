#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awl/metrics.hpp"

namespace awl {

// Flat `key=value` settings. Keys use underscores; the matching CLI flag uses
// dashes (`ratio_min` <-> `--ratio-min`).
using ConfigMap = std::map<std::string, std::string>;

struct RunConfig {
  Thresholds thresholds;
  MeasureOptions measures;
  std::string corpus;
  std::string general;
  std::vector<std::string> exclusions;
  std::string lexicon;
  std::string normalization;
};

// Every key accepted in a config file, in canonical order.
const std::vector<std::string>& config_keys();

// `#` comments and blank lines ignored; whitespace around key and value trimmed.
// A stream starting with `{` is read as an extraction report JSON and its
// embedded "config" object is used. Throws ConfigError.
ConfigMap parse_config(std::istream& in, const std::string& source = "<config>");

// Applies `values` on top of `base`; unknown keys and malformed or
// out-of-domain values raise ConfigError.
RunConfig apply_config(RunConfig base, const ConfigMap& values);

// Inverse of apply_config: every key with its effective value.
ConfigMap to_config_map(const RunConfig& config);

std::string to_string(DispersionBasis b);
std::string to_string(RatioLevel r);
std::string to_string(Deviation d);

}  // namespace awl
