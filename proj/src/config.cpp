#include "awl/config.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "awl/errors.hpp"
#include "awl/text.hpp"

namespace awl {

namespace {

double parse_double(const std::string& key, std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError(key + ": not a number: '" + std::string(s) + "'");
  return v;
}

int parse_int(const std::string& key, std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError(key + ": not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> parse_list(std::string_view s) {
  std::vector<std::string> out;
  for (auto item : split(s, ',')) {
    item = trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

std::string join(const auto& items) {
  std::string out;
  for (const auto& i : items) {
    if (!out.empty()) out += ',';
    out += i;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "ratio_min",        "range_fraction", "range_min_domains", "dispersion_min",
      "discipline_max_mult", "min_freq_pm", "allowed_pos",       "dispersion_basis",
      "ratio_level",      "dispersion_sd",  "corpus",         "general",           "exclusions",
      "lexicon",          "normalization"};
  return keys;
}

std::string to_string(DispersionBasis b) { return b == DispersionBasis::raw ? "raw" : "pm"; }
std::string to_string(RatioLevel r) { return r == RatioLevel::lemma ? "lemma" : "lemma_pos"; }
std::string to_string(Deviation d) { return d == Deviation::population ? "population" : "sample"; }

ConfigMap parse_config(std::istream& in, const std::string& source) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  ConfigMap out;
  if (trim(text).starts_with("{")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(source + ": invalid JSON: " + e.what());
    }
    if (!j.contains("config") || !j["config"].is_object())
      throw ConfigError(source + ": JSON has no \"config\" object");
    for (const auto& [k, v] : j["config"].items())
      out[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (read_line(lines, line)) {
    ++lineno;
    auto l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected key=value");
    auto key = std::string(trim(l.substr(0, eq)));
    if (key.empty()) throw ConfigError(source + ":" + std::to_string(lineno) + ": empty key");
    out[key] = std::string(trim(l.substr(eq + 1)));
  }
  return out;
}

RunConfig apply_config(RunConfig c, const ConfigMap& values) {
  for (const auto& [key, value] : values) {
    auto& t = c.thresholds;
    if (key == "ratio_min") t.ratio_min = parse_double(key, value);
    else if (key == "range_fraction") t.range_fraction = parse_double(key, value);
    else if (key == "range_min_domains") t.range_min_domains = parse_int(key, value);
    else if (key == "dispersion_min") t.dispersion_min = parse_double(key, value);
    else if (key == "discipline_max_mult") t.discipline_max_mult = parse_double(key, value);
    else if (key == "min_freq_pm") t.min_freq_pm = parse_double(key, value);
    else if (key == "allowed_pos") {
      auto items = parse_list(value);
      t.allowed_pos = std::set<std::string>(items.begin(), items.end());
    } else if (key == "dispersion_basis") {
      if (value == "raw") c.measures.dispersion_basis = DispersionBasis::raw;
      else if (value == "pm") c.measures.dispersion_basis = DispersionBasis::per_million;
      else throw ConfigError("dispersion_basis must be raw or pm, got '" + value + "'");
    } else if (key == "ratio_level") {
      if (value == "lemma") c.measures.ratio_level = RatioLevel::lemma;
      else if (value == "lemma_pos") c.measures.ratio_level = RatioLevel::lemma_pos;
      else throw ConfigError("ratio_level must be lemma or lemma_pos, got '" + value + "'");
    } else if (key == "dispersion_sd") {
      if (value == "population") c.measures.dispersion_sd = Deviation::population;
      else if (value == "sample") c.measures.dispersion_sd = Deviation::sample;
      else throw ConfigError("dispersion_sd must be population or sample, got '" + value + "'");
    } else if (key == "corpus") c.corpus = value;
    else if (key == "general") c.general = value;
    else if (key == "exclusions") c.exclusions = parse_list(value);
    else if (key == "lexicon") c.lexicon = value;
    else if (key == "normalization") c.normalization = value;
    else throw ConfigError("unknown config key '" + key + "'");
  }
  validate(c.thresholds);
  return c;
}

ConfigMap to_config_map(const RunConfig& c) {
  const auto& t = c.thresholds;
  return {
      {"ratio_min", format_double(t.ratio_min)},
      {"range_fraction", format_double(t.range_fraction)},
      {"range_min_domains", std::to_string(t.range_min_domains)},
      {"dispersion_min", format_double(t.dispersion_min)},
      {"discipline_max_mult", format_double(t.discipline_max_mult)},
      {"min_freq_pm", format_double(t.min_freq_pm)},
      {"allowed_pos", join(t.allowed_pos)},
      {"dispersion_basis", to_string(c.measures.dispersion_basis)},
      {"ratio_level", to_string(c.measures.ratio_level)},
      {"dispersion_sd", to_string(c.measures.dispersion_sd)},
      {"corpus", c.corpus},
      {"general", c.general},
      {"exclusions", join(c.exclusions)},
      {"lexicon", c.lexicon},
      {"normalization", c.normalization},
  };
}

}  // namespace awl
