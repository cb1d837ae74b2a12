#include <sstream>

#include <gtest/gtest.h>

#include "awl/config.hpp"
#include "awl/errors.hpp"

namespace awl {
namespace {

ConfigMap parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

TEST(Config, DefaultsMatchThresholds) {
  const auto c = apply_config({}, {});
  EXPECT_EQ(c.thresholds.ratio_min, 1.2);
  EXPECT_EQ(c.thresholds.range_fraction, 0.2);
  EXPECT_EQ(c.thresholds.range_min_domains, 3);
  EXPECT_EQ(c.thresholds.dispersion_min, 0.5);
  EXPECT_EQ(c.thresholds.discipline_max_mult, 3.0);
  EXPECT_EQ(c.thresholds.min_freq_pm, 28.57);
  EXPECT_EQ(c.thresholds.allowed_pos, (std::set<std::string>{"NOUN", "VERB", "ADJ", "ADV"}));
  EXPECT_EQ(c.measures.dispersion_basis, DispersionBasis::per_million);
  EXPECT_EQ(c.measures.ratio_level, RatioLevel::lemma);
}

TEST(Config, ParsesKeyValueWithComments) {
  const auto m = parse("# thresholds\nratio_min = 2.0\n\nallowed_pos=NOUN, VERB\ndispersion_basis=raw\n");
  const auto c = apply_config({}, m);
  EXPECT_EQ(c.thresholds.ratio_min, 2.0);
  EXPECT_EQ(c.thresholds.allowed_pos, (std::set<std::string>{"NOUN", "VERB"}));
  EXPECT_EQ(c.measures.dispersion_basis, DispersionBasis::raw);
}

TEST(Config, InfinityAccepted) {
  const auto c = apply_config({}, parse("discipline_max_mult=inf\n"));
  EXPECT_EQ(c.thresholds.discipline_max_mult, kInfinity);
}

TEST(Config, Errors) {
  EXPECT_THROW(apply_config({}, parse("ratio_min=-1\n")), ConfigError);
  EXPECT_THROW(apply_config({}, parse("ratio_min=abc\n")), ConfigError);
  EXPECT_THROW(apply_config({}, parse("no_such_key=1\n")), ConfigError);
  EXPECT_THROW(apply_config({}, parse("dispersion_basis=log\n")), ConfigError);
  EXPECT_THROW(apply_config({}, parse("dispersion_sd=robust\n")), ConfigError);
  EXPECT_THROW(parse("just a line\n"), ConfigError);
}

TEST(Config, RoundTripThroughMap) {
  auto c = apply_config({}, parse("ratio_min=1.7\nexclusions=a.txt,b.txt\nratio_level=lemma_pos\n"
                                  "min_freq_pm=0.1\ndispersion_sd=sample\n"));
  EXPECT_EQ(c.measures.dispersion_sd, Deviation::sample);
  const auto m = to_config_map(c);
  EXPECT_EQ(m.size(), config_keys().size());
  const auto again = apply_config({}, m);
  EXPECT_EQ(again.thresholds, c.thresholds);
  EXPECT_EQ(again.measures, c.measures);
  EXPECT_EQ(again.exclusions, c.exclusions);
  EXPECT_EQ(to_config_map(again), m);
}

TEST(Config, ReadsEmbeddedConfigFromReportJson) {
  const auto m = parse("{\"config\": {\"ratio_min\": \"1.5\", \"range_min_domains\": 2}, \"x\": 1}");
  const auto c = apply_config({}, m);
  EXPECT_EQ(c.thresholds.ratio_min, 1.5);
  EXPECT_EQ(c.thresholds.range_min_domains, 2);
}

}  // namespace
}  // namespace awl
