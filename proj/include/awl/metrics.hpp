#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "awl/ingest.hpp"
#include "awl/stats.hpp"

namespace awl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Filter thresholds. Every numeric field must be non-negative.
struct Thresholds {
  double ratio_min = 1.2;
  double range_fraction = 0.2;
  int range_min_domains = 3;
  double dispersion_min = 0.5;
  double discipline_max_mult = 3.0;
  double min_freq_pm = 28.57;
  std::set<std::string> allowed_pos = {"ADJ", "ADV", "NOUN", "VERB"};

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// Throws ConfigError. `domain_count` is checked against range_min_domains when
// given.
void validate(const Thresholds& t, std::optional<std::size_t> domain_count = std::nullopt);

// What Juilland's D is computed over: raw per-domain counts or counts
// normalized per million tokens of each sub-corpus.
enum class DispersionBasis { raw, per_million };

// Whether the frequency ratio compares the lemma summed across POS (the
// reference list has no POS) or the (lemma, POS) key itself.
enum class RatioLevel { lemma, lemma_pos };

// Standard deviation used by Juilland's D: divide by n or by n - 1.
enum class Deviation { population, sample };

struct MeasureOptions {
  DispersionBasis dispersion_basis = DispersionBasis::per_million;
  RatioLevel ratio_level = RatioLevel::lemma;
  Deviation dispersion_sd = Deviation::population;

  friend bool operator==(const MeasureOptions&, const MeasureOptions&) = default;
};

double per_million(std::uint64_t count, std::uint64_t corpus_size);

// +infinity when the word is missing from (or has zero frequency in) the
// general list but occurs in the academic corpus; 0 when both are zero.
double frequency_ratio(double acad_pm, std::optional<double> general_pm);

std::vector<double> expected_frequencies(std::uint64_t total_count, std::uint64_t corpus_total,
                                         std::span<const std::uint64_t> subcorpus_sizes);

// Number of sub-corpora where observed >= fraction * expected. A zero
// expectation always counts as a hit.
int range_hits(std::span<const std::uint64_t> observed, std::span<const double> expected,
               double fraction);

// Juilland's D with the population standard deviation, clamped to [0, 1].
// Throws std::invalid_argument for n < 2 or an all-zero vector.
double juilland_d(std::span<const double> values, Deviation sd = Deviation::population);

// Largest observed/expected ratio; 0/0 is 0 and k/0 is +infinity.
double discipline_max_mult(std::span<const std::uint64_t> observed,
                           std::span<const double> expected);

struct Verdicts {
  bool ratio = false;
  bool range = false;
  bool dispersion = false;
  bool discipline = false;
  bool min_freq = false;
  bool pos = false;

  bool all() const { return ratio && range && dispersion && discipline && min_freq && pos; }
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct MetricsRow {
  std::string lemma;
  std::string pos;
  std::uint64_t acad_count = 0;
  double acad_pm = 0.0;
  // Counts entering the ratio: the lemma summed over POS, or the key itself.
  std::uint64_t ratio_acad_count = 0;
  double ratio_acad_pm = 0.0;
  std::optional<double> general_pm;
  double ratio = 0.0;
  std::vector<std::uint64_t> domain_counts;
  std::vector<double> domain_pm;
  std::vector<double> expected;
  int range_hits = 0;
  double dispersion_d = 0.0;
  double max_discipline_mult = 0.0;
  Verdicts verdicts;
};

Verdicts evaluate(const MetricsRow& row, const Thresholds& t);

// `totals` and `ratio_count` come from lemma_totals()/lemma_level_counts();
// the pipeline precomputes them once for all keys.
MetricsRow compute_metrics_row(const LemmaPos& key, const LemmaTotal& totals,
                               std::uint64_t ratio_count, const CorpusStats& corpus,
                               const GeneralFrequencyTable& general, const Thresholds& t,
                               const MeasureOptions& options = {});

// Convenience overload that recounts everything for a single key. Throws
// std::invalid_argument if the key does not occur in the corpus.
MetricsRow compute_metrics_row(const LemmaPos& key, const CorpusStats& corpus,
                               const GeneralFrequencyTable& general, const Thresholds& t,
                               const MeasureOptions& options = {});

}  // namespace awl
