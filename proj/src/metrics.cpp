#include "awl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "awl/errors.hpp"

namespace awl {

void validate(const Thresholds& t, std::optional<std::size_t> domain_count) {
  auto check = [](double v, const char* name) {
    if (std::isnan(v) || v < 0.0)
      throw ConfigError(std::string(name) + " must be a non-negative number");
  };
  check(t.ratio_min, "ratio_min");
  check(t.range_fraction, "range_fraction");
  check(t.dispersion_min, "dispersion_min");
  check(t.discipline_max_mult, "discipline_max_mult");
  check(t.min_freq_pm, "min_freq_pm");
  if (std::isinf(t.range_fraction)) throw ConfigError("range_fraction must be finite");
  if (t.range_min_domains < 0) throw ConfigError("range_min_domains must be non-negative");
  if (domain_count && static_cast<std::size_t>(t.range_min_domains) > *domain_count)
    throw ConfigError("range_min_domains (" + std::to_string(t.range_min_domains) +
                      ") exceeds the number of sub-corpora (" + std::to_string(*domain_count) + ")");
  for (const auto& p : t.allowed_pos)
    if (p.empty()) throw ConfigError("allowed_pos contains an empty tag");
}

double per_million(std::uint64_t count, std::uint64_t corpus_size) {
  if (corpus_size == 0) throw std::invalid_argument("per_million: corpus size is zero");
  return static_cast<double>(count) * 1e6 / static_cast<double>(corpus_size);
}

double frequency_ratio(double acad_pm, std::optional<double> general_pm) {
  if (general_pm && *general_pm > 0.0) return acad_pm / *general_pm;
  return acad_pm > 0.0 ? kInfinity : 0.0;
}

std::vector<double> expected_frequencies(std::uint64_t total_count, std::uint64_t corpus_total,
                                         std::span<const std::uint64_t> subcorpus_sizes) {
  if (corpus_total == 0) throw std::invalid_argument("expected_frequencies: corpus total is zero");
  std::uint64_t sum = 0;
  for (auto s : subcorpus_sizes) sum += s;
  if (sum != corpus_total)
    throw std::invalid_argument("expected_frequencies: sub-corpus sizes do not sum to the total");
  const double relative = static_cast<double>(total_count) / static_cast<double>(corpus_total);
  std::vector<double> out;
  out.reserve(subcorpus_sizes.size());
  for (auto s : subcorpus_sizes) out.push_back(relative * static_cast<double>(s));
  return out;
}

int range_hits(std::span<const std::uint64_t> observed, std::span<const double> expected,
               double fraction) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("range_hits: vector lengths differ");
  int hits = 0;
  for (std::size_t i = 0; i < observed.size(); ++i)
    if (expected[i] == 0.0 || static_cast<double>(observed[i]) >= fraction * expected[i]) ++hits;
  return hits;
}

double juilland_d(std::span<const double> values, Deviation deviation) {
  const auto n = values.size();
  if (n < 2) throw std::invalid_argument("juilland_d: needs at least two sub-corpora");
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || std::isinf(v))
      throw std::invalid_argument("juilland_d: values must be finite and non-negative");
    sum += v;
  }
  if (sum == 0.0) throw std::invalid_argument("juilland_d: undefined dispersion (all-zero vector)");
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const auto denom = static_cast<double>(deviation == Deviation::sample ? n - 1 : n);
  const double sd = std::sqrt(sq / denom);
  const double d = 1.0 - (sd / mean) / std::sqrt(static_cast<double>(n - 1));
  return std::clamp(d, 0.0, 1.0);
}

double discipline_max_mult(std::span<const std::uint64_t> observed,
                           std::span<const double> expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("discipline_max_mult: vector lengths differ");
  double best = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double m;
    if (expected[i] == 0.0)
      m = observed[i] == 0 ? 0.0 : kInfinity;
    else
      m = static_cast<double>(observed[i]) / expected[i];
    best = std::max(best, m);
  }
  return best;
}

Verdicts evaluate(const MetricsRow& row, const Thresholds& t) {
  Verdicts v;
  v.ratio = row.ratio >= t.ratio_min;
  v.range = row.range_hits >= t.range_min_domains;
  v.dispersion = row.dispersion_d >= t.dispersion_min;
  v.discipline = row.max_discipline_mult <= t.discipline_max_mult;
  v.min_freq = row.acad_pm >= t.min_freq_pm;
  v.pos = t.allowed_pos.contains(row.pos);
  return v;
}

MetricsRow compute_metrics_row(const LemmaPos& key, const LemmaTotal& totals,
                               std::uint64_t ratio_count, const CorpusStats& corpus,
                               const GeneralFrequencyTable& general, const Thresholds& t,
                               const MeasureOptions& options) {
  if (totals.per_domain.size() != corpus.size())
    throw std::invalid_argument("compute_metrics_row: per-domain vector has wrong length");
  if (totals.total == 0)
    throw std::invalid_argument("compute_metrics_row: '" + key.lemma + "/" + key.pos +
                                "' does not occur in the corpus");
  const auto sizes = corpus.subcorpus_sizes();

  MetricsRow row;
  row.lemma = key.lemma;
  row.pos = key.pos;
  row.acad_count = totals.total;
  row.acad_pm = per_million(totals.total, corpus.total_tokens());
  row.ratio_acad_count = ratio_count;
  row.ratio_acad_pm = per_million(ratio_count, corpus.total_tokens());
  if (auto g = general.count(key.lemma)) row.general_pm = per_million(*g, general.total_tokens());
  row.ratio = frequency_ratio(row.ratio_acad_pm, row.general_pm);

  row.domain_counts = totals.per_domain;
  row.domain_pm.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    row.domain_pm.push_back(per_million(row.domain_counts[i], sizes[i]));
  row.expected = expected_frequencies(totals.total, corpus.total_tokens(), sizes);
  row.range_hits = range_hits(row.domain_counts, row.expected, t.range_fraction);

  if (options.dispersion_basis == DispersionBasis::per_million) {
    row.dispersion_d = juilland_d(row.domain_pm, options.dispersion_sd);
  } else {
    std::vector<double> raw(row.domain_counts.begin(), row.domain_counts.end());
    row.dispersion_d = juilland_d(raw, options.dispersion_sd);
  }
  row.max_discipline_mult = discipline_max_mult(row.domain_counts, row.expected);
  row.verdicts = evaluate(row, t);
  return row;
}

MetricsRow compute_metrics_row(const LemmaPos& key, const CorpusStats& corpus,
                               const GeneralFrequencyTable& general, const Thresholds& t,
                               const MeasureOptions& options) {
  LemmaTotal totals;
  totals.per_domain.reserve(corpus.size());
  std::uint64_t lemma_count = 0;
  for (const auto& sub : corpus.subcorpora()) {
    const auto c = sub.count(key);
    totals.per_domain.push_back(c);
    totals.total += c;
    for (const auto& [k, n] : sub.counts())
      if (k.lemma == key.lemma) lemma_count += n;
  }
  const auto ratio_count = options.ratio_level == RatioLevel::lemma ? lemma_count : totals.total;
  return compute_metrics_row(key, totals, ratio_count, corpus, general, t, options);
}

}  // namespace awl
