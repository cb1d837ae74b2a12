#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "awl/metrics.hpp"

namespace awl {

// Cascade order. An eliminated key is attributed to the first filter it fails.
// `error` collects keys whose measures could not be computed.
enum class Filter { pos, exclusion, min_freq, ratio, range, dispersion, discipline, error };
inline constexpr std::size_t kFilterCount = 8;

std::string_view filter_name(Filter f);

struct AwlEntry {
  std::string lemma;
  std::string pos;
  std::uint64_t acad_count = 0;
  double acad_pm = 0.0;
  std::optional<double> general_pm;
  double ratio = 0.0;
  int range_hits = 0;
  double dispersion_d = 0.0;
  double max_discipline_mult = 0.0;
  std::size_t rank = 0;  // 1-based, by acad_pm descending
};

struct ExtractionReport {
  Thresholds thresholds;
  MeasureOptions options;
  std::size_t candidate_count = 0;
  std::array<std::size_t, kFilterCount> eliminations{};
  std::vector<AwlEntry> entries;
  std::vector<std::string> warnings;

  std::size_t eliminated(Filter f) const { return eliminations[static_cast<std::size_t>(f)]; }
};

struct ExtractOptions {
  MeasureOptions measures;
  unsigned threads = 1;
};

// Runs every candidate (lemma, POS) key through the seven filters and returns
// the survivors ranked by academic frequency, ties broken by (lemma, pos).
// Requires at least two sub-corpora and a validated Thresholds.
ExtractionReport extract_awl(const CorpusStats& corpus, const GeneralFrequencyTable& general,
                             const Thresholds& t,
                             const std::unordered_set<std::string>& exclusions = {},
                             const ExtractOptions& options = {});

std::map<std::string, std::size_t> pos_distribution(std::span<const AwlEntry> list);

struct OverlapReport {
  std::vector<AwlEntry> matched;
  std::vector<AwlEntry> unmatched;
  std::size_t matched_count() const { return matched.size(); }
};

// Entries of `a` whose lemma belongs to `b` after mapping each member of `b`
// through `mapping` (members without a mapping are kept as is).
OverlapReport compare_lists(std::span<const AwlEntry> a, const std::unordered_set<std::string>& b,
                            const std::unordered_map<std::string, std::string>* mapping = nullptr);

// Columns: rank lemma pos acad_count acad_pm general_pm ratio range_hits
// dispersion_d max_discipline_mult. Missing general_pm is written as "NA".
void write_awl_tsv(std::ostream& out, std::span<const AwlEntry> list);

// Reads a word list. Accepts the extract output (header with `lemma` and
// `pos` columns), any TSV with such a header, or headerless `lemma[<TAB>pos]`
// lines. `#` lines are comments.
std::vector<AwlEntry> load_word_list(std::istream& in, const Normalizer& normalize = {},
                                     const std::string& source = "<word list>");

// Headerless `from<TAB>to` lemma mapping, e.g. translated English entries.
std::unordered_map<std::string, std::string> load_lemma_mapping(
    std::istream& in, const Normalizer& normalize = {}, const std::string& source = "<mapping>");

}  // namespace awl
