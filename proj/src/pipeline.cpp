#include "awl/pipeline.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <thread>

#include "awl/errors.hpp"
#include "awl/text.hpp"

namespace awl {

std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::pos: return "pos";
    case Filter::exclusion: return "exclusion";
    case Filter::min_freq: return "min_freq";
    case Filter::ratio: return "ratio";
    case Filter::range: return "range";
    case Filter::dispersion: return "dispersion";
    case Filter::discipline: return "discipline";
    case Filter::error: return "error";
  }
  return "?";
}

namespace {

struct Outcome {
  std::optional<Filter> eliminated_by;
  std::optional<MetricsRow> row;
  std::string warning;
};

Outcome classify(const LemmaPos& key, const LemmaTotal& totals, std::uint64_t ratio_count,
                 const CorpusStats& corpus, const GeneralFrequencyTable& general,
                 const Thresholds& t, const std::unordered_set<std::string>& exclusions,
                 const MeasureOptions& measures) {
  Outcome out;
  if (!t.allowed_pos.contains(key.pos)) {
    out.eliminated_by = Filter::pos;
    return out;
  }
  if (exclusions.contains(key.lemma)) {
    out.eliminated_by = Filter::exclusion;
    return out;
  }
  MetricsRow row;
  try {
    row = compute_metrics_row(key, totals, ratio_count, corpus, general, t, measures);
  } catch (const std::exception& e) {
    out.eliminated_by = Filter::error;
    out.warning = key.lemma + "/" + key.pos + ": " + e.what();
    return out;
  }
  const auto& v = row.verdicts;
  if (!v.min_freq)
    out.eliminated_by = Filter::min_freq;
  else if (!v.ratio)
    out.eliminated_by = Filter::ratio;
  else if (!v.range)
    out.eliminated_by = Filter::range;
  else if (!v.dispersion)
    out.eliminated_by = Filter::dispersion;
  else if (!v.discipline)
    out.eliminated_by = Filter::discipline;
  out.row = std::move(row);
  return out;
}

AwlEntry to_entry(const MetricsRow& row) {
  AwlEntry e;
  e.lemma = row.lemma;
  e.pos = row.pos;
  e.acad_count = row.acad_count;
  e.acad_pm = row.acad_pm;
  e.general_pm = row.general_pm;
  e.ratio = row.ratio;
  e.range_hits = row.range_hits;
  e.dispersion_d = row.dispersion_d;
  e.max_discipline_mult = row.max_discipline_mult;
  return e;
}

}  // namespace

ExtractionReport extract_awl(const CorpusStats& corpus, const GeneralFrequencyTable& general,
                             const Thresholds& t, const std::unordered_set<std::string>& exclusions,
                             const ExtractOptions& options) {
  if (corpus.size() < 2)
    throw InputError("extraction needs at least two sub-corpora, found " +
                     std::to_string(corpus.size()));
  validate(t, corpus.size());

  const auto totals = lemma_totals(corpus);
  const auto lemma_counts = lemma_level_counts(corpus);
  std::vector<const std::pair<const LemmaPos, LemmaTotal>*> keys;
  keys.reserve(totals.size());
  for (const auto& kv : totals) keys.push_back(&kv);

  std::vector<Outcome> outcomes(keys.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [key, tot] = *keys[i];
      const auto ratio_count = options.measures.ratio_level == RatioLevel::lemma
                                   ? lemma_counts.at(key.lemma)
                                   : tot.total;
      outcomes[i] = classify(key, tot, ratio_count, corpus, general, t, exclusions,
                             options.measures);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, keys.size()));
  if (workers == 1) {
    work(0, keys.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (keys.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const auto begin = std::min(keys.size(), w * chunk);
      const auto end = std::min(keys.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  ExtractionReport report;
  report.thresholds = t;
  report.options = options.measures;
  report.candidate_count = keys.size();
  for (auto& o : outcomes) {
    if (!o.warning.empty()) report.warnings.push_back(std::move(o.warning));
    if (o.eliminated_by)
      ++report.eliminations[static_cast<std::size_t>(*o.eliminated_by)];
    else
      report.entries.push_back(to_entry(*o.row));
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const AwlEntry& a, const AwlEntry& b) {
    if (a.acad_count != b.acad_count) return a.acad_count > b.acad_count;
    return std::tie(a.lemma, a.pos) < std::tie(b.lemma, b.pos);
  });
  for (std::size_t i = 0; i < report.entries.size(); ++i) report.entries[i].rank = i + 1;

  std::size_t eliminated = 0;
  for (auto n : report.eliminations) eliminated += n;
  if (report.candidate_count - eliminated != report.entries.size())
    throw InvariantError("elimination counts do not add up to the candidate count");
  return report;
}

std::map<std::string, std::size_t> pos_distribution(std::span<const AwlEntry> list) {
  std::map<std::string, std::size_t> out;
  for (const auto& e : list) ++out[e.pos];
  return out;
}

OverlapReport compare_lists(std::span<const AwlEntry> a, const std::unordered_set<std::string>& b,
                            const std::unordered_map<std::string, std::string>* mapping) {
  std::unordered_set<std::string> mapped;
  mapped.reserve(b.size());
  for (const auto& lemma : b) {
    if (mapping) {
      if (auto it = mapping->find(lemma); it != mapping->end()) {
        mapped.insert(it->second);
        continue;
      }
    }
    mapped.insert(lemma);
  }
  OverlapReport r;
  for (const auto& e : a) (mapped.contains(e.lemma) ? r.matched : r.unmatched).push_back(e);
  return r;
}

void write_awl_tsv(std::ostream& out, std::span<const AwlEntry> list) {
  out << "rank\tlemma\tpos\tacad_count\tacad_pm\tgeneral_pm\tratio\trange_hits\tdispersion_d"
         "\tmax_discipline_mult\n";
  for (const auto& e : list) {
    out << e.rank << '\t' << e.lemma << '\t' << e.pos << '\t' << e.acad_count << '\t'
        << format_double(e.acad_pm) << '\t' << (e.general_pm ? format_double(*e.general_pm) : "NA")
        << '\t' << format_double(e.ratio) << '\t' << e.range_hits << '\t'
        << format_double(e.dispersion_d) << '\t' << format_double(e.max_discipline_mult) << '\n';
  }
}

std::vector<AwlEntry> load_word_list(std::istream& in, const Normalizer& normalize,
                                     const std::string& source) {
  std::vector<AwlEntry> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::optional<std::size_t> lemma_col, pos_col;
  bool header_checked = false;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (!header_checked) {
      header_checked = true;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const auto name = to_lower(trim(cols[i]));
        if (name == "lemma") lemma_col = i;
        if (name == "pos" || name == "upos") pos_col = i;
      }
      if (lemma_col) continue;
      lemma_col = 0;
      if (cols.size() > 1) pos_col = 1;
    }
    if (*lemma_col >= cols.size() || trim(cols[*lemma_col]).empty())
      throw ParseError(source, lineno, "missing lemma");
    AwlEntry e;
    e.lemma = normalize(trim(cols[*lemma_col]));
    if (pos_col && *pos_col < cols.size()) e.pos = std::string(trim(cols[*pos_col]));
    if (seen.emplace(e.lemma, e.pos).second) {
      e.rank = out.size() + 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::unordered_map<std::string, std::string> load_lemma_mapping(std::istream& in,
                                                                const Normalizer& normalize,
                                                                const std::string& source) {
  std::unordered_map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() < 2 || trim(cols[0]).empty() || trim(cols[1]).empty())
      throw ParseError(source, lineno, "expected `from<TAB>to`");
    out[normalize(trim(cols[0]))] = normalize(trim(cols[1]));
  }
  return out;
}

}  // namespace awl
