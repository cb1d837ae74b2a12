#include "awl/coverage.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <set>
#include <unordered_map>

#include "awl/errors.hpp"
#include "awl/metrics.hpp"
#include "awl/text.hpp"

namespace awl {

double DomainCoverage::percent() const {
  return token_count == 0 ? 0.0 : 100.0 * static_cast<double>(covered) / static_cast<double>(token_count);
}

double DomainCoverage::pos_percent(const std::string& pos) const {
  auto it = covered_by_pos.find(pos);
  if (it == covered_by_pos.end() || token_count == 0) return 0.0;
  return 100.0 * static_cast<double>(it->second) / static_cast<double>(token_count);
}

double CoverageReport::percent() const {
  return total_tokens == 0 ? 0.0 : 100.0 * static_cast<double>(covered) / static_cast<double>(total_tokens);
}

CoverageReport coverage(std::span<const LemmaPos> list, const CorpusStats& corpus, CoverageKey by) {
  if (corpus.total_tokens() == 0) throw InputError("coverage: empty corpus");

  std::unordered_set<LemmaPos, LemmaPosHash> keys;
  std::unordered_map<std::string, std::set<std::string>> list_pos;
  for (const auto& k : list) {
    keys.insert(by == CoverageKey::lemma ? LemmaPos{k.lemma, ""} : k);
    list_pos[k.lemma].insert(k.pos);
  }

  CoverageReport report;
  report.by = by;
  report.total_tokens = corpus.total_tokens();
  std::map<std::string, std::map<std::string, std::uint64_t>> corpus_pos;  // listed lemmas only
  for (const auto& sub : corpus.subcorpora()) {
    DomainCoverage dc;
    dc.domain = sub.domain();
    dc.token_count = sub.token_count();
    for (const auto& [key, n] : sub.counts()) {
      if (!list_pos.contains(key.lemma)) continue;
      corpus_pos[key.lemma][key.pos] += n;
      const bool hit = by == CoverageKey::lemma ? keys.contains(LemmaPos{key.lemma, ""})
                                                : keys.contains(key);
      if (!hit) continue;
      dc.covered += n;
      dc.covered_by_pos[key.pos] += n;
    }
    report.covered += dc.covered;
    report.domains.push_back(std::move(dc));
  }

  for (auto& [lemma, pos_counts] : corpus_pos) {
    const auto& lp = list_pos.at(lemma);
    bool disagree = pos_counts.size() > 1;
    if (by == CoverageKey::lemma_pos)
      for (const auto& [p, n] : pos_counts)
        if (!lp.contains(p)) disagree = true;
    if (!disagree) continue;
    report.diagnostics.push_back(
        PosDisagreement{lemma, std::vector<std::string>(lp.begin(), lp.end()), pos_counts});
  }
  return report;
}

double coverage_against_frequency_table(const std::unordered_set<std::string>& list,
                                        const GeneralFrequencyTable& table) {
  std::uint64_t covered = 0;
  for (const auto& lemma : list)
    if (auto c = table.count(lemma)) covered += *c;
  return 100.0 * static_cast<double>(covered) / static_cast<double>(table.total_tokens());
}

void write_coverage_tsv(std::ostream& out, const CoverageReport& report) {
  static const std::array<std::string, 4> kMainPos = {"VERB", "NOUN", "ADJ", "ADV"};
  std::vector<std::string> rows(kMainPos.begin(), kMainPos.end());
  std::set<std::string> others;
  for (const auto& d : report.domains)
    for (const auto& [pos, n] : d.covered_by_pos)
      if (std::find(kMainPos.begin(), kMainPos.end(), pos) == kMainPos.end()) others.insert(pos);
  rows.insert(rows.end(), others.begin(), others.end());

  out << "pos";
  for (const auto& d : report.domains) out << '\t' << d.domain.str();
  out << "\tOverall\n";
  for (const auto& pos : rows) {
    out << pos;
    std::uint64_t covered = 0;
    for (const auto& d : report.domains) {
      out << '\t' << format_double(d.pos_percent(pos));
      if (auto it = d.covered_by_pos.find(pos); it != d.covered_by_pos.end()) covered += it->second;
    }
    out << '\t' << format_double(100.0 * static_cast<double>(covered) /
                                 static_cast<double>(report.total_tokens))
        << '\n';
  }
  out << "Total";
  for (const auto& d : report.domains) out << '\t' << format_double(d.percent());
  out << '\t' << format_double(report.percent()) << '\n';
}

}  // namespace awl
