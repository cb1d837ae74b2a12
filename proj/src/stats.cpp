#include "awl/stats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "awl/errors.hpp"
#include "awl/text.hpp"

namespace awl {

std::uint64_t SubCorpusStats::count(const LemmaPos& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

void SubCorpusStats::add(const Token& token) {
  ++counts_[LemmaPos{token.lemma, token.pos}];
  ++surface_counts_[to_lower(token.surface)];
  ++token_count_;
}

void SubCorpusStats::add_count(const LemmaPos& key, std::uint64_t n) {
  if (n == 0) return;
  counts_[key] += n;
  token_count_ += n;
}

void SubCorpusStats::add_surface_count(const std::string& surface, std::uint64_t n) {
  if (n == 0) return;
  surface_counts_[surface] += n;
}

std::size_t SubCorpusStats::lemma_types() const {
  std::unordered_set<std::string_view> lemmas;
  for (const auto& [key, n] : counts_) lemmas.insert(key.lemma);
  return lemmas.size();
}

SubCorpusStats accumulate(std::span<const Token> tokens, const DomainId& domain,
                          SubCorpusStats into) {
  if (into.domain() != domain)
    throw InputError("accumulate: table for domain '" + into.domain().str() +
                     "' cannot take tokens of domain '" + domain.str() + "'");
  for (const auto& t : tokens) into.add(t);
  return into;
}

SubCorpusStats merge(SubCorpusStats a, const SubCorpusStats& b) {
  if (a.domain_ != b.domain_)
    throw InputError("merge: domain mismatch ('" + a.domain_.str() + "' vs '" + b.domain_.str() +
                     "')");
  for (const auto& [key, n] : b.counts_) a.counts_[key] += n;
  for (const auto& [s, n] : b.surface_counts_) a.surface_counts_[s] += n;
  a.token_count_ += b.token_count_;
  return a;
}

CorpusStats::CorpusStats(std::vector<SubCorpusStats> subcorpora)
    : subcorpora_(std::move(subcorpora)) {
  if (subcorpora_.empty()) throw InputError("corpus has no sub-corpora");
  std::set<DomainId> seen;
  for (const auto& s : subcorpora_) {
    if (!seen.insert(s.domain()).second)
      throw InputError("duplicate domain '" + s.domain().str() + "'");
    if (s.token_count() == 0) throw InputError("domain '" + s.domain().str() + "' has no tokens");
    total_tokens_ += s.token_count();
  }
}

std::vector<std::uint64_t> CorpusStats::subcorpus_sizes() const {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(subcorpora_.size());
  for (const auto& s : subcorpora_) sizes.push_back(s.token_count());
  return sizes;
}

std::vector<DomainId> CorpusStats::domains() const {
  std::vector<DomainId> ids;
  ids.reserve(subcorpora_.size());
  for (const auto& s : subcorpora_) ids.push_back(s.domain());
  return ids;
}

std::map<LemmaPos, LemmaTotal> lemma_totals(const CorpusStats& corpus) {
  const auto n = corpus.size();
  std::map<LemmaPos, LemmaTotal> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [key, count] : corpus.subcorpora()[i].counts()) {
      auto& row = out[key];
      if (row.per_domain.empty()) row.per_domain.assign(n, 0);
      row.per_domain[i] += count;
      row.total += count;
    }
  }
  return out;
}

std::unordered_map<std::string, std::uint64_t> lemma_level_counts(const CorpusStats& corpus) {
  std::unordered_map<std::string, std::uint64_t> out;
  for (const auto& sub : corpus.subcorpora())
    for (const auto& [key, count] : sub.counts()) out[key.lemma] += count;
  return out;
}

CorpusSummary summarize(const CorpusStats& corpus) {
  CorpusSummary summary;
  std::unordered_set<std::string> surfaces, lemmas;
  std::unordered_set<LemmaPos, LemmaPosHash> keys;
  for (const auto& sub : corpus.subcorpora()) {
    TypeCounts tc{sub.token_count(), sub.surface_types(), sub.lemma_types(), sub.lemma_pos_types()};
    summary.domains.emplace_back(sub.domain(), tc);
    summary.total.tokens += tc.tokens;
    summary.total.surface_types += tc.surface_types;
    summary.total.lemma_types += tc.lemma_types;
    summary.total.lemma_pos_types += tc.lemma_pos_types;
    for (const auto& [s, n] : sub.surface_counts()) surfaces.insert(s);
    for (const auto& [k, n] : sub.counts()) {
      lemmas.insert(k.lemma);
      keys.insert(k);
    }
  }
  summary.distinct = {corpus.total_tokens(), surfaces.size(), lemmas.size(), keys.size()};
  return summary;
}

void write_stats_tsv(std::ostream& out, const CorpusStats& corpus) {
  for (const auto& sub : corpus.subcorpora()) {
    std::vector<std::pair<LemmaPos, std::uint64_t>> rows(sub.counts().begin(), sub.counts().end());
    std::sort(rows.begin(), rows.end());
    for (const auto& [k, n] : rows)
      out << "L\t" << sub.domain().str() << '\t' << k.lemma << '\t' << k.pos << '\t' << n << '\n';
    std::vector<std::pair<std::string, std::uint64_t>> surf(sub.surface_counts().begin(),
                                                            sub.surface_counts().end());
    std::sort(surf.begin(), surf.end());
    for (const auto& [s, n] : surf) out << "S\t" << sub.domain().str() << '\t' << s << '\t' << n << '\n';
  }
}

CorpusStats read_stats_tsv(std::istream& in, const std::string& source) {
  std::vector<SubCorpusStats> subs;
  auto sub_for = [&](std::string_view d) -> SubCorpusStats& {
    for (auto& s : subs)
      if (s.domain().str() == d) return s;
    return subs.emplace_back(DomainId(std::string(d)));
  };
  auto parse_n = [&](std::string_view s, std::size_t lineno) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw ParseError(source, lineno, "bad count '" + std::string(s) + "'");
    return v;
  };
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols[0] == "L" && cols.size() == 5 && !cols[1].empty()) {
      sub_for(cols[1]).add_count(LemmaPos{std::string(cols[2]), std::string(cols[3])},
                                 parse_n(cols[4], lineno));
    } else if (cols[0] == "S" && cols.size() == 4 && !cols[1].empty()) {
      sub_for(cols[1]).add_surface_count(std::string(cols[2]), parse_n(cols[3], lineno));
    } else {
      throw ParseError(source, lineno, "expected an L or S row");
    }
  }
  return CorpusStats(std::move(subs));
}

}  // namespace awl
