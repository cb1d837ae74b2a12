#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "awl/token.hpp"

namespace awl {

struct LemmaPos {
  std::string lemma;
  std::string pos;

  friend auto operator<=>(const LemmaPos&, const LemmaPos&) = default;
  friend bool operator==(const LemmaPos&, const LemmaPos&) = default;
};

struct LemmaPosHash {
  std::size_t operator()(const LemmaPos& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.lemma);
    return h ^ (std::hash<std::string>{}(k.pos) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

using CountTable = std::unordered_map<LemmaPos, std::uint64_t, LemmaPosHash>;

// Per-domain frequency table. Forms a commutative monoid under merge() for a
// fixed domain, so documents can be counted on any number of workers.
class SubCorpusStats {
 public:
  explicit SubCorpusStats(DomainId domain) : domain_(std::move(domain)) {}

  const DomainId& domain() const { return domain_; }
  std::uint64_t token_count() const { return token_count_; }
  const CountTable& counts() const { return counts_; }
  const std::unordered_map<std::string, std::uint64_t>& surface_counts() const {
    return surface_counts_;
  }

  std::uint64_t count(const LemmaPos& key) const;

  void add(const Token& token);
  // Import path for pre-aggregated tables; keeps token_count in step.
  void add_count(const LemmaPos& key, std::uint64_t n);
  void add_surface_count(const std::string& surface, std::uint64_t n);

  std::size_t lemma_pos_types() const { return counts_.size(); }
  std::size_t lemma_types() const;
  std::size_t surface_types() const { return surface_counts_.size(); }

  friend bool operator==(const SubCorpusStats&, const SubCorpusStats&) = default;

 private:
  friend SubCorpusStats merge(SubCorpusStats a, const SubCorpusStats& b);

  DomainId domain_;
  std::uint64_t token_count_ = 0;
  CountTable counts_;
  // Lowercased surface forms; only used for type statistics.
  std::unordered_map<std::string, std::uint64_t> surface_counts_;
};

SubCorpusStats accumulate(std::span<const Token> tokens, const DomainId& domain,
                          SubCorpusStats into);

// Throws InputError when the domains differ.
SubCorpusStats merge(SubCorpusStats a, const SubCorpusStats& b);

class CorpusStats {
 public:
  // Requires at least one sub-corpus, pairwise distinct domains and a
  // positive token count in every sub-corpus.
  explicit CorpusStats(std::vector<SubCorpusStats> subcorpora);

  const std::vector<SubCorpusStats>& subcorpora() const { return subcorpora_; }
  std::size_t size() const { return subcorpora_.size(); }
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::vector<std::uint64_t> subcorpus_sizes() const;
  std::vector<DomainId> domains() const;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;

 private:
  std::vector<SubCorpusStats> subcorpora_;
  std::uint64_t total_tokens_ = 0;
};

struct LemmaTotal {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_domain;  // one entry per sub-corpus, in corpus order

  friend bool operator==(const LemmaTotal&, const LemmaTotal&) = default;
};

std::map<LemmaPos, LemmaTotal> lemma_totals(const CorpusStats& corpus);

// Academic count per lemma summed across POS.
std::unordered_map<std::string, std::uint64_t> lemma_level_counts(const CorpusStats& corpus);

struct TypeCounts {
  std::uint64_t tokens = 0;
  std::uint64_t surface_types = 0;
  std::uint64_t lemma_types = 0;
  std::uint64_t lemma_pos_types = 0;
};

struct CorpusSummary {
  std::vector<std::pair<DomainId, TypeCounts>> domains;
  TypeCounts total;     // column sums over domains
  TypeCounts distinct;  // types counted once across the whole corpus
};

CorpusSummary summarize(const CorpusStats& corpus);

// Flat export: `L<TAB>domain<TAB>lemma<TAB>pos<TAB>count` and
// `S<TAB>domain<TAB>surface<TAB>count` rows, sorted.
void write_stats_tsv(std::ostream& out, const CorpusStats& corpus);
CorpusStats read_stats_tsv(std::istream& in, const std::string& source = "<stats>");

}  // namespace awl
