#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "awl/ingest.hpp"
#include "awl/stats.hpp"

namespace awl {

enum class CoverageKey { lemma, lemma_pos };

struct DomainCoverage {
  DomainId domain;
  std::uint64_t token_count = 0;
  std::uint64_t covered = 0;
  // Covered tokens per POS of the corpus annotation.
  std::map<std::string, std::uint64_t> covered_by_pos;

  double percent() const;
  double pos_percent(const std::string& pos) const;
};

// A listed lemma that the corpus annotates with more than one POS, or (when
// matching on (lemma, POS)) with a POS the list does not carry.
struct PosDisagreement {
  std::string lemma;
  std::vector<std::string> list_pos;
  std::map<std::string, std::uint64_t> corpus_pos_counts;
};

struct CoverageReport {
  CoverageKey by = CoverageKey::lemma;
  std::vector<DomainCoverage> domains;
  std::uint64_t total_tokens = 0;
  std::uint64_t covered = 0;
  std::vector<PosDisagreement> diagnostics;

  double percent() const;
};

// Token coverage of `list` over the corpus. With CoverageKey::lemma the POS
// of the list keys is ignored.
CoverageReport coverage(std::span<const LemmaPos> list, const CorpusStats& corpus, CoverageKey by);

// Percent of the table's tokens whose lemma is listed; POS plays no part.
double coverage_against_frequency_table(const std::unordered_set<std::string>& list,
                                        const GeneralFrequencyTable& table);

// Rows VERB, NOUN, ADJ, ADV (always), then any other covered POS, then Total;
// one column per domain plus Overall. Percentages at full precision.
void write_coverage_tsv(std::ostream& out, const CoverageReport& report);

}  // namespace awl
