#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "awl/text.hpp"
#include "awl/token.hpp"

namespace awl {

// Removes `<NAME>`/`</NAME>` tags and `{NAME}` placeholders, plus any span
// matching one of `placeholder_patterns` (ECMAScript regexes), then collapses
// whitespace runs to one space and trims both ends. A `<` or `{` that never
// closes is kept verbatim and reported through `warnings`.
std::string strip_markup(std::string_view raw_text,
                         std::span<const std::string> placeholder_patterns = {},
                         std::vector<std::string>* warnings = nullptr);

// CoNLL-U reader. Uses FORM, LEMMA and UPOS; skips comments, blank lines,
// multiword ranges (`3-4`) and empty nodes (`5.1`).
std::vector<Token> read_annotated_document(std::istream& in, const DocumentMeta& meta,
                                           const Normalizer& normalize = {});

// Plain-text document: markup stripped, whitespace tokenized, edge punctuation
// removed. Lemma is the normalized surface form and POS is "X".
std::vector<Token> read_raw_document(std::istream& in, const DocumentMeta& meta,
                                     const Normalizer& normalize = {},
                                     std::span<const std::string> placeholder_patterns = {},
                                     std::vector<std::string>* warnings = nullptr);

// Surface form -> preferred lemma (and optionally POS). Lookup is
// case-insensitive on the surface form.
class LemmaLexicon {
 public:
  struct Entry {
    std::string lemma;
    std::optional<std::string> pos;
  };

  void add(std::string_view surface, std::string_view lemma,
           std::optional<std::string> pos = std::nullopt,
           const Normalizer& normalize = {});

  const Entry* find(std::string_view surface, const Normalizer& normalize = {}) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // TSV `surface<TAB>lemma[<TAB>pos]`. Later lines override earlier ones.
  static LemmaLexicon load(std::istream& in, const Normalizer& normalize = {},
                           const std::string& source = "<lexicon>");

 private:
  std::unordered_map<std::string, Entry> entries_;
};

Token resolve_lemma(Token token, const LemmaLexicon& lexicon, const Normalizer& normalize = {});

// Lemma -> raw count from a general-language reference corpus.
class GeneralFrequencyTable {
 public:
  GeneralFrequencyTable(std::unordered_map<std::string, std::uint64_t> entries,
                        std::uint64_t total_tokens);

  std::optional<std::uint64_t> count(const std::string& lemma) const;
  std::uint64_t total_tokens() const { return total_tokens_; }
  const std::unordered_map<std::string, std::uint64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const GeneralFrequencyTable&, const GeneralFrequencyTable&) = default;

 private:
  std::unordered_map<std::string, std::uint64_t> entries_;
  std::uint64_t total_tokens_;
};

// TSV `lemma<TAB>count`; an optional first line `#total<TAB>N` declares the
// corpus size, otherwise it is the sum of counts. Duplicate lemmas are summed.
GeneralFrequencyTable load_frequency_list(std::istream& in, const Normalizer& normalize = {},
                                          const std::string& source = "<frequency list>");

// One lemma per line, `#` comments.
std::unordered_set<std::string> load_exclusion_list(std::istream& in,
                                                    const Normalizer& normalize = {});

}  // namespace awl
