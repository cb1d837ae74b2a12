#include "awl/ingest.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <regex>
#include <sstream>

#include "awl/errors.hpp"

namespace awl {

namespace {

bool is_tag_name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-' || c == '.' || c == ':';
}

// Length of a `<NAME>`, `</NAME>` or `{NAME}` span starting at `i`, or 0.
std::size_t markup_span(std::string_view s, std::size_t i) {
  const char open = s[i];
  const char close = open == '<' ? '>' : '}';
  std::size_t j = i + 1;
  if (open == '<' && j < s.size() && s[j] == '/') ++j;
  const std::size_t name_start = j;
  while (j < s.size() && is_tag_name_char(s[j])) ++j;
  if (j == name_start || j >= s.size() || s[j] != close) return 0;
  return j + 1 - i;
}

std::string strip_pass(std::string_view s, std::vector<std::string>* warnings) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const char c = s[i];
    if (c == '<' || c == '{') {
      if (std::size_t n = markup_span(s, i); n > 0) {
        out.push_back(' ');
        i += n;
        continue;
      }
      const char close = c == '<' ? '>' : '}';
      if (warnings && s.find(close, i + 1) == std::string_view::npos)
        warnings->push_back(std::string("unclosed '") + c + "' at byte " + std::to_string(i) +
                            "; kept as text");
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (auto word : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  }
  return out;
}

std::string clean_lemma(std::string lemma) {
  for (char& c : lemma)
    if (c == ' ' || c == '\t') c = '_';
  return lemma;
}

}  // namespace

std::string strip_markup(std::string_view raw_text, std::span<const std::string> placeholder_patterns,
                         std::vector<std::string>* warnings) {
  std::vector<std::regex> extra;
  extra.reserve(placeholder_patterns.size());
  for (const auto& p : placeholder_patterns) extra.emplace_back(p, std::regex::ECMAScript);

  std::string current(raw_text);
  // Extra patterns may expose new spans once a match is removed; iterate to a
  // fixed point so the function stays idempotent.
  for (int pass = 0; pass < 32; ++pass) {
    std::string next = current;
    for (const auto& re : extra) next = std::regex_replace(next, re, " ");
    next = strip_pass(next, pass == 0 ? warnings : nullptr);
    next = collapse_whitespace(next);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::vector<Token> read_annotated_document(std::istream& in, const DocumentMeta& meta,
                                           const Normalizer& normalize) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() < 4)
      throw ParseError(meta.doc_id, lineno,
                       "expected at least 4 tab-separated columns, found " +
                           std::to_string(cols.size()));
    const auto id = cols[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) continue;
    if (cols[1].empty()) throw ParseError(meta.doc_id, lineno, "empty FORM column");

    Token t;
    t.surface = std::string(cols[1]);
    auto lemma = cols[2];
    if (lemma.empty() || (lemma == "_" && cols[1] != "_")) lemma = cols[1];
    t.lemma = clean_lemma(normalize(lemma));
    t.pos = (cols[3].empty() || cols[3] == "_") ? "X" : std::string(cols[3]);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<Token> read_raw_document(std::istream& in, const DocumentMeta& meta,
                                     const Normalizer& normalize,
                                     std::span<const std::string> placeholder_patterns,
                                     std::vector<std::string>* warnings) {
  std::string raw{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<std::string> local;
  auto text = strip_markup(raw, placeholder_patterns, warnings ? &local : nullptr);
  if (warnings)
    for (auto& w : local) warnings->push_back(meta.doc_id + ": " + w);

  std::vector<Token> tokens;
  for (auto word : split_whitespace(text)) {
    word = strip_punctuation(word);
    if (word.empty()) continue;
    Token t;
    t.surface = std::string(word);
    t.lemma = clean_lemma(normalize(word));
    t.pos = "X";
    tokens.push_back(std::move(t));
  }
  return tokens;
}

void LemmaLexicon::add(std::string_view surface, std::string_view lemma,
                       std::optional<std::string> pos, const Normalizer& normalize) {
  entries_[normalize(surface)] = Entry{clean_lemma(normalize(lemma)), std::move(pos)};
}

const LemmaLexicon::Entry* LemmaLexicon::find(std::string_view surface,
                                              const Normalizer& normalize) const {
  if (entries_.empty()) return nullptr;
  auto it = entries_.find(normalize(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

LemmaLexicon LemmaLexicon::load(std::istream& in, const Normalizer& normalize,
                                const std::string& source) {
  LemmaLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() < 2 || cols.size() > 3 || trim(cols[0]).empty() || trim(cols[1]).empty())
      throw ParseError(source, lineno, "expected `surface<TAB>lemma[<TAB>pos]`");
    std::optional<std::string> pos;
    if (cols.size() == 3 && !trim(cols[2]).empty()) pos = std::string(trim(cols[2]));
    lex.add(trim(cols[0]), trim(cols[1]), std::move(pos), normalize);
  }
  return lex;
}

Token resolve_lemma(Token token, const LemmaLexicon& lexicon, const Normalizer& normalize) {
  if (const auto* e = lexicon.find(token.surface, normalize)) {
    token.lemma = e->lemma;
    if (e->pos) token.pos = *e->pos;
  }
  return token;
}

GeneralFrequencyTable::GeneralFrequencyTable(std::unordered_map<std::string, std::uint64_t> entries,
                                             std::uint64_t total_tokens)
    : entries_(std::move(entries)), total_tokens_(total_tokens) {
  if (total_tokens_ == 0) throw InputError("frequency list total must be positive");
}

std::optional<std::uint64_t> GeneralFrequencyTable::count(const std::string& lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<std::uint64_t> parse_count(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

GeneralFrequencyTable load_frequency_list(std::istream& in, const Normalizer& normalize,
                                          const std::string& source) {
  std::unordered_map<std::string, std::uint64_t> entries;
  std::optional<std::uint64_t> declared_total;
  std::uint64_t sum = 0;
  bool first = true;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const bool was_first = first;
    first = false;
    if (line.front() == '#') {
      if (was_first && line.starts_with("#total")) {
        auto cols = split(line, '\t');
        auto n = cols.size() == 2 && cols[0] == "#total" ? parse_count(cols[1]) : std::nullopt;
        if (!n) throw ParseError(source, lineno, "malformed `#total<TAB>N` header");
        declared_total = *n;
      }
      continue;
    }
    auto cols = split(line, '\t');
    if (cols.size() < 2) throw ParseError(source, lineno, "expected `lemma<TAB>count`");
    auto lemma = trim(cols[0]);
    if (lemma.empty()) throw ParseError(source, lineno, "empty lemma");
    auto count = parse_count(cols[1]);
    if (!count)
      throw ParseError(source, lineno, "count is not a non-negative integer: '" +
                                           std::string(cols[1]) + "'");
    entries[clean_lemma(normalize(lemma))] += *count;
    sum += *count;
  }
  if (entries.empty()) throw InputError(source + ": empty frequency list");
  const auto total = declared_total.value_or(sum);
  if (total == 0) throw InputError(source + ": frequency list total is zero");
  return GeneralFrequencyTable(std::move(entries), total);
}

std::unordered_set<std::string> load_exclusion_list(std::istream& in, const Normalizer& normalize) {
  std::unordered_set<std::string> out;
  std::string line;
  while (read_line(in, line)) {
    auto l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    out.insert(clean_lemma(normalize(l)));
  }
  return out;
}

}  // namespace awl
