#include "awl/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>

#include <unicode/locid.h>
#include <unicode/unistr.h>

#include "awl/errors.hpp"

namespace awl {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Multi-byte punctuation stripped from token edges.
constexpr std::array<std::string_view, 14> kUnicodePunct = {
    "“", "”", "„", "‘", "’", "‚", "«",
    "»", "–", "—", "…", "·", "‹", "›"};

std::size_t punct_prefix(std::string_view s) {
  if (s.empty()) return 0;
  auto c = static_cast<unsigned char>(s.front());
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUnicodePunct)
    if (s.starts_with(p)) return p.size();
  return 0;
}

std::size_t punct_suffix(std::string_view s) {
  if (s.empty()) return 0;
  auto c = static_cast<unsigned char>(s.back());
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUnicodePunct)
    if (s.ends_with(p)) return p.size();
  return 0;
}

}  // namespace

std::string to_lower(std::string_view s) {
  bool ascii = true;
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) {
    std::string out(s);
    for (char& c : out)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
  }
  auto u = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

bool has_whitespace(std::string_view s) {
  for (char c : s)
    if (is_ascii_space(c)) return true;
  // U+00A0 NO-BREAK SPACE
  return s.find("\xC2\xA0") != std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view strip_punctuation(std::string_view token) {
  for (std::size_t n; (n = punct_prefix(token)) > 0;) token.remove_prefix(n);
  for (std::size_t n; (n = punct_suffix(token)) > 0;) token.remove_suffix(n);
  return token;
}

void Normalizer::add_replacement(std::string from, std::string to) {
  if (from.empty()) throw InputError("normalization: empty source string");
  replacements_.emplace_back(std::move(from), std::move(to));
}

std::string Normalizer::operator()(std::string_view s) const {
  std::string out = to_lower(s);
  for (const auto& [from, to] : replacements_) {
    std::size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

Normalizer Normalizer::load(std::istream& in, const std::string& source) {
  Normalizer n;
  std::string line;
  std::size_t lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 2 || cols[0].empty())
      throw ParseError(source, lineno, "expected `from<TAB>to`");
    // Both sides are lowercased so the replacement applies after to_lower().
    n.add_replacement(to_lower(cols[0]), to_lower(cols[1]));
  }
  return n;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace awl
