#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace awl {

// Full Unicode lowercase mapping (root locale). ASCII input takes a fast path.
std::string to_lower(std::string_view s);

bool has_whitespace(std::string_view s);

std::string_view trim(std::string_view s);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split(std::string_view line, char sep);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> split_whitespace(std::string_view text);

// Removes leading and trailing punctuation (ASCII and common typographic
// quotes, dashes and ellipses) from a raw token.
std::string_view strip_punctuation(std::string_view token);

// Lowercasing followed by optional literal substring replacements, applied in
// file order. Used to unify spelling variants such as the cedilla and comma
// forms of Romanian s/t.
class Normalizer {
 public:
  Normalizer() = default;

  void add_replacement(std::string from, std::string to);
  bool empty() const { return replacements_.empty(); }

  std::string operator()(std::string_view s) const;

  // TSV lines `from<TAB>to`; `#` comments and blank lines ignored.
  static Normalizer load(std::istream& in, const std::string& source = "<normalization>");

 private:
  std::vector<std::pair<std::string, std::string>> replacements_;
};

// Reads a whole stream line by line, stripping a trailing '\r'.
bool read_line(std::istream& in, std::string& line);

// Shortest round-trip decimal form; +infinity as "inf".
std::string format_double(double v);

}  // namespace awl
