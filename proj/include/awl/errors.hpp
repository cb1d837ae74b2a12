#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace awl {

// Unreadable or malformed input data. Maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Bad thresholds or options. Raised before any computation starts.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed. Maps to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace awl
