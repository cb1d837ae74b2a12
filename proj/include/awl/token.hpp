#pragma once

#include <compare>
#include <string>

#include "awl/errors.hpp"

namespace awl {

// Disciplinary sub-corpus label, e.g. "EC" or "LG".
class DomainId {
 public:
  DomainId() = default;
  explicit DomainId(std::string id) : id_(std::move(id)) {
    if (id_.empty()) throw InputError("domain id must not be empty");
  }

  const std::string& str() const { return id_; }

  friend auto operator<=>(const DomainId&, const DomainId&) = default;
  friend bool operator==(const DomainId&, const DomainId&) = default;

 private:
  std::string id_;
};

/// One annotated token. `lemma` is lowercase and contains no whitespace.
struct Token {
  std::string surface;
  std::string lemma;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

struct DocumentMeta {
  std::string doc_id;
  DomainId domain;
};

}  // namespace awl
