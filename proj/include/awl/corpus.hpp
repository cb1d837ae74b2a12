#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "awl/ingest.hpp"
#include "awl/stats.hpp"

namespace awl {

struct CorpusLoadOptions {
  const LemmaLexicon* lexicon = nullptr;
  Normalizer normalize;
  std::vector<std::string> placeholder_patterns;
  unsigned threads = 1;
};

struct DocumentFile {
  DocumentMeta meta;
  std::filesystem::path path;
};

// Lists `<root>/<domain>/<doc_id>.conllu` (and `.txt`, unless a `.conllu`
// with the same stem exists), domains and documents in sorted order. Throws
// InputError if the root is missing or holds no documents.
std::vector<DocumentFile> list_corpus(const std::filesystem::path& root);

// Tokens of one document with lexicon overrides applied.
std::vector<Token> load_document(const DocumentFile& doc, const CorpusLoadOptions& options,
                                 std::vector<std::string>* warnings = nullptr);

// Parses all documents (in parallel when options.threads > 1) and returns
// per-domain statistics. The result does not depend on the thread count.
CorpusStats load_corpus(const std::filesystem::path& root, const CorpusLoadOptions& options,
                        std::vector<std::string>* warnings = nullptr);

}  // namespace awl
