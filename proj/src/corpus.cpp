#include "awl/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "awl/errors.hpp"

namespace fs = std::filesystem;

namespace awl {

std::vector<DocumentFile> list_corpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw InputError("corpus directory not found: " + root.string());

  std::vector<fs::path> domain_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    const auto name = entry.path().filename().string();
    if (entry.is_directory() && !name.starts_with(".")) domain_dirs.push_back(entry.path());
  }
  std::sort(domain_dirs.begin(), domain_dirs.end());

  std::vector<DocumentFile> docs;
  for (const auto& dir : domain_dirs) {
    std::map<std::string, fs::path> by_stem;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const auto& p = entry.path();
      const auto stem = p.stem().string();
      if (stem.starts_with(".")) continue;
      if (p.extension() == ".conllu") {
        by_stem[stem] = p;
      } else if (p.extension() == ".txt") {
        by_stem.try_emplace(stem, p);
      }
    }
    if (by_stem.empty()) continue;
    const DomainId domain(dir.filename().string());
    for (auto& [stem, path] : by_stem)
      docs.push_back(DocumentFile{DocumentMeta{domain.str() + "/" + stem, domain}, path});
  }
  if (docs.empty()) throw InputError("no .conllu or .txt documents under " + root.string());
  return docs;
}

std::vector<Token> load_document(const DocumentFile& doc, const CorpusLoadOptions& options,
                                 std::vector<std::string>* warnings) {
  std::ifstream in(doc.path, std::ios::binary);
  if (!in) throw InputError("cannot read " + doc.path.string());
  std::vector<Token> tokens;
  if (doc.path.extension() == ".conllu")
    tokens = read_annotated_document(in, doc.meta, options.normalize);
  else
    tokens = read_raw_document(in, doc.meta, options.normalize, options.placeholder_patterns,
                               warnings);
  if (options.lexicon && !options.lexicon->empty())
    for (auto& t : tokens) t = resolve_lemma(std::move(t), *options.lexicon, options.normalize);
  return tokens;
}

CorpusStats load_corpus(const fs::path& root, const CorpusLoadOptions& options,
                        std::vector<std::string>* warnings) {
  const auto docs = list_corpus(root);

  std::vector<DomainId> domains;
  std::map<DomainId, std::size_t> domain_index;
  for (const auto& d : docs)
    if (domain_index.try_emplace(d.meta.domain, domains.size()).second)
      domains.push_back(d.meta.domain);

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, docs.size()));
  std::vector<std::vector<SubCorpusStats>> partial(workers);
  for (auto& p : partial)
    for (const auto& d : domains) p.emplace_back(d);
  std::vector<std::vector<std::string>> doc_warnings(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  std::atomic<std::size_t> next{0};

  auto work = [&](std::size_t w) {
    for (std::size_t i; (i = next.fetch_add(1)) < docs.size();) {
      try {
        auto tokens = load_document(docs[i], options, &doc_warnings[i]);
        const auto& dom = docs[i].meta.domain;
        auto& sub = partial[w][domain_index.at(dom)];
        sub = accumulate(tokens, dom, std::move(sub));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (warnings)
    for (auto& dw : doc_warnings) warnings->insert(warnings->end(), dw.begin(), dw.end());

  std::vector<SubCorpusStats> merged;
  for (std::size_t d = 0; d < domains.size(); ++d) {
    SubCorpusStats acc(domains[d]);
    for (auto& p : partial) acc = merge(std::move(acc), p[d]);
    merged.push_back(std::move(acc));
  }
  return CorpusStats(std::move(merged));
}

}  // namespace awl
