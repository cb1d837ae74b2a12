#pragma once

// Random corpora for property and oracle tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "awl/ingest.hpp"
#include "awl/metrics.hpp"
#include "awl/stats.hpp"

namespace awl::testing {

struct SyntheticCorpus {
  std::vector<DomainId> domains;
  // documents[d] holds the documents of domain d, each a token sequence.
  std::vector<std::vector<std::vector<Token>>> documents;
  std::unordered_map<std::string, std::uint64_t> general_counts;
  std::uint64_t general_total = 0;

  std::vector<std::vector<Token>> tokens_by_domain() const {
    std::vector<std::vector<Token>> out(documents.size());
    for (std::size_t d = 0; d < documents.size(); ++d)
      for (const auto& doc : documents[d]) out[d].insert(out[d].end(), doc.begin(), doc.end());
    return out;
  }

  CorpusStats stats() const {
    std::vector<SubCorpusStats> subs;
    for (std::size_t d = 0; d < domains.size(); ++d) {
      SubCorpusStats s(domains[d]);
      for (const auto& doc : documents[d]) s = accumulate(doc, domains[d], std::move(s));
      subs.push_back(std::move(s));
    }
    return CorpusStats(std::move(subs));
  }

  GeneralFrequencyTable general() const { return GeneralFrequencyTable(general_counts, general_total); }
};

inline SyntheticCorpus make_corpus(std::mt19937_64& rng, std::size_t n_domains = 4,
                                   std::size_t max_tokens = 500, std::size_t max_types = 40) {
  static const std::vector<std::string> kPos = {"NOUN", "NOUN", "VERB", "ADJ", "ADV", "PROPN", "NUM"};
  auto uni = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  SyntheticCorpus c;
  for (std::size_t d = 0; d < n_domains; ++d) c.domains.emplace_back("D" + std::to_string(d));

  // Lemma inventory; some lemmas share a form across two POS.
  const std::size_t n_types = uni(2, max_types);
  std::vector<LemmaPos> types;
  for (std::size_t i = 0; i < n_types; ++i) {
    const std::size_t lemma_id = uni(0, n_types);
    types.push_back({"w" + std::to_string(lemma_id), kPos[uni(0, kPos.size() - 1)]});
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());

  // Per-type domain preference: even, skewed, or single-domain.
  std::vector<std::vector<double>> pref(types.size(), std::vector<double>(n_domains));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (auto& p : pref) {
    const auto mode = uni(0, 2);
    for (std::size_t d = 0; d < n_domains; ++d) p[d] = mode == 0 ? 1.0 : u01(rng) + 0.01;
    if (mode == 2) {
      std::fill(p.begin(), p.end(), 0.0);
      p[uni(0, n_domains - 1)] = 1.0;
    }
  }
  std::vector<double> type_weight(types.size());
  for (auto& w : type_weight) w = std::pow(u01(rng), 2.0) + 0.001;

  const std::size_t total = uni(n_domains * 4, max_tokens);
  std::vector<std::vector<Token>> by_domain(n_domains);
  std::discrete_distribution<std::size_t> pick_type(type_weight.begin(), type_weight.end());
  for (std::size_t i = 0; i < total; ++i) {
    const auto t = pick_type(rng);
    std::discrete_distribution<std::size_t> pick_domain(pref[t].begin(), pref[t].end());
    const auto d = pick_domain(rng);
    by_domain[d].push_back(Token{types[t].lemma, types[t].lemma, types[t].pos});
  }
  // Every domain must be non-empty.
  for (std::size_t d = 0; d < n_domains; ++d)
    if (by_domain[d].empty()) by_domain[d].push_back(Token{"filler", "filler", "PUNCT"});

  c.documents.resize(n_domains);
  for (std::size_t d = 0; d < n_domains; ++d) {
    auto& toks = by_domain[d];
    std::shuffle(toks.begin(), toks.end(), rng);
    std::size_t pos = 0;
    while (pos < toks.size()) {
      const auto len = std::min(toks.size() - pos, uni(1, 60));
      c.documents[d].emplace_back(toks.begin() + static_cast<std::ptrdiff_t>(pos),
                                  toks.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
  }

  // General list: some lemmas missing, some frequent, plus unrelated words.
  for (const auto& t : types)
    if (uni(0, 3) != 0) c.general_counts[t.lemma] = uni(0, 20000);
  c.general_counts["general_only"] = uni(1, 50000);
  std::uint64_t sum = 0;
  for (const auto& [k, v] : c.general_counts) sum += v;
  c.general_total = sum + uni(1, 2000000);
  return c;
}

inline Thresholds random_thresholds(std::mt19937_64& rng, std::size_t n_domains) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Thresholds t;
  t.ratio_min = 3.0 * u(rng);
  t.range_fraction = u(rng);
  t.range_min_domains = std::uniform_int_distribution<int>(0, static_cast<int>(n_domains))(rng);
  t.dispersion_min = u(rng);
  t.discipline_max_mult = 1.0 + 4.0 * u(rng);
  t.min_freq_pm = 20000.0 * u(rng);
  t.allowed_pos = {"NOUN", "VERB", "ADJ", "ADV"};
  if (u(rng) < 0.3) t.allowed_pos.insert("PROPN");
  return t;
}

}  // namespace awl::testing
