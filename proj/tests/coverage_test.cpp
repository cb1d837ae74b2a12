#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "awl/corpus.hpp"
#include "awl/coverage.hpp"
#include "awl/errors.hpp"
#include "support/synthetic.hpp"

namespace awl {
namespace {

CorpusStats fixture() { return load_corpus(AWL_TEST_DATA "/coverage/corpus", {}); }

const std::vector<LemmaPos> kFixtureList = {{"analiză", "NOUN"}, {"propune", "VERB"}};

TEST(Coverage, HandCountedFixture) {
  const auto r = coverage(kFixtureList, fixture(), CoverageKey::lemma_pos);
  ASSERT_EQ(r.domains.size(), 2u);
  EXPECT_EQ(r.domains[0].covered, 4u);
  EXPECT_EQ(r.domains[1].covered, 2u);
  EXPECT_DOUBLE_EQ(r.domains[0].percent(), 40.0);
  EXPECT_DOUBLE_EQ(r.domains[1].percent(), 20.0);
  EXPECT_DOUBLE_EQ(r.percent(), 30.0);
  EXPECT_DOUBLE_EQ(r.domains[0].pos_percent("NOUN"), 30.0);
  EXPECT_DOUBLE_EQ(r.domains[0].pos_percent("VERB"), 10.0);
}

TEST(Coverage, FullAndEmptyLists) {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 20; ++iter) {
    const auto corpus = testing::make_corpus(rng).stats();
    std::vector<LemmaPos> all;
    for (const auto& [k, t] : lemma_totals(corpus)) all.push_back(k);
    for (auto by : {CoverageKey::lemma, CoverageKey::lemma_pos}) {
      const auto full = coverage(all, corpus, by);
      EXPECT_DOUBLE_EQ(full.percent(), 100.0);
      for (const auto& d : full.domains) EXPECT_DOUBLE_EQ(d.percent(), 100.0);
      const auto none = coverage({}, corpus, by);
      EXPECT_EQ(none.percent(), 0.0);
      for (const auto& d : none.domains) EXPECT_EQ(d.percent(), 0.0);
    }
  }
}

TEST(Coverage, LemmaModeIgnoresPos) {
  const std::vector<LemmaPos> list = {{"analiză", "VERB"}};
  EXPECT_EQ(coverage(list, fixture(), CoverageKey::lemma).covered, 5u);
  EXPECT_EQ(coverage(list, fixture(), CoverageKey::lemma_pos).covered, 0u);
}

TEST(Coverage, PropertiesOnRandomCorpora) {
  std::mt19937_64 rng(89);
  for (int iter = 0; iter < 100; ++iter) {
    const auto corpus = testing::make_corpus(rng).stats();
    std::vector<LemmaPos> keys;
    for (const auto& [k, t] : lemma_totals(corpus)) keys.push_back(k);
    std::shuffle(keys.begin(), keys.end(), rng);
    std::vector<LemmaPos> list;
    double prev_overall = 0.0;
    std::vector<double> prev_domain(corpus.size(), 0.0);
    for (const auto& k : keys) {
      list.push_back(k);
      const auto r = coverage(list, corpus, CoverageKey::lemma_pos);
      // Monotone in the list.
      EXPECT_GE(r.percent(), prev_overall);
      prev_overall = r.percent();
      double weighted = 0.0;
      for (std::size_t d = 0; d < r.domains.size(); ++d) {
        const auto& dc = r.domains[d];
        EXPECT_GE(dc.percent(), prev_domain[d]);
        prev_domain[d] = dc.percent();
        // POS rows add up to the domain total.
        double pos_sum = 0.0;
        for (const auto& [p, n] : dc.covered_by_pos) pos_sum += dc.pos_percent(p);
        EXPECT_NEAR(pos_sum, dc.percent(), 1e-9);
        weighted += dc.percent() * static_cast<double>(dc.token_count);
      }
      EXPECT_NEAR(weighted / static_cast<double>(r.total_tokens), r.percent(), 1e-9);
    }
  }
}

TEST(Coverage, FlagsLemmasWithSeveralPos) {
  SubCorpusStats a{DomainId("A")}, b{DomainId("B")};
  a.add_count({"important", "ADJ"}, 2);
  a.add_count({"important", "ADV"}, 5);
  b.add_count({"metodă", "NOUN"}, 3);
  const CorpusStats corpus({a, b});
  const std::vector<LemmaPos> list = {{"important", "ADJ"}, {"metodă", "NOUN"}};
  const auto r = coverage(list, corpus, CoverageKey::lemma_pos);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].lemma, "important");
  EXPECT_EQ(r.diagnostics[0].corpus_pos_counts.at("ADV"), 5u);
  EXPECT_EQ(r.covered, 5u);
}

TEST(Coverage, TsvHasTableShape) {
  std::ostringstream out;
  write_coverage_tsv(out, coverage(kFixtureList, fixture(), CoverageKey::lemma_pos));
  EXPECT_EQ(out.str(),
            "pos\tA\tB\tOverall\n"
            "VERB\t10\t0\t5\n"
            "NOUN\t30\t20\t25\n"
            "ADJ\t0\t0\t0\n"
            "ADV\t0\t0\t0\n"
            "Total\t40\t20\t30\n");
}

TEST(CoverageAgainstTable, Arithmetic) {
  const GeneralFrequencyTable t({{"a", 30}, {"b", 20}, {"c", 50}}, 100);
  EXPECT_DOUBLE_EQ(coverage_against_frequency_table({"c"}, t), 50.0);
  EXPECT_DOUBLE_EQ(coverage_against_frequency_table({"zzz"}, t), 0.0);
  EXPECT_DOUBLE_EQ(coverage_against_frequency_table({}, t), 0.0);
}

TEST(CoverageAgainstTable, MatchesNaiveLoop) {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 100; ++iter) {
    std::unordered_map<std::string, std::uint64_t> entries;
    std::uint64_t sum = 0;
    const int n = std::uniform_int_distribution<int>(1, 50)(rng);
    for (int i = 0; i < n; ++i) {
      const auto c = std::uniform_int_distribution<std::uint64_t>(0, 1000)(rng);
      entries["w" + std::to_string(i)] = c;
      sum += c;
    }
    const std::uint64_t total = sum + std::uniform_int_distribution<std::uint64_t>(1, 1000)(rng);
    const GeneralFrequencyTable table(entries, total);
    std::unordered_set<std::string> list;
    std::uint64_t naive = 0;
    for (const auto& [k, v] : entries)
      if (rng() % 2) {
        list.insert(k);
        naive += v;
      }
    list.insert("not_in_table");
    EXPECT_NEAR(coverage_against_frequency_table(list, table),
                100.0 * static_cast<double>(naive) / static_cast<double>(total), 1e-12);
  }
}

}  // namespace
}  // namespace awl
