// awl: academic word list extraction and coverage evaluation.
//
//   awl stats    --corpus DIR [--format tsv|json]
//   awl extract  --corpus DIR --general FILE --out DIR [--config FILE] [threshold flags]
//   awl coverage --list FILE (--corpus DIR | --general FILE) [--by lemma|lemma_pos]
//   awl compare  LIST_A LIST_B [--mapping FILE]
//   awl strip    FILE...
//
// Exit codes: 0 success, 1 input or configuration error, 2 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "awl/config.hpp"
#include "awl/corpus.hpp"
#include "awl/coverage.hpp"
#include "awl/errors.hpp"
#include "awl/pipeline.hpp"
#include "awl/text.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum class Verbosity { quiet, normal, verbose };
Verbosity g_verbosity = Verbosity::normal;

void log_info(const std::string& msg) {
  if (g_verbosity != Verbosity::quiet) std::cerr << msg << '\n';
}
void log_verbose(const std::string& msg) {
  if (g_verbosity == Verbosity::verbose) std::cerr << msg << '\n';
}
void log_warnings(const std::vector<std::string>& warnings) {
  if (warnings.empty()) return;
  log_info("warning: " + std::to_string(warnings.size()) + " warning(s)");
  for (const auto& w : warnings) log_verbose("warning: " + w);
}

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw awl::InputError(std::string("no ") + what + " given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw awl::InputError(std::string("cannot read ") + what + ": " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw awl::InputError("cannot write " + path.string());
  return out;
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

// Config sources in increasing priority: defaults, --config (or AWL_CONFIG),
// command-line flags.
struct ConfigSource {
  std::string config_path;
  awl::ConfigMap overrides;

  void add_flags(CLI::App* cmd, const std::vector<std::string>& keys) {
    cmd->add_option("--config", config_path, "key=value config file (fallback: $AWL_CONFIG)");
    for (const auto& key : keys) {
      std::string flag = "--" + key;
      for (auto& c : flag)
        if (c == '_') c = '-';
      cmd->add_option_function<std::string>(
          flag, [this, key](const std::string& v) { overrides[key] = v; },
          "overrides `" + key + "` from the config file");
    }
  }

  awl::RunConfig resolve() const {
    awl::ConfigMap values;
    std::string path = config_path;
    if (path.empty())
      if (const char* env = std::getenv("AWL_CONFIG"); env && *env) path = env;
    if (!path.empty()) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw awl::ConfigError("cannot read config file: " + path);
      values = awl::parse_config(in, path);
      log_verbose("config: " + path);
    }
    for (const auto& [k, v] : overrides) values[k] = v;
    return awl::apply_config(awl::RunConfig{}, values);
  }
};

struct LoadedInputs {
  awl::Normalizer normalize;
  awl::LemmaLexicon lexicon;
};

LoadedInputs load_support(const awl::RunConfig& cfg) {
  LoadedInputs in;
  if (!cfg.normalization.empty()) {
    auto f = open_input(cfg.normalization, "normalization map");
    in.normalize = awl::Normalizer::load(f, cfg.normalization);
  }
  if (!cfg.lexicon.empty()) {
    auto f = open_input(cfg.lexicon, "lexicon");
    in.lexicon = awl::LemmaLexicon::load(f, in.normalize, cfg.lexicon);
    log_verbose("lexicon: " + std::to_string(in.lexicon.size()) + " entries");
  }
  return in;
}

awl::CorpusStats load_corpus(const awl::RunConfig& cfg, const LoadedInputs& support,
                             unsigned threads) {
  if (cfg.corpus.empty()) throw awl::InputError("no corpus directory given");
  awl::CorpusLoadOptions opts;
  opts.lexicon = &support.lexicon;
  opts.normalize = support.normalize;
  opts.threads = threads;
  std::vector<std::string> warnings;
  auto corpus = awl::load_corpus(cfg.corpus, opts, &warnings);
  log_warnings(warnings);
  log_verbose("corpus: " + std::to_string(corpus.size()) + " domains, " +
              std::to_string(corpus.total_tokens()) + " tokens");
  return corpus;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// --- stats -----------------------------------------------------------------

int run_stats(const ConfigSource& src, const std::string& format, unsigned threads) {
  const auto cfg = src.resolve();
  const auto support = load_support(cfg);
  const auto summary = awl::summarize(load_corpus(cfg, support, threads));

  if (format == "json") {
    auto row = [](const awl::TypeCounts& t) {
      return json{{"tokens", t.tokens},
                  {"surface_types", t.surface_types},
                  {"lemma_types", t.lemma_types},
                  {"lemma_pos_types", t.lemma_pos_types}};
    };
    json j;
    j["domains"] = json::array();
    for (const auto& [d, t] : summary.domains) {
      json r{{"domain", d.str()}};
      r.update(row(t));
      j["domains"].push_back(r);
    }
    j["total"] = row(summary.total);
    j["distinct"] = row(summary.distinct);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "domain\ttokens\tsurface_types\tlemma_types\tlemma_pos_types\n";
    auto row = [](const std::string& name, const awl::TypeCounts& t) {
      std::cout << name << '\t' << t.tokens << '\t' << t.surface_types << '\t' << t.lemma_types
                << '\t' << t.lemma_pos_types << '\n';
    };
    for (const auto& [d, t] : summary.domains) row(d.str(), t);
    row("Total", summary.total);
    row("Distinct", summary.distinct);
  }
  return 0;
}

// --- extract ---------------------------------------------------------------

int run_extract(const ConfigSource& src, const fs::path& out_dir, unsigned threads) {
  const auto cfg = src.resolve();
  if (cfg.general.empty()) throw awl::InputError("no general frequency list given");

  const auto support = load_support(cfg);
  auto general_in = open_input(cfg.general, "general frequency list");
  const auto general = awl::load_frequency_list(general_in, support.normalize, cfg.general);
  std::unordered_set<std::string> exclusions;
  for (const auto& path : cfg.exclusions) {
    auto f = open_input(path, "exclusion list");
    exclusions.merge(awl::load_exclusion_list(f, support.normalize));
  }
  const auto corpus = load_corpus(cfg, support, threads);
  awl::validate(cfg.thresholds, corpus.size());

  awl::ExtractOptions opts;
  opts.measures = cfg.measures;
  opts.threads = threads;
  const auto report = awl::extract_awl(corpus, general, cfg.thresholds, exclusions, opts);
  log_warnings(report.warnings);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  const std::string list_name = "awl.tsv";
  {
    auto out = open_output(out_dir / list_name);
    awl::write_awl_tsv(out, report.entries);
  }

  json j;
  j["config"] = json::object();
  for (const auto& [k, v] : awl::to_config_map(cfg)) j["config"][k] = v;
  const auto& t = report.thresholds;
  j["thresholds"] = {{"ratio_min", number_or_inf(t.ratio_min)},
                     {"range_fraction", number_or_inf(t.range_fraction)},
                     {"range_min_domains", t.range_min_domains},
                     {"dispersion_min", number_or_inf(t.dispersion_min)},
                     {"discipline_max_mult", number_or_inf(t.discipline_max_mult)},
                     {"min_freq_pm", number_or_inf(t.min_freq_pm)},
                     {"allowed_pos", t.allowed_pos}};
  j["measures"] = {{"dispersion_basis", awl::to_string(report.options.dispersion_basis)},
                   {"ratio_level", awl::to_string(report.options.ratio_level)},
                   {"dispersion_sd", awl::to_string(report.options.dispersion_sd)}};
  j["corpus"] = {{"total_tokens", corpus.total_tokens()}, {"domains", json::array()}};
  for (const auto& sub : corpus.subcorpora())
    j["corpus"]["domains"].push_back({{"domain", sub.domain().str()}, {"tokens", sub.token_count()}});
  j["general_total_tokens"] = general.total_tokens();
  j["candidate_count"] = report.candidate_count;
  j["eliminations"] = json::array();
  for (std::size_t i = 0; i < awl::kFilterCount; ++i)
    j["eliminations"].push_back({{"filter", awl::filter_name(static_cast<awl::Filter>(i))},
                                 {"count", report.eliminations[i]}});
  j["final_count"] = report.entries.size();
  j["pos_distribution"] = awl::pos_distribution(report.entries);
  j["list"] = list_name;
  j["warnings"] = report.warnings;
  {
    auto out = open_output(out_dir / "report.json");
    out << j.dump(2) << '\n';
  }

  std::ostringstream summary;
  summary << "candidates " << report.candidate_count << "; eliminated:";
  for (std::size_t i = 0; i < awl::kFilterCount; ++i)
    summary << (i ? ", " : " ") << awl::filter_name(static_cast<awl::Filter>(i)) << " "
            << report.eliminations[i];
  summary << "; kept " << report.entries.size();
  log_info(summary.str());
  return 0;
}

// --- coverage --------------------------------------------------------------

int run_coverage(const ConfigSource& src, const std::string& list_path, const std::string& by_flag,
                 const std::string& format, const std::string& diagnostics_path, unsigned threads) {
  auto cfg = src.resolve();
  const bool corpus_mode = !cfg.corpus.empty();
  const bool table_mode = !cfg.general.empty();
  if (corpus_mode == table_mode)
    throw awl::InputError("coverage needs exactly one of --corpus or --general");

  const auto support = load_support(cfg);
  auto list_in = open_input(list_path, "word list");
  const auto list = awl::load_word_list(list_in, support.normalize, list_path);

  if (table_mode) {
    auto f = open_input(cfg.general, "general frequency list");
    const auto table = awl::load_frequency_list(f, support.normalize, cfg.general);
    std::unordered_set<std::string> lemmas;
    for (const auto& e : list) lemmas.insert(e.lemma);
    const double pct = awl::coverage_against_frequency_table(lemmas, table);
    if (format == "json") {
      json j{{"mode", "frequency_table"},
             {"listed_lemmas", lemmas.size()},
             {"total_tokens", table.total_tokens()},
             {"coverage_percent", pct}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "coverage\t" << awl::format_double(pct) << '\n';
    }
    return 0;
  }

  awl::CoverageKey by;
  if (by_flag == "lemma") {
    by = awl::CoverageKey::lemma;
  } else if (by_flag == "lemma_pos") {
    by = awl::CoverageKey::lemma_pos;
  } else {
    const bool all_pos = std::all_of(list.begin(), list.end(), [](const auto& e) { return !e.pos.empty(); });
    by = all_pos && !list.empty() ? awl::CoverageKey::lemma_pos : awl::CoverageKey::lemma;
    log_verbose(std::string("matching on ") + (by == awl::CoverageKey::lemma ? "lemma" : "lemma_pos"));
  }
  std::vector<awl::LemmaPos> keys;
  for (const auto& e : list) keys.push_back({e.lemma, e.pos});
  const auto report = awl::coverage(keys, load_corpus(cfg, support, threads), by);

  if (format == "json") {
    json j{{"mode", "corpus"},
           {"by", by == awl::CoverageKey::lemma ? "lemma" : "lemma_pos"},
           {"total_tokens", report.total_tokens},
           {"covered", report.covered},
           {"coverage_percent", report.percent()},
           {"domains", json::array()}};
    for (const auto& d : report.domains) {
      json pos = json::object();
      for (const auto& [p, n] : d.covered_by_pos)
        pos[p] = {{"covered", n}, {"percent", d.pos_percent(p)}};
      j["domains"].push_back({{"domain", d.domain.str()},
                              {"tokens", d.token_count},
                              {"covered", d.covered},
                              {"percent", d.percent()},
                              {"pos", pos}});
    }
    std::cout << j.dump(2) << '\n';
  } else {
    awl::write_coverage_tsv(std::cout, report);
  }

  if (!report.diagnostics.empty())
    log_info("note: " + std::to_string(report.diagnostics.size()) +
             " listed lemma(s) carry more than one POS in the corpus annotation");
  if (!diagnostics_path.empty()) {
    auto out = open_output(diagnostics_path);
    out << "lemma\tlist_pos\tcorpus_pos\n";
    for (const auto& d : report.diagnostics) {
      out << d.lemma << '\t';
      for (std::size_t i = 0; i < d.list_pos.size(); ++i) out << (i ? "," : "") << d.list_pos[i];
      out << '\t';
      bool first = true;
      for (const auto& [p, n] : d.corpus_pos_counts) {
        out << (first ? "" : ",") << p << ':' << n;
        first = false;
      }
      out << '\n';
    }
  }
  return 0;
}

// --- compare ---------------------------------------------------------------

int run_compare(const std::string& a_path, const std::string& b_path,
                const std::string& mapping_path, const std::string& format) {
  auto a_in = open_input(a_path, "word list");
  const auto a = awl::load_word_list(a_in, {}, a_path);
  auto b_in = open_input(b_path, "reference list");
  std::unordered_set<std::string> b;
  for (const auto& e : awl::load_word_list(b_in, {}, b_path)) b.insert(e.lemma);
  std::optional<std::unordered_map<std::string, std::string>> mapping;
  if (!mapping_path.empty()) {
    auto m_in = open_input(mapping_path, "mapping");
    mapping = awl::load_lemma_mapping(m_in, {}, mapping_path);
  }
  const auto overlap = awl::compare_lists(a, b, mapping ? &*mapping : nullptr);
  const auto dist = awl::pos_distribution(a);

  if (format == "json") {
    json j{{"list_size", a.size()},
           {"reference_size", b.size()},
           {"matched", overlap.matched_count()},
           {"pos_distribution", dist},
           {"matched_entries", json::array()},
           {"unmatched_entries", json::array()}};
    for (const auto& e : overlap.matched) j["matched_entries"].push_back({{"lemma", e.lemma}, {"pos", e.pos}});
    for (const auto& e : overlap.unmatched)
      j["unmatched_entries"].push_back({{"lemma", e.lemma}, {"pos", e.pos}});
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "#list_size\t" << a.size() << '\n'
            << "#reference_size\t" << b.size() << '\n'
            << "#matched\t" << overlap.matched_count() << '\n';
  for (const auto& [pos, n] : dist) std::cout << "#pos\t" << pos << '\t' << n << '\n';
  std::cout << "lemma\tpos\tstatus\n";
  for (const auto& e : a) {
    const bool hit = std::any_of(overlap.matched.begin(), overlap.matched.end(),
                                 [&](const auto& m) { return m.lemma == e.lemma && m.pos == e.pos; });
    std::cout << e.lemma << '\t' << e.pos << '\t' << (hit ? "matched" : "unmatched") << '\n';
  }
  return 0;
}

// --- strip -----------------------------------------------------------------

int run_strip(const std::vector<std::string>& files, const std::vector<std::string>& patterns) {
  for (const auto& path : files) {
    auto in = open_input(path, "text file");
    std::string raw{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::vector<std::string> warnings;
    std::cout << awl::strip_markup(raw, patterns, &warnings) << '\n';
    for (const auto& w : warnings) log_info("warning: " + path + ": " + w);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Academic word list extraction and coverage evaluation"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false, verbose = false;
  app.add_flag("-q,--quiet", quiet, "only report errors");
  app.add_flag("-v,--verbose", verbose, "detailed progress and every warning");
  unsigned threads = default_threads();

  auto* stats = app.add_subcommand("stats", "per-domain token and type counts");
  ConfigSource stats_src;
  stats_src.add_flags(stats, {"corpus", "lexicon", "normalization"});
  std::string stats_format = "tsv";
  stats->add_option("--format", stats_format)->check(CLI::IsMember({"tsv", "json"}));
  stats->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "extract the academic word list");
  ConfigSource extract_src;
  extract_src.add_flags(extract, awl::config_keys());
  std::string out_dir;
  extract->add_option("--out", out_dir, "output directory for awl.tsv and report.json")->required();
  extract->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* cov = app.add_subcommand("coverage", "token coverage of a word list");
  ConfigSource cov_src;
  cov_src.add_flags(cov, {"corpus", "general", "lexicon", "normalization"});
  std::string list_path, by = "auto", cov_format = "tsv", diagnostics;
  cov->add_option("--list", list_path, "word list file")->required();
  cov->add_option("--by", by, "match on lemma or lemma_pos (default: lemma_pos when the list has POS)")
      ->check(CLI::IsMember({"auto", "lemma", "lemma_pos"}));
  cov->add_option("--format", cov_format)->check(CLI::IsMember({"tsv", "json"}));
  cov->add_option("--diagnostics", diagnostics, "write lemmas with conflicting POS here");
  cov->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* cmp = app.add_subcommand("compare", "overlap between a word list and a reference list");
  std::string list_a, list_b, mapping, cmp_format = "tsv";
  cmp->add_option("list", list_a, "word list")->required();
  cmp->add_option("reference", list_b, "reference list (lemma per line or TSV)")->required();
  cmp->add_option("--mapping", mapping, "TSV mapping applied to reference lemmas");
  cmp->add_option("--format", cmp_format)->check(CLI::IsMember({"tsv", "json"}));

  auto* strip = app.add_subcommand("strip", "print text files with markup removed");
  std::vector<std::string> strip_files, strip_patterns;
  strip->add_option("files", strip_files)->required();
  strip->add_option("--pattern", strip_patterns, "extra regex to remove (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  g_verbosity = quiet ? Verbosity::quiet : verbose ? Verbosity::verbose : Verbosity::normal;

  try {
    if (*stats) return run_stats(stats_src, stats_format, threads);
    if (*extract) return run_extract(extract_src, out_dir, threads);
    if (*cov) return run_coverage(cov_src, list_path, by, cov_format, diagnostics, threads);
    if (*cmp) return run_compare(list_a, list_b, mapping, cmp_format);
    if (*strip) return run_strip(strip_files, strip_patterns);
  } catch (const awl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const awl::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const awl::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
