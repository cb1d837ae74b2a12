#pragma once

// Runs the awl binary in a subprocess and captures its output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "support/synthetic.hpp"

namespace awl::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("awl_test_" + std::to_string(rd()) + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// `env` is a prefix such as "AWL_CONFIG=x"; empty for none.
inline CliResult run_cli(const std::vector<std::string>& args, const std::string& env = "") {
  static TempDir scratch;
  static int counter = 0;
  const auto out_path = scratch / ("out" + std::to_string(counter));
  const auto err_path = scratch / ("err" + std::to_string(counter++));
  std::string cmd = "env -u AWL_CONFIG " + env + " " + shell_quote(AWL_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " >" + shell_quote(out_path.string()) + " 2>" + shell_quote(err_path.string());
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  return r;
}

// Writes a synthetic corpus as `<root>/<domain>/docNNN.conllu` plus a
// general list at `<root>.general.tsv`-style path given by the caller.
inline void write_corpus(const SyntheticCorpus& c, const std::filesystem::path& root) {
  for (std::size_t d = 0; d < c.domains.size(); ++d) {
    const auto dir = root / c.domains[d].str();
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < c.documents[d].size(); ++i) {
      std::ofstream out(dir / ("doc" + std::to_string(1000 + i) + ".conllu"), std::ios::binary);
      out << "# doc " << i << "\n";
      std::size_t id = 1;
      for (const auto& t : c.documents[d][i])
        out << id++ << '\t' << t.surface << '\t' << t.lemma << '\t' << t.pos
            << "\t_\t_\t0\t_\t_\t_\n";
      out << '\n';
    }
  }
}

inline void write_general(const SyntheticCorpus& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << "#total\t" << c.general_total << '\n';
  std::map<std::string, std::uint64_t> sorted(c.general_counts.begin(), c.general_counts.end());
  for (const auto& [k, v] : sorted) out << k << '\t' << v << '\n';
}

}  // namespace awl::testing
