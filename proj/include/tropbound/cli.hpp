#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace tropbound {

enum class ExitCode : int { ok = 0, invalid = 1, verification_failed = 2 };

struct CliConfig {
  std::string subcommand;            // bound | exact | nd | verify | render
  std::filesystem::path input;
  std::uint64_t seed = 1;
  std::size_t cap = 7;               // maximum number of legs for `exact`
  std::filesystem::path out_dir;     // empty: print to the output stream
  std::string format = "text";       // text | json | csv | svg

  long max_degree = 6;               // nd
  bool paper_suite = false;          // verify
  bool random_three_leg = false;     // verify
  std::size_t trials = 1000;         // verify --random-three-leg
  std::size_t exact_trials = 200;    // verify --random-three-leg
};

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

} // namespace tropbound
