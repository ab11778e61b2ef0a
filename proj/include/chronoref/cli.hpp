#pragma once

// Command-line front end. Every subcommand writes its report to `out` and
// diagnostics to `err`, and returns an exit code in {0, 1, 2}:
// 0 all claims hold, 1 some claim failed, 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chronoref::cli {

struct RunSummary {
  std::size_t claimsTotal = 0;
  std::size_t claimsPassed = 0;
  std::size_t claimsFailed = 0;
  std::size_t claimsVacuous = 0;
  int exitCode = 0;
};

struct CheckOptions {
  bool json = false;
  bool witnesses = false;
  std::optional<std::string> expectations;  // path of an expected-classification file
};

RunSummary cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
                     std::ostream& err);

int cmd_closure(const std::string& path, const std::string& level, bool json, std::ostream& out,
                std::ostream& err);

int cmd_gen_mod5(std::uint32_t groups, const std::optional<std::string>& out_path,
                 std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::size_t n = 3;
  std::optional<std::string> law;
  std::optional<std::string> preservation;
  std::uint64_t seed = 1;
  std::size_t random = 0;       // extra random preservation instances
  std::size_t random_size = 8;  // universe of the random instances
  bool json = false;
};

RunSummary cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

int cmd_fixtures(bool list, const std::optional<std::string>& emit,
                 const std::optional<std::string>& out_dir, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chronoref::cli
