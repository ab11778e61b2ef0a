#include <CLI11.hpp>

#include <ostream>

#include "chronoref/cli.hpp"

namespace chronoref::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check refinement and clock constraints between time structures", "chronoref"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "chronoref 1.0.0");

  std::string path;
  CheckOptions check;
  std::string expect_path;
  auto* check_cmd = app.add_subcommand("check", "Evaluate every claim in a .chrono file");
  check_cmd->add_option("file", path, "Specification file")->required();
  check_cmd->add_flag("--json", check.json, "Emit a JSON report");
  check_cmd->add_flag("--witnesses", check.witnesses, "List every axiom and predicate, not only failures");
  check_cmd->add_option("--expect", expect_path, "Expected pair classifications to verify as well");

  std::string level;
  bool closure_json = false;
  auto* closure_cmd = app.add_subcommand("closure", "Print the closed relations of one level");
  closure_cmd->add_option("file", path, "Specification file")->required();
  closure_cmd->add_option("--level", level, "Level name")->required();
  closure_cmd->add_flag("--json", closure_json, "Emit a JSON report");

  std::uint32_t groups = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-mod5", "Generate the two-level mod-5 specification");
  gen_cmd->add_option("--groups,-k", groups, "Number of five-instant groups")->required();
  gen_cmd->add_option("--out,-o", gen_out, "Write to this file instead of stdout");

  OracleOptions oracle;
  std::string law;
  std::string lemma;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive and random checks of the refinement laws");
  oracle_cmd->add_option("--n", oracle.n, "Universe size for exhaustive enumeration")
      ->capture_default_str();
  oracle_cmd->add_option("--law", law, "reflexivity, transitivity or antisymmetry");
  oracle_cmd->add_option("--preservation", lemma, "subclock or union");
  oracle_cmd->add_option("--seed", oracle.seed, "Seed for random instances")->capture_default_str();
  oracle_cmd->add_option("--random", oracle.random, "Number of random preservation instances")
      ->capture_default_str();
  oracle_cmd->add_option("--size", oracle.random_size, "Universe size of random instances")
      ->capture_default_str();
  oracle_cmd->add_flag("--json", oracle.json, "Emit a JSON report");

  bool list = false;
  std::string emit;
  std::string emit_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or write the bundled example specifications");
  fixtures_cmd->add_flag("--list", list, "List fixture names");
  fixtures_cmd->add_option("--emit", emit, "Fixture to print or write");
  fixtures_cmd->add_option("--out", emit_dir, "Directory to write NAME.chrono into");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto optional = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); };

  if (*check_cmd) {
    check.expectations = optional(expect_path);
    return cmd_check(path, check, out, err).exitCode;
  }
  if (*closure_cmd) return cmd_closure(path, level, closure_json, out, err);
  if (*gen_cmd) return cmd_gen_mod5(groups, optional(gen_out), out, err);
  if (*oracle_cmd) {
    oracle.law = optional(law);
    oracle.preservation = optional(lemma);
    return cmd_oracle(oracle, out, err).exitCode;
  }
  return cmd_fixtures(list, optional(emit), optional(emit_dir), out, err);
}

}  // namespace chronoref::cli
