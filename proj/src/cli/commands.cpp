#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chronoref/checker.hpp"
#include "chronoref/cli.hpp"
#include "chronoref/fixtures.hpp"
#include "chronoref/preservation.hpp"
#include "chronoref/report.hpp"

namespace chronoref::cli {

namespace {

using report::Json;

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<dsl::SpecDocument> load(const std::string& path, std::ostream& err) {
  auto source = read_file(path, err);
  if (!source) return std::nullopt;
  auto parsed = dsl::parse(*source);
  for (const auto& d : parsed.diagnostics) err << dsl::format_diagnostic(path, d) << '\n';
  return std::move(parsed.document);
}

std::string pair_text(InstantPair p) {
  return "(" + std::to_string(p.first.value) + "," + std::to_string(p.second.value) + ")";
}

std::string ids_text(const std::vector<InstantId>& ids) {
  std::string s = "(";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(ids[k].value);
  }
  return s + ")";
}

std::string claim_text(const dsl::Claim& c) {
  std::string s(dsl::claim_keyword(c.kind));
  for (const auto& op : c.operands) s += " " + op;
  return s;
}

std::string_view label(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS   ";
    case Outcome::Fail: return "FAIL   ";
    case Outcome::Vacuous: return "VACUOUS";
  }
  return "?";
}

void render_claim(const ClaimResult& r, bool witnesses, std::ostream& out) {
  out << label(r.outcome) << ' ' << claim_text(r.claim);
  if (!r.error.empty()) {
    out << "\n    error: " << r.error << '\n';
    return;
  }
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, SpoResult>) {
          out << "  (" << d.axioms.passed() << "/" << kAxiomCount << " axioms)\n";
          for (const auto& a : d.axioms.results) {
            if (a.holds && !witnesses) continue;
            out << "    " << (a.holds ? "holds    " : "violated ") << axiom_name(a.axiom);
            if (!a.holds) out << " at " << ids_text(a.witness);
            out << '\n';
          }
        } else if constexpr (std::is_same_v<T, RefinementReport>) {
          out << "  (" << std::count_if(d.predicates.begin(), d.predicates.end(),
                                         [](const auto& p) { return p.holds; })
              << "/4 predicates)\n";
          for (const auto& p : d.predicates) {
            if (p.holds && !witnesses) continue;
            out << "    " << (p.holds ? "holds    " : "violated ") << predicate_name(p.predicate);
            if (p.witness) out << " at " << pair_text(*p.witness);
            out << '\n';
          }
        } else if constexpr (std::is_same_v<T, ConstraintVerdict>) {
          out << '\n';
          if (d.witness) out << "    no partner for tick " << d.witness->value << '\n';
        } else if constexpr (std::is_same_v<T, PreservationVerdict>) {
          if (d.failedHypothesis) out << "  (hypothesis '" << hypothesis_name(*d.failedHypothesis) << "' does not hold)";
          out << '\n';
          if (d.detail && d.detail->witness) {
            out << "    conclusion fails at tick " << d.detail->witness->value << '\n';
          }
        } else {
          out << '\n';
        }
      },
      r.detail);
}

struct ExpectationResult {
  fixtures::Expectation expectation;
  std::optional<PairClassification> actual;
  std::string error;

  bool holds() const { return error.empty() && actual == expectation.expected; }
};

std::optional<std::vector<ExpectationResult>> check_expectations(const dsl::SpecDocument& doc,
                                                                 const std::string& path,
                                                                 std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return std::nullopt;
  std::vector<fixtures::Expectation> expected;
  try {
    expected = fixtures::parse_expectations(*text);
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
  std::vector<ExpectationResult> out;
  for (const auto& e : expected) {
    if (!doc.levels.count(e.level)) {
      err << path << ":" << e.line << ": unknown level '" << e.level << "'\n";
      return std::nullopt;
    }
    ExpectationResult r{e, std::nullopt, {}};
    try {
      r.actual = classify_pair(dsl::level_structure(doc, e.level), e.first, e.second);
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json expectation_json(const ExpectationResult& r) {
  Json j;
  j["claim"] = "classify";
  j["holds"] = r.holds();
  j["expected"] = classification_name(r.expectation.expected);
  j["actual"] = r.actual ? Json(classification_name(*r.actual)) : Json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  j["operands"] = Json::array({r.expectation.level, r.expectation.first.value, r.expectation.second.value});
  j["outcome"] = r.holds() ? "pass" : "fail";
  return j;
}

Json summary_json(const RunSummary& s) {
  Json j;
  j["claimsTotal"] = s.claimsTotal;
  j["claimsPassed"] = s.claimsPassed;
  j["claimsFailed"] = s.claimsFailed;
  j["claimsVacuous"] = s.claimsVacuous;
  j["exitCode"] = s.exitCode;
  return j;
}

void count(RunSummary& s, Outcome o) {
  ++s.claimsTotal;
  switch (o) {
    case Outcome::Pass: ++s.claimsPassed; break;
    case Outcome::Fail: ++s.claimsFailed; break;
    case Outcome::Vacuous: ++s.claimsVacuous; break;
  }
}

void finish(RunSummary& s) { s.exitCode = s.claimsFailed == 0 ? 0 : 1; }

void render_summary(const RunSummary& s, std::ostream& out) {
  out << "summary: " << s.claimsTotal << " claims, " << s.claimsPassed << " passed, "
      << s.claimsFailed << " failed, " << s.claimsVacuous << " vacuous\n";
}

RunSummary usage_error() {
  RunSummary s;
  s.exitCode = 2;
  return s;
}

}  // namespace

RunSummary cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
                     std::ostream& err) {
  auto doc = load(path, err);
  if (!doc) return usage_error();

  const auto results = evaluate_claims(*doc);
  std::vector<ExpectationResult> expected;
  if (options.expectations) {
    auto checked = check_expectations(*doc, *options.expectations, err);
    if (!checked) return usage_error();
    expected = std::move(*checked);
  }

  RunSummary summary;
  for (const auto& r : results) count(summary, r.outcome);
  for (const auto& e : expected) count(summary, e.holds() ? Outcome::Pass : Outcome::Fail);
  finish(summary);

  if (options.json) {
    Json payload;
    payload["file"] = path;
    Json list = Json::array();
    for (const auto& r : results) list.push_back(report::to_json(r));
    for (const auto& e : expected) list.push_back(expectation_json(e));
    payload["results"] = std::move(list);
    payload["summary"] = summary_json(summary);
    out << report::emit_report(std::move(payload));
    return summary;
  }

  for (const auto& r : results) render_claim(r, options.witnesses, out);
  for (const auto& e : expected) {
    out << label(e.holds() ? Outcome::Pass : Outcome::Fail) << " classify " << e.expectation.level
        << ' ' << e.expectation.first.value << ' ' << e.expectation.second.value << " = "
        << classification_name(e.expectation.expected);
    if (!e.error.empty()) {
      out << "\n    error: " << e.error;
    } else if (!e.holds()) {
      out << "\n    actual: " << classification_name(*e.actual);
    }
    out << '\n';
  }
  render_summary(summary, out);
  return summary;
}

int cmd_closure(const std::string& path, const std::string& level, bool json, std::ostream& out,
                std::ostream& err) {
  auto doc = load(path, err);
  if (!doc) return 2;
  if (!doc->levels.count(level)) {
    err << "error: no level named '" << level << "' in " << path << '\n';
    return 2;
  }
  const auto s = dsl::level_structure(*doc, level);
  if (json) {
    Json payload;
    payload["file"] = path;
    payload["level"] = level;
    const auto relations = report::structure_json(s);
    for (const auto& item : relations.items()) payload[item.key()] = item.value();
    payload["valid"] = s.valid();
    out << report::emit_report(std::move(payload));
    return 0;
  }
  out << "# level " << level << ", universe " << s.universe_size() << '\n';
  out << "# coincidence: " << s.coincidence().size() << " pairs\n";
  for (const auto& p : s.coincidence().pairs()) {
    out << "coincide " << p.first.value << ' ' << p.second.value << '\n';
  }
  out << "# precedence: " << s.precedence().size() << " pairs\n";
  for (const auto& p : s.precedence().pairs()) {
    out << "precede " << p.first.value << ' ' << p.second.value << '\n';
  }
  if (!s.valid()) out << "# not a strict partial order: some instant precedes a coincident one\n";
  return 0;
}

int cmd_gen_mod5(std::uint32_t groups, const std::optional<std::string>& out_path,
                 std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = fixtures::mod5_text(groups);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!out_path) {
    out << text;
    return 0;
  }
  std::ofstream file(*out_path, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write '" << *out_path << "'\n";
    return 2;
  }
  return 0;
}

RunSummary cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  if (options.law.has_value() == options.preservation.has_value()) {
    err << "error: give exactly one of --law or --preservation\n";
    return usage_error();
  }
  if (options.n < 1 || options.n > kMaxAlgebraUniverse) {
    err << "error: --n must be between 1 and " << kMaxAlgebraUniverse << '\n';
    return usage_error();
  }

  RunSummary summary;
  Json results = Json::array();
  const auto started = std::chrono::steady_clock::now();

  if (options.law) {
    auto law = parse_law(*options.law);
    if (!law) {
      err << "error: unknown law '" << *options.law
          << "' (expected reflexivity, transitivity or antisymmetry)\n";
      return usage_error();
    }
    const auto r = verify_algebra(options.n, *law);
    count(summary, r.holds() ? Outcome::Pass : Outcome::Fail);
    results.push_back(report::to_json(r));
    if (!options.json) {
      out << label(r.holds() ? Outcome::Pass : Outcome::Fail) << ' ' << law_name(r.law)
          << " n=" << r.universe << ": " << r.structures << " structures, " << r.instancesChecked
          << " instances, " << r.hypothesesHeld << " with hypotheses met\n";
      if (r.counterexample) out << report::to_json(r)["counterexample"].dump(2) << '\n';
    }
  } else {
    auto lemma = parse_lemma(*options.preservation);
    if (!lemma) {
      err << "error: unknown preservation lemma '" << *options.preservation
          << "' (expected subclock or union)\n";
      return usage_error();
    }
    if (options.random > 0 && (options.random_size < 1 || options.random_size > 64)) {
      err << "error: --size must be between 1 and 64\n";
      return usage_error();
    }
    std::vector<std::pair<std::string, HarnessReport>> runs;
    runs.emplace_back("exhaustive n=" + std::to_string(options.n),
                      run_preservation_exhaustive(options.n, *lemma));
    if (options.random > 0) {
      runs.emplace_back("random n=" + std::to_string(options.random_size) +
                            " seed=" + std::to_string(options.seed),
                        run_preservation_random(options.random_size, options.random, options.seed,
                                                *lemma));
    }
    for (const auto& [what, r] : runs) {
      count(summary, r.holds() ? Outcome::Pass : Outcome::Fail);
      auto j = report::to_json(r);
      j["mode"] = what;
      results.push_back(j);
      if (!options.json) {
        out << label(r.holds() ? Outcome::Pass : Outcome::Fail) << " preserve-" << lemma_name(r.lemma)
            << ' ' << what << ": " << r.instances << " instances, " << r.satisfied << " satisfied, "
            << r.vacuous << " vacuous, " << r.violated << " violated\n";
        if (r.counterexample) out << j["counterexample"].dump(2) << '\n';
      }
    }
  }
  finish(summary);

  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
  if (options.json) {
    Json payload;
    payload["results"] = std::move(results);
    payload["summary"] = summary_json(summary);
    out << report::emit_report(std::move(payload));
  } else {
    render_summary(summary, out);
    err << "elapsed: " << elapsed.count() << " s\n";
  }
  return summary;
}

int cmd_fixtures(bool list, const std::optional<std::string>& emit,
                 const std::optional<std::string>& out_dir, std::ostream& out, std::ostream& err) {
  if (list == emit.has_value()) {
    err << "error: give exactly one of --list or --emit NAME\n";
    return 2;
  }
  if (list) {
    for (const auto& name : fixtures::names()) out << name << '\n';
    return 0;
  }
  std::string text;
  try {
    text = fixtures::text(*emit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const auto expect = fixtures::expectations(*emit);
  if (!out_dir) {
    out << text;
    return 0;
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(*out_dir, ec);
  auto write = [&](const fs::path& p, const std::string& body) {
    std::ofstream file(p, std::ios::binary);
    if (!(file << body)) {
      err << "error: cannot write '" << p.string() << "'\n";
      return false;
    }
    out << p.string() << '\n';
    return true;
  };
  if (!write(fs::path(*out_dir) / (*emit + ".chrono"), text)) return 2;
  if (expect && !write(fs::path(*out_dir) / (*emit + ".expect"), *expect)) return 2;
  return 0;
}

}  // namespace chronoref::cli
