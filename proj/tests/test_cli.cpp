#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "chronoref/cli.hpp"
#include "chronoref/dsl.hpp"
#include "chronoref/fixtures.hpp"
#include "chronoref/refinement.hpp"
#include "chronoref/report.hpp"

using namespace chronoref;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& file) {
  return (fs::path(CHRONOREF_FIXTURE_DIR) / file).string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "chronoref-test-cli";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_scratch(const std::string& name, const std::string& body) {
  const auto p = scratch(name);
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("bundled fixture files match the embedded fixtures") {
  for (const auto& name : fixtures::names()) {
    INFO(name);
    CHECK(slurp(fixture_path(name + ".chrono")) == fixtures::text(name));
    if (auto expect = fixtures::expectations(name)) {
      CHECK(slurp(fixture_path(name + ".expect")) == *expect);
    }
  }
}

TEST_CASE("check exit codes") {
  SUBCASE("mod-5 fixture passes") {
    const auto r = run({"check", fixture_path("mod5_k3.chrono")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(has_line(r.out, "summary: 8 claims, 8 passed, 0 failed, 0 vacuous"));
  }
  SUBCASE("broken embodiment fails with its witness") {
    const auto r = run({"check", fixture_path("broken-embodiment.chrono")});
    CHECK(r.code == 1);
    CHECK(r.out.find("coincidenceEmbodiment at (0,1)") != std::string::npos);
  }
  SUBCASE("empty file is a parse error") {
    const auto p = write_scratch("empty.chrono", "");
    const auto r = run({"check", p.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("universe missing") != std::string::npos);
    CHECK(r.out.empty());
  }
  SUBCASE("missing file") {
    CHECK(run({"check", scratch("absent.chrono").string()}).code == 2);
  }
  SUBCASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "x", "--colour"}).code == 2);
  }
  SUBCASE("help") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen-mod5") != std::string::npos);
  }
}

TEST_CASE("check with expectations") {
  const auto r = run({"check", fixture_path("morning.chrono"), "--expect", fixture_path("morning.expect")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "PASS    classify morning 1 3 = independent"));
  CHECK(has_line(r.out, "PASS    classify morning 1 4 = coincident"));

  const auto wrong = write_scratch("wrong.expect", "morning 1 3 precedes\n");
  const auto w = run({"check", fixture_path("morning.chrono"), "--expect", wrong.string()});
  CHECK(w.code == 1);
  CHECK(w.out.find("actual: independent") != std::string::npos);

  const auto garbled = write_scratch("garbled.expect", "morning 1\n");
  CHECK(run({"check", fixture_path("morning.chrono"), "--expect", garbled.string()}).code == 2);
  const auto unknown = write_scratch("unknown.expect", "evening 1 3 independent\n");
  CHECK(run({"check", fixture_path("morning.chrono"), "--expect", unknown.string()}).code == 2);
}

TEST_CASE("JSON and human output agree") {
  for (const auto& name : fixtures::names()) {
    INFO(name);
    const auto human = run({"check", fixture_path(name + ".chrono")});
    const auto json = run({"check", fixture_path(name + ".chrono"), "--json"});
    CHECK(human.code == json.code);
    const auto j = report::Json::parse(json.out);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["summary"]["exitCode"] == json.code);
    std::size_t failed = 0;
    for (const auto& r : j["results"]) failed += r["outcome"] == "fail";
    CHECK(j["summary"]["claimsFailed"] == failed);
    std::size_t human_fail = 0;
    std::istringstream in(human.out);
    for (std::string line; std::getline(in, line);) human_fail += line.rfind("FAIL", 0) == 0;
    CHECK(human_fail == failed);
  }
}

TEST_CASE("check --witnesses lists every predicate") {
  const auto r = run({"check", fixture_path("mod5_k3.chrono"), "--witnesses"});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds    coincidenceEmbodiment") != std::string::npos);
  CHECK(r.out.find("holds    precedence-respects-coincidence-right") != std::string::npos);
}

TEST_CASE("closure dumps the omitted pairs") {
  const auto abs = run({"closure", fixture_path("mod5_k3.chrono"), "--level", "abstract"});
  REQUIRE(abs.code == 0);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {5, 7},
                                                      {5, 8}, {5, 9}, {10, 11}, {10, 12}, {10, 13},
                                                      {10, 14}}) {
    CHECK(has_line(abs.out, "coincide " + std::to_string(a) + " " + std::to_string(b)));
  }
  CHECK(has_line(abs.out, "precede 0 5"));
  CHECK(has_line(abs.out, "precede 5 10"));

  const auto conc = run({"closure", fixture_path("mod5_k3.chrono"), "--level", "concrete"});
  REQUIRE(conc.code == 0);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {5, 6}, {10, 11}}) {
    CHECK(has_line(conc.out, "coincide " + std::to_string(a) + " " + std::to_string(b)));
  }
  for (int a : {1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13}) {
    CHECK(has_line(conc.out, "precede " + std::to_string(a) + " " + std::to_string(a + 1)));
  }

  const auto single = write_scratch("single.chrono", "universe 1; level x {};");
  const auto s = run({"closure", single.string(), "--level", "x"});
  CHECK(has_line(s.out, "coincide 0 0"));
  CHECK(s.out.find("\nprecede") == std::string::npos);

  const auto json = run({"closure", single.string(), "--level", "x", "--json"});
  const auto j = report::Json::parse(json.out);
  CHECK(j["coincidence"] == report::Json::parse("[[0,0]]"));
  CHECK(j["precedence"].empty());

  CHECK(run({"closure", single.string(), "--level", "y"}).code == 2);
}

TEST_CASE("gen-mod5") {
  CHECK(run({"gen-mod5", "--groups", "0"}).code == 2);
  CHECK(run({"gen-mod5", "--groups", "820"}).code == 2);
  CHECK(run({"gen-mod5"}).code == 2);

  SUBCASE("k = 3 matches the bundled fixture") {
    const auto r = run({"gen-mod5", "--groups", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fixture_path("mod5_k3.chrono")));
  }
  SUBCASE("written file passes its own claims") {
    const auto p = scratch("mod5_k4.chrono");
    CHECK(run({"gen-mod5", "--groups", "4", "--out", p.string()}).code == 0);
    CHECK(run({"check", p.string()}).code == 0);
  }
  SUBCASE("closures equal the formulas") {
    for (std::uint32_t k : {1u, 2u, 4u}) {
      const auto doc = *dsl::parse(run({"gen-mod5", "--groups", std::to_string(k)}).out).document;
      const auto a = dsl::level_structure(doc, "abstract");
      const auto c = dsl::level_structure(doc, "concrete");
      for (std::uint32_t i = 0; i < 5 * k; ++i) {
        for (std::uint32_t j = 0; j < 5 * k; ++j) {
          const InstantId x(i), y(j);
          CHECK(a.coincident(x, y) == fixtures::mod5_abstract_coincide(i, j));
          CHECK(a.precedes(x, y) == fixtures::mod5_abstract_precede(i, j));
          CHECK(c.coincident(x, y) == fixtures::mod5_concrete_coincide(i, j));
          CHECK(c.precedes(x, y) == fixtures::mod5_concrete_precede(i, j));
        }
      }
    }
  }
  SUBCASE("single group") {
    const auto doc = *dsl::parse(run({"gen-mod5", "--groups", "1"}).out).document;
    const auto a = dsl::level_structure(doc, "abstract");
    const auto c = dsl::level_structure(doc, "concrete");
    CHECK(a.coincidence().size() == 25);
    CHECK(a.precedence().empty());
    CHECK(c.coincident(InstantId(0), InstantId(1)));
    for (std::uint32_t i = 1; i < 4; ++i) CHECK(c.precedes(InstantId(i), InstantId(i + 1)));
    CHECK(c.precedes(InstantId(0), InstantId(2)));
  }
  SUBCASE("two groups") {
    const auto doc = *dsl::parse(run({"gen-mod5", "--groups", "2"}).out).document;
    const auto a = dsl::level_structure(doc, "abstract");
    CHECK(a.precedes(InstantId(3), InstantId(7)));
    CHECK_FALSE(a.precedes(InstantId(3), InstantId(4)));
  }
}

TEST_CASE("oracle") {
  CHECK(run({"oracle", "--n", "3", "--law", "transitivity"}).code == 0);
  CHECK(run({"oracle", "--n", "2", "--law", "antisymmetry"}).code == 0);
  const auto p = run({"oracle", "--n", "3", "--preservation", "subclock"});
  CHECK(p.code == 0);
  CHECK(p.out.find(" 0 violated") != std::string::npos);
  CHECK(run({"oracle", "--n", "2", "--preservation", "union", "--random", "200", "--size", "5"}).code == 0);

  CHECK(run({"oracle", "--n", "4", "--law", "transitivity"}).code == 2);
  CHECK(run({"oracle", "--law", "symmetry"}).code == 2);
  CHECK(run({"oracle"}).code == 2);
  CHECK(run({"oracle", "--law", "reflexivity", "--preservation", "union"}).code == 2);

  const auto a = run({"oracle", "--n", "2", "--preservation", "union", "--random", "300", "--seed", "7", "--json"});
  const auto b = run({"oracle", "--n", "2", "--preservation", "union", "--random", "300", "--seed", "7", "--json"});
  CHECK(a.out == b.out);
  const auto j = report::Json::parse(a.out);
  CHECK(j["results"].size() == 2);
  CHECK(j["summary"]["claimsFailed"] == 0);
}

TEST_CASE("fixtures command") {
  const auto list = run({"fixtures", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out == "morning\nlight\nmod5_k3\nbroken-embodiment\n");

  const auto light = run({"fixtures", "--emit", "light"});
  CHECK(light.out == fixtures::text("light"));

  const auto dir = scratch("emitted");
  fs::remove_all(dir);
  CHECK(run({"fixtures", "--emit", "morning", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "morning.chrono") == fixtures::text("morning"));
  CHECK(slurp(dir / "morning.expect") == *fixtures::expectations("morning"));

  const auto checked = run({"check", (dir / "morning.chrono").string(), "--expect",
                            (dir / "morning.expect").string()});
  CHECK(checked.code == 0);

  CHECK(run({"fixtures", "--emit", "nope"}).code == 2);
  CHECK(run({"fixtures"}).code == 2);
  CHECK(run({"fixtures", "--list", "--emit", "light"}).code == 2);
}

TEST_CASE("installed binary reports exit codes") {
  const std::string cli = CHRONOREF_CLI;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("check " + fixture_path("mod5_k3.chrono")) == 0);
  CHECK(status("check " + fixture_path("broken-embodiment.chrono")) == 1);
  CHECK(status("check " + write_scratch("e.chrono", "").string()) == 2);
}
