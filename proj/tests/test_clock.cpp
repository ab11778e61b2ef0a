#include <doctest.h>

#include <random>

#include "chronoref/clock.hpp"
#include "chronoref/dsl.hpp"
#include "chronoref/fixtures.hpp"
#include "chronoref/preservation.hpp"
#include "chronoref/refinement.hpp"
#include "support.hpp"

using namespace chronoref;
using namespace test_support;

namespace {

Clock clock(std::initializer_list<std::uint32_t> ticks, std::string name = "c") {
  std::vector<InstantId> ids;
  for (auto t : ticks) ids.emplace_back(t);
  return Clock(std::move(name), std::move(ids));
}

const dsl::SpecDocument& light() {
  static const auto doc = *dsl::parse(fixtures::text("light")).document;
  return doc;
}

struct Mod5 {
  TimeStructure concrete;
  TimeStructure abstract;
};

const Mod5& mod5() {
  static const Mod5 m = [] {
    const auto doc = fixtures::mod5_document(3);
    return Mod5{dsl::level_structure(doc, "concrete"), dsl::level_structure(doc, "abstract")};
  }();
  return m;
}

// Subclocking by definition, scanning every tick pair.
bool naive_subclock(const TimeStructure& s, const Clock& c1, const Clock& c2) {
  for (auto x : c1.ticks()) {
    bool found = false;
    for (auto y : c2.ticks()) found = found || s.coincident(x, y);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Clock keeps ticks sorted and unique") {
  const auto c = clock({5, 1, 5, 3}, "t");
  CHECK(c.name() == "t");
  CHECK(c.ticks() == std::vector{InstantId(1), InstantId(3), InstantId(5)});
  CHECK(clock({}).empty());
}

TEST_CASE("validate_clock") {
  const auto s = dsl::level_structure(light(), "trace");
  CHECK(validate_clock(s, dsl::clock_of(light(), "t_on")).holds);
  for (const auto& [name, decl] : light().clocks) {
    INFO(name);
    CHECK(validate_clock(s, dsl::clock_of(light(), name)).holds);
  }

  const auto pair = closed(3, {{0, 2}}, {});
  const auto v = validate_clock(pair, clock({0, 2}));
  CHECK_FALSE(v.holds);
  CHECK(v.witness == InstantId(0));

  const auto independent = closed(3, {}, {{0, 1}});
  CHECK(validate_clock(independent, clock({0, 1, 2})).witness == InstantId(0));
  CHECK(validate_clock(independent, clock({1, 2})).witness == InstantId(1));

  CHECK(validate_clock(pair, clock({})).holds);
  CHECK(validate_clock(pair, clock({1})).holds);
  CHECK_THROWS_AS(validate_clock(pair, clock({3})), std::out_of_range);
}

TEST_CASE("check_subclock") {
  const auto s = dsl::level_structure(light(), "trace");
  const auto t_on = dsl::clock_of(light(), "t_on");
  const auto t_x0 = dsl::clock_of(light(), "t_x0");
  CHECK(check_subclock(s, t_on, t_x0).holds);
  CHECK(check_subclock(s, clock({}), t_x0).holds);
  CHECK(check_subclock(s, t_x0, t_x0).holds);

  const auto v = check_subclock(s, t_x0, t_on);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == InstantId(3));

  const auto chain = closed(2, {{0, 1}}, {});
  CHECK_THROWS_AS(check_subclock(chain, clock({0, 1}), clock({})), InvalidClockError);
  try {
    check_subclock(chain, clock({}), clock({0, 1}, "bad"));
  } catch (const InvalidClockError& e) {
    CHECK(e.witness() == InstantId(0));
  }
}

TEST_CASE("light trace: t_x1 has two ticks and t_x is the union") {
  const auto s = dsl::level_structure(light(), "trace");
  CHECK(dsl::clock_of(light(), "t_x1").ticks().size() == 2);
  CHECK(check_union(s, dsl::clock_of(light(), "t_x"), dsl::clock_of(light(), "t_x0"),
                    dsl::clock_of(light(), "t_x1"))
            .holds);
  CHECK(check_subclock(s, dsl::clock_of(light(), "t_ex"), dsl::clock_of(light(), "t_x")).holds);
  CHECK_FALSE(
      check_subclock(s, dsl::clock_of(light(), "t_ex"), dsl::clock_of(light(), "t_x0")).holds);
}

TEST_CASE("check_union") {
  const auto chain = closed(3, {}, {{0, 1}, {1, 2}});
  CHECK(check_union(chain, clock({0, 1}), clock({0}), clock({1})).holds);

  const auto v = check_union(chain, clock({0, 1, 2}), clock({0}), clock({1}));
  CHECK_FALSE(v.holds);
  CHECK(v.witness == InstantId(2));

  const auto missing = check_union(chain, clock({0}), clock({0}), clock({2}));
  CHECK(missing.witness == InstantId(2));

  const auto twins = closed(4, {{0, 2}, {1, 3}}, {{0, 1}});
  CHECK(check_union(twins, clock({2, 3}), clock({0, 1}), clock({0, 1})).holds);
}

TEST_CASE("union verdict is commutative in its operands") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const auto s = random_structure(n, rng);
    const auto c = random_clock(s, "c", rng);
    const auto c1 = random_clock(s, "c1", rng);
    const auto c2 = random_clock(s, "c2", rng);
    CHECK(check_union(s, c, c1, c2) == check_union(s, c, c2, c1));
  }
}

TEST_CASE("subclocking is reflexive and transitive") {
  std::mt19937_64 rng(22);
  int chains = 0;
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + rng() % 6;
    const auto s = random_structure(n, rng);
    const auto a = random_clock(s, "a", rng);
    const auto b = random_clock(s, "b", rng);
    const auto c = random_clock(s, "c", rng);
    CHECK(check_subclock(s, a, a).holds);
    CHECK(check_subclock(s, a, b).holds == naive_subclock(s, a, b));
    if (check_subclock(s, a, b).holds && check_subclock(s, b, c).holds) {
      ++chains;
      CHECK(check_subclock(s, a, c).holds);
    }
  }
  CHECK(chains > 50);
}

TEST_CASE("verdicts depend only on the closed relations") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const auto s1 = random_structure(n, rng);
    // Same closure, generated from the closed relations themselves.
    const auto s2 = closed(n, s1.coincidence().pairs(), s1.precedence().pairs());
    REQUIRE(check_equivalence(s1, s2).holds);
    const auto c = random_clock(s1, "c", rng);
    const auto c1 = random_clock(s1, "c1", rng);
    const auto c2 = random_clock(s1, "c2", rng);
    CHECK(validate_clock(s1, c) == validate_clock(s2, c));
    CHECK(check_subclock(s1, c1, c) == check_subclock(s2, c1, c));
    CHECK(check_union(s1, c, c1, c2) == check_union(s2, c, c1, c2));
    CHECK(check_clock_refinement(s1, s1, c1, c) == check_clock_refinement(s2, s2, c1, c));
  }
}

TEST_CASE("check_clock_refinement") {
  const auto& m = mod5();
  SUBCASE("second-row concrete ticks against first-row abstract ticks") {
    CHECK(check_clock_refinement(m.concrete, m.abstract, clock({1, 6, 11}), clock({0, 5, 10})).holds);
  }
  SUBCASE("identical structures and clocks") {
    const auto c = clock({0, 5, 10});
    CHECK(check_clock_refinement(m.abstract, m.abstract, c, c).holds);
    CHECK(check_clock_refinement(m.concrete, m.concrete, c, c).holds);
  }
  SUBCASE("concrete tick in a group without abstract ticks") {
    const auto v = check_clock_refinement(m.concrete, m.abstract, clock({1, 6, 11}), clock({0, 5}));
    CHECK_FALSE(v.holds);
    CHECK(v.witness == InstantId(11));
  }
  SUBCASE("abstract tick without a concrete partner") {
    const auto v = check_clock_refinement(m.concrete, m.abstract, clock({1, 6}), clock({0, 5, 10}));
    CHECK_FALSE(v.holds);
    CHECK(v.witness == InstantId(10));
  }
  SUBCASE("levels not in refinement") {
    CHECK_THROWS_AS(check_clock_refinement(m.abstract, m.concrete, clock({0}), clock({0})),
                    RefinementPreconditionError);
  }
  SUBCASE("invalid clock") {
    CHECK_THROWS_AS(check_clock_refinement(m.concrete, m.abstract, clock({0, 1}), clock({0})),
                    InvalidClockError);
  }
}

TEST_CASE("subclock preservation instances") {
  const auto& m = mod5();
  const auto c1 = clock({1, 6, 11});
  const auto c2 = clock({1, 2, 6, 7, 11, 12});
  const auto c11 = clock({0, 5, 10});
  const auto c22 = clock({0, 5, 10});
  const auto v = check_subclock_preservation(m.concrete, m.abstract, c1, c2, c11, c22);
  CHECK(v.status == PreservationStatus::Satisfied);
  CHECK_FALSE(v.failedHypothesis);

  const auto vac = check_subclock_preservation(m.concrete, m.abstract, clock({2}), clock({3}), c11, c22);
  CHECK(vac.status == PreservationStatus::Vacuous);
  CHECK(vac.failedHypothesis == Hypothesis::Subclock);

  const auto unrefined = check_subclock_preservation(m.abstract, m.concrete, c11, c22, c1, c1);
  CHECK(unrefined.status == PreservationStatus::Vacuous);
  CHECK(unrefined.failedHypothesis == Hypothesis::Refinement);

  const auto second = check_subclock_preservation(m.concrete, m.abstract, c1, c2, c11, clock({0, 5}));
  CHECK(second.failedHypothesis == Hypothesis::SecondClockRefinement);
}

TEST_CASE("union preservation instances") {
  const auto& m = mod5();
  const auto c1 = clock({1, 6, 11});
  const auto c2 = clock({2, 7, 12});
  const auto c0 = clock({1, 2, 6, 7, 11, 12});
  const auto c = clock({0, 5, 10});
  CHECK(check_union_preservation(m.concrete, m.abstract, c0, c1, c2, c).status ==
        PreservationStatus::Satisfied);

  const auto vac = check_union_preservation(m.concrete, m.abstract, c0, clock({1}), c2, c);
  CHECK(vac.status == PreservationStatus::Vacuous);
  CHECK(vac.failedHypothesis == Hypothesis::FirstClockRefinement);

  const auto not_union = check_union_preservation(m.concrete, m.abstract, c1, c1, c2, c);
  CHECK(not_union.failedHypothesis == Hypothesis::Union);
}

TEST_CASE("status and hypothesis names") {
  CHECK(status_name(PreservationStatus::Vacuous) == "vacuous");
  CHECK(hypothesis_name(Hypothesis::Subclock) == "subclock");
  CHECK(hypothesis_name(Hypothesis::Refinement) == "refines");
}
