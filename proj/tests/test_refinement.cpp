#include <doctest.h>

#include <random>

#include "chronoref/fixtures.hpp"
#include "chronoref/preservation.hpp"
#include "chronoref/refinement.hpp"
#include "support.hpp"

using namespace chronoref;
using namespace test_support;

namespace {

// Both levels of the mod-5 encoding, built from every pair the formulas
// relate rather than from the generator's reduced pair list.
std::pair<TimeStructure, TimeStructure> mod5_by_formula(std::uint32_t n) {
  std::vector<InstantPair> ac, ap, cc, cp;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (fixtures::mod5_abstract_coincide(a, b)) ac.emplace_back(a, b);
      if (fixtures::mod5_abstract_precede(a, b)) ap.emplace_back(a, b);
      if (fixtures::mod5_concrete_coincide(a, b)) cc.emplace_back(a, b);
      if (fixtures::mod5_concrete_precede(a, b)) cp.emplace_back(a, b);
    }
  }
  return {closed(n, cc, cp), closed(n, ac, ap)};
}

bool naive_predicate(int p, const TimeStructure& c, const TimeStructure& a, InstantId i, InstantId j) {
  switch (p) {
    case 0: return !c.precedes(i, j) || a.precedes(i, j) || a.coincident(i, j);
    case 1: return !a.precedes(i, j) || c.precedes(i, j);
    case 2: return !c.coincident(i, j) || a.coincident(i, j);
    default: return !a.coincident(i, j) || c.coincident(i, j) || c.precedes(i, j) || c.precedes(j, i);
  }
}

// Direct scan for the least violating pair of each predicate.
std::array<std::optional<InstantPair>, 4> naive_witnesses(const TimeStructure& c, const TimeStructure& a) {
  std::array<std::optional<InstantPair>, 4> out;
  const auto n = static_cast<std::uint32_t>(c.universe_size());
  for (int p = 0; p < 4; ++p) {
    for (std::uint32_t i = 0; i < n && !out[p]; ++i) {
      for (std::uint32_t j = 0; j < n && !out[p]; ++j) {
        if (!naive_predicate(p, c, a, InstantId(i), InstantId(j))) out[p] = InstantPair(i, j);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("mod-5 prefix levels are in refinement") {
  for (std::uint32_t k : {1u, 2u, 3u}) {
    const auto [concrete, abstract] = mod5_by_formula(5 * k);
    REQUIRE(concrete.valid());
    REQUIRE(abstract.valid());
    const auto r = check_refinement(concrete, abstract);
    CHECK(r.holds);
    for (const auto& p : r.predicates) CHECK(p.holds);
    CHECK_FALSE(check_refinement(abstract, concrete).holds);
  }
}

TEST_CASE("check_refinement examples") {
  SUBCASE("reflexive") {
    const auto s = closed(4, {{0, 1}}, {{1, 2}, {3, 2}});
    CHECK(check_refinement(s, s).holds);
  }
  SUBCASE("independent concrete against coincident abstract") {
    const auto concrete = closed(2, {}, {});
    const auto abstract = closed(2, {{0, 1}}, {});
    const auto r = check_refinement(concrete, abstract);
    CHECK_FALSE(r.holds);
    const auto& ce = r.result(RefinementPredicate::CoincidenceEmbodiment);
    CHECK_FALSE(ce.holds);
    REQUIRE(ce.witness);
    CHECK(*ce.witness == InstantPair(0, 1));
    CHECK(r.result(RefinementPredicate::PrecedenceAbstraction).holds);
    CHECK(r.result(RefinementPredicate::PrecedenceEmbodiment).holds);
    CHECK(r.result(RefinementPredicate::CoincidenceAbstraction).holds);
  }
  SUBCASE("every failing predicate is reported") {
    const auto concrete = closed(4, {{0, 1}}, {{2, 0}});
    const auto abstract = closed(4, {{2, 3}}, {{0, 1}});
    const auto r = check_refinement(concrete, abstract);
    int failed = 0;
    for (const auto& p : r.predicates) failed += !p.holds;
    CHECK(failed == 4);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(check_refinement(closed(2, {}, {}), closed(3, {}, {})), std::invalid_argument);
    CHECK_THROWS_AS(check_refinement(open(2, {}, {}), closed(2, {}, {})), std::invalid_argument);
    CHECK_THROWS_AS(check_refinement(closed(2, {}, {}), closed(2, {{0, 1}}, {{0, 1}})),
                    std::invalid_argument);
  }
}

TEST_CASE("refinement agrees with a direct predicate scan on every n=3 pair") {
  const auto all = enumerate_structures(3);
  std::size_t holding = 0;
  for (const auto& c : all) {
    for (const auto& a : all) {
      const auto r = check_refinement(c, a);
      const auto expected = naive_witnesses(c, a);
      bool all_hold = true;
      for (std::size_t p = 0; p < 4; ++p) {
        CHECK(r.predicates[p].predicate == kRefinementPredicates[p]);
        CHECK(r.predicates[p].holds == !expected[p].has_value());
        CHECK(r.predicates[p].witness == expected[p]);
        all_hold = all_hold && !expected[p];
      }
      CHECK(r.holds == all_hold);
      holding += all_hold;
    }
  }
  // Frozen from the direct scan above.
  CHECK(holding == 59);
}

TEST_CASE("witnesses are sound") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 7;
    const auto c = random_structure(n, rng);
    const auto a = random_structure(n, rng);
    const auto r = check_refinement(c, a);
    for (const auto& p : r.predicates) {
      CHECK(p.holds == !p.witness.has_value());
      if (p.witness) CHECK_FALSE(predicate_holds_at(p.predicate, c, a, *p.witness));
    }
  }
}

TEST_CASE("abstract precedence is included in concrete precedence under refinement") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const auto [c, a] = random_refinement_pair(1 + rng() % 10, rng);
    REQUIRE(check_refinement(c, a).holds);
    CHECK(a.precedence().is_subset_of(c.precedence()));
    CHECK(c.coincidence().is_subset_of(a.coincidence()));
  }
}

TEST_CASE("check_equivalence") {
  const auto s = closed(3, {{0, 1}}, {{1, 2}});
  CHECK(check_equivalence(s, s).holds);

  const auto reordered = closed(3, std::vector<InstantPair>{{1, 0}}, std::vector<InstantPair>{{0, 2}});
  CHECK(check_equivalence(s, reordered).holds);

  const auto lt = closed(2, {}, {{0, 1}});
  const auto eq = closed(2, {{0, 1}}, {});
  const auto r = check_equivalence(lt, eq);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->direction == InclusionDirection::CoincidenceRightInLeft);
  CHECK(r.witness->pair == InstantPair(0, 1));

  const auto r2 = check_equivalence(closed(2, {}, {{0, 1}}), closed(2, {}, {}));
  REQUIRE(r2.witness);
  CHECK(r2.witness->direction == InclusionDirection::PrecedenceLeftInRight);
  CHECK(r2.witness->pair == InstantPair(0, 1));

  CHECK_THROWS_AS(check_equivalence(closed(2, {}, {}), closed(3, {}, {})), std::invalid_argument);
}

TEST_CASE("equivalence implies mutual refinement") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = enumerate_structures(n);
    for (const auto& x : all) {
      for (const auto& y : all) {
        if (!check_equivalence(x, y).holds) continue;
        CHECK(refines(x, y));
        CHECK(refines(y, x));
      }
    }
  }
}

TEST_CASE("verify_algebra") {
  const auto refl = verify_algebra(2, AlgebraLaw::Reflexivity);
  CHECK(refl.holds());
  CHECK(refl.structures == 4);
  CHECK(refl.instancesChecked == 4);

  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto law : {AlgebraLaw::Reflexivity, AlgebraLaw::Transitivity,
                     AlgebraLaw::AntisymmetryUpToEquivalence}) {
      const auto r = verify_algebra(n, law);
      INFO(law_name(law) << " n=" << n);
      CHECK(r.holds());
      CHECK(r.universe == n);
    }
  }
  const auto trans = verify_algebra(3, AlgebraLaw::Transitivity);
  CHECK(trans.instancesChecked == 29 * 29 * 29);
  CHECK(trans.hypothesesHeld > 29);
  const auto anti = verify_algebra(3, AlgebraLaw::AntisymmetryUpToEquivalence);
  CHECK(anti.instancesChecked == 29 * 29);

  CHECK_THROWS_AS(verify_algebra(0, AlgebraLaw::Reflexivity), std::invalid_argument);
  CHECK_THROWS_AS(verify_algebra(4, AlgebraLaw::Reflexivity), std::invalid_argument);
}

TEST_CASE("law names round-trip") {
  for (auto law : {AlgebraLaw::Reflexivity, AlgebraLaw::Transitivity,
                   AlgebraLaw::AntisymmetryUpToEquivalence}) {
    CHECK(parse_law(law_name(law)) == law);
  }
  CHECK_FALSE(parse_law("symmetry").has_value());
  CHECK(predicate_name(RefinementPredicate::CoincidenceEmbodiment) == "coincidenceEmbodiment");
}
