#include "chronoref/refinement.hpp"

#include <stdexcept>
#include <string>

namespace chronoref {

std::string_view predicate_name(RefinementPredicate p) {
  switch (p) {
    case RefinementPredicate::PrecedenceAbstraction: return "precedenceAbstraction";
    case RefinementPredicate::PrecedenceEmbodiment: return "precedenceEmbodiment";
    case RefinementPredicate::CoincidenceAbstraction: return "coincidenceAbstraction";
    case RefinementPredicate::CoincidenceEmbodiment: return "coincidenceEmbodiment";
  }
  return "unknown";
}

bool predicate_holds_at(RefinementPredicate p, const TimeStructure& c, const TimeStructure& a,
                        InstantPair pair) {
  const auto i = pair.first;
  const auto j = pair.second;
  switch (p) {
    case RefinementPredicate::PrecedenceAbstraction:
      return !c.precedes(i, j) || a.precedes(i, j) || a.coincident(i, j);
    case RefinementPredicate::PrecedenceEmbodiment:
      return !a.precedes(i, j) || c.precedes(i, j);
    case RefinementPredicate::CoincidenceAbstraction:
      return !c.coincident(i, j) || a.coincident(i, j);
    case RefinementPredicate::CoincidenceEmbodiment:
      return !a.coincident(i, j) || c.coincident(i, j) || c.precedes(i, j) || c.precedes(j, i);
  }
  return false;
}

namespace {

void require_comparable(const TimeStructure& x, const TimeStructure& y, const char* what) {
  if (x.universe_size() != y.universe_size()) {
    throw std::invalid_argument(std::string(what) + ": universes differ (" +
                                std::to_string(x.universe_size()) + " vs " +
                                std::to_string(y.universe_size()) + ")");
  }
}

}  // namespace

RefinementReport check_refinement(const TimeStructure& concrete, const TimeStructure& abstract) {
  if (!concrete.valid()) throw std::invalid_argument("check_refinement: concrete level is not a closed strict partial order");
  if (!abstract.valid()) throw std::invalid_argument("check_refinement: abstract level is not a closed strict partial order");
  require_comparable(concrete, abstract, "check_refinement");

  RefinementReport report;
  const auto n = static_cast<std::uint32_t>(concrete.universe_size());
  for (auto p : kRefinementPredicates) {
    PredicateResult r{p, true, std::nullopt};
    for (std::uint32_t i = 0; i < n && r.holds; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (!predicate_holds_at(p, concrete, abstract, InstantPair(i, j))) {
          r.holds = false;
          r.witness = InstantPair(i, j);
          break;
        }
      }
    }
    report.predicates[static_cast<std::size_t>(p)] = r;
    report.holds = report.holds && r.holds;
  }
  return report;
}

std::string_view direction_name(InclusionDirection d) {
  switch (d) {
    case InclusionDirection::CoincidenceLeftInRight: return "coincidence-left-in-right";
    case InclusionDirection::CoincidenceRightInLeft: return "coincidence-right-in-left";
    case InclusionDirection::PrecedenceLeftInRight: return "precedence-left-in-right";
    case InclusionDirection::PrecedenceRightInLeft: return "precedence-right-in-left";
  }
  return "unknown";
}

EquivalenceReport check_equivalence(const TimeStructure& left, const TimeStructure& right) {
  require_comparable(left, right, "check_equivalence");
  struct Inclusion {
    InclusionDirection direction;
    const Relation& sub;
    const Relation& super;
  };
  const Inclusion inclusions[] = {
      {InclusionDirection::CoincidenceLeftInRight, left.coincidence(), right.coincidence()},
      {InclusionDirection::CoincidenceRightInLeft, right.coincidence(), left.coincidence()},
      {InclusionDirection::PrecedenceLeftInRight, left.precedence(), right.precedence()},
      {InclusionDirection::PrecedenceRightInLeft, right.precedence(), left.precedence()},
  };
  for (const auto& inc : inclusions) {
    if (auto miss = inc.sub.first_not_in(inc.super)) {
      return {false, EquivalenceReport::Witness{inc.direction, *miss}};
    }
  }
  return {};
}

std::string_view law_name(AlgebraLaw law) {
  switch (law) {
    case AlgebraLaw::Reflexivity: return "reflexivity";
    case AlgebraLaw::Transitivity: return "transitivity";
    case AlgebraLaw::AntisymmetryUpToEquivalence: return "antisymmetry";
  }
  return "unknown";
}

std::optional<AlgebraLaw> parse_law(std::string_view text) {
  for (auto law : {AlgebraLaw::Reflexivity, AlgebraLaw::Transitivity,
                   AlgebraLaw::AntisymmetryUpToEquivalence}) {
    if (text == law_name(law)) return law;
  }
  return std::nullopt;
}

PropertyReport verify_algebra(std::size_t n, AlgebraLaw law) {
  if (n < 1 || n > kMaxAlgebraUniverse) {
    throw std::invalid_argument("verify_algebra needs 1 <= n <= " +
                                std::to_string(kMaxAlgebraUniverse) + ", got " + std::to_string(n));
  }
  const auto all = enumerate_structures(n);
  const std::size_t count = all.size();

  PropertyReport report{law, n, count, 0, 0, std::nullopt};

  if (law == AlgebraLaw::Reflexivity) {
    for (const auto& s : all) {
      ++report.instancesChecked;
      ++report.hypothesesHeld;
      if (!refines(s, s)) {
        report.counterexample = std::vector{s};
        break;
      }
    }
    return report;
  }

  // refinement[a * count + b]: all[a] refines all[b]
  std::vector<char> refinement(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      refinement[a * count + b] = refines(all[a], all[b]) ? 1 : 0;
  auto ref = [&](std::size_t a, std::size_t b) { return refinement[a * count + b] != 0; };

  if (law == AlgebraLaw::Transitivity) {
    for (std::size_t a = 0; a < count && !report.counterexample; ++a) {
      for (std::size_t b = 0; b < count && !report.counterexample; ++b) {
        for (std::size_t c = 0; c < count; ++c) {
          ++report.instancesChecked;
          if (!ref(a, b) || !ref(b, c)) continue;
          ++report.hypothesesHeld;
          if (!ref(a, c)) {
            report.counterexample = std::vector{all[a], all[b], all[c]};
            break;
          }
        }
      }
    }
    return report;
  }

  for (std::size_t a = 0; a < count && !report.counterexample; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      ++report.instancesChecked;
      if (!ref(a, b) || !ref(b, a)) continue;
      ++report.hypothesesHeld;
      if (!check_equivalence(all[a], all[b]).holds) {
        report.counterexample = std::vector{all[a], all[b]};
        break;
      }
    }
  }
  return report;
}

}  // namespace chronoref
