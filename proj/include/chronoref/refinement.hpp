#pragma once

// Instant refinement between two abstraction levels over one universe, and
// extensional equality of (coincidence, precedence) pairs.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "chronoref/order.hpp"

namespace chronoref {

enum class RefinementPredicate {
  /// concrete i ≺ j  ⇒  abstract i ≺ j  or  abstract i ≈ j
  PrecedenceAbstraction,
  /// abstract i ≺ j  ⇒  concrete i ≺ j
  PrecedenceEmbodiment,
  /// concrete i ≈ j  ⇒  abstract i ≈ j
  CoincidenceAbstraction,
  /// abstract i ≈ j  ⇒  concrete i ≈ j  or  i ≺ j  or  j ≺ i
  CoincidenceEmbodiment,
};

inline constexpr std::array kRefinementPredicates = {
    RefinementPredicate::PrecedenceAbstraction,
    RefinementPredicate::PrecedenceEmbodiment,
    RefinementPredicate::CoincidenceAbstraction,
    RefinementPredicate::CoincidenceEmbodiment,
};

std::string_view predicate_name(RefinementPredicate p);

struct PredicateResult {
  RefinementPredicate predicate;
  bool holds = true;
  std::optional<InstantPair> witness;  // least violating pair when !holds
};

struct RefinementReport {
  bool holds = true;
  std::array<PredicateResult, 4> predicates;

  const PredicateResult& result(RefinementPredicate p) const {
    return predicates[static_cast<std::size_t>(p)];
  }
};

/// True iff the pair (i, j) satisfies predicate `p` between the two levels.
bool predicate_holds_at(RefinementPredicate p, const TimeStructure& concrete,
                        const TimeStructure& abstract, InstantPair pair);

/// Evaluates all four predicates without short-circuiting. Argument order is
/// (concrete, abstract). Throws std::invalid_argument when either structure is
/// not closed and valid, or when the universes differ.
RefinementReport check_refinement(const TimeStructure& concrete, const TimeStructure& abstract);

inline bool refines(const TimeStructure& concrete, const TimeStructure& abstract) {
  return check_refinement(concrete, abstract).holds;
}

enum class InclusionDirection {
  CoincidenceLeftInRight,
  CoincidenceRightInLeft,
  PrecedenceLeftInRight,
  PrecedenceRightInLeft,
};

std::string_view direction_name(InclusionDirection d);

struct EquivalenceReport {
  bool holds = true;
  struct Witness {
    InclusionDirection direction;
    InstantPair pair;
  };
  std::optional<Witness> witness;
};

/// Checks the four mutual inclusions in the order of InclusionDirection and
/// reports the least pair of the first failing one.
/// Throws std::invalid_argument when the universes differ.
EquivalenceReport check_equivalence(const TimeStructure& left, const TimeStructure& right);

enum class AlgebraLaw { Reflexivity, Transitivity, AntisymmetryUpToEquivalence };

std::string_view law_name(AlgebraLaw law);
std::optional<AlgebraLaw> parse_law(std::string_view text);

inline constexpr std::size_t kMaxAlgebraUniverse = 3;

struct PropertyReport {
  AlgebraLaw law;
  std::size_t universe = 0;
  std::size_t structures = 0;
  /// Tuples enumerated (singletons, ordered pairs or ordered triples).
  std::size_t instancesChecked = 0;
  /// Tuples whose hypotheses held, so the conclusion was actually tested.
  std::size_t hypothesesHeld = 0;
  std::optional<std::vector<TimeStructure>> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Exhaustively checks `law` over every closed valid structure on n instants.
/// The first counterexample in enumeration order is kept.
/// Throws std::invalid_argument unless 1 <= n <= kMaxAlgebraUniverse.
PropertyReport verify_algebra(std::size_t n, AlgebraLaw law);

}  // namespace chronoref
