#pragma once

// Clocks over a time structure and the constraint operators defined on them:
// subclocking, union, and clock refinement across two abstraction levels.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chronoref/order.hpp"

namespace chronoref {

/// A named set of ticks. Ticks are kept sorted and unique.
class Clock {
 public:
  Clock() = default;
  Clock(std::string name, std::vector<InstantId> ticks);

  const std::string& name() const { return name_; }
  const std::vector<InstantId>& ticks() const { return ticks_; }
  bool empty() const { return ticks_.empty(); }

  friend bool operator==(const Clock&, const Clock&) = default;

 private:
  std::string name_;
  std::vector<InstantId> ticks_;
};

struct ConstraintVerdict {
  bool holds = true;
  /// The tick for which no required partner exists; present iff !holds.
  std::optional<InstantId> witness;

  static ConstraintVerdict pass() { return {}; }
  static ConstraintVerdict fail(InstantId tick) { return {false, tick}; }

  friend bool operator==(const ConstraintVerdict&, const ConstraintVerdict&) = default;
};

/// Raised when a clock does not form a single timeline on its structure.
class InvalidClockError : public std::invalid_argument {
 public:
  InvalidClockError(const std::string& clock, InstantId witness);
  InstantId witness() const { return witness_; }

 private:
  InstantId witness_;
};

/// Raised by clock refinement when the two levels are not in refinement.
class RefinementPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Distinct ticks must be strictly ordered by precedence. The witness is the
/// smaller tick of the least pair that is not.
/// Throws std::invalid_argument if `s` is not valid, std::out_of_range for
/// ticks outside the universe.
ConstraintVerdict validate_clock(const TimeStructure& s, const Clock& c);

/// c1 ⊑ c2: every tick of c1 coincides with some tick of c2.
ConstraintVerdict check_subclock(const TimeStructure& s, const Clock& c1, const Clock& c2);

/// c ≡ c1 ∪ c2: every tick of c1 or c2 coincides with a tick of c, and every
/// tick of c coincides with a tick of c1 or c2. The first conjunct is checked
/// first; the witness is the least failing tick of the first failing one.
ConstraintVerdict check_union(const TimeStructure& s, const Clock& c, const Clock& c1,
                              const Clock& c2);

/// cConc refc cAbs: every abstract tick has a concrete tick coincident with it,
/// and every concrete tick has an abstract tick coincident with it, both
/// judged by the abstract coincidence.
/// Throws RefinementPreconditionError unless `concrete` refines `abstract`.
ConstraintVerdict check_clock_refinement(const TimeStructure& concrete,
                                         const TimeStructure& abstract, const Clock& concrete_clock,
                                         const Clock& abstract_clock);

enum class PreservationStatus { Vacuous, Satisfied, Violated };

std::string_view status_name(PreservationStatus s);

enum class Hypothesis {
  Refinement,
  Subclock,
  FirstClockRefinement,
  SecondClockRefinement,
  Union,
};

std::string_view hypothesis_name(Hypothesis h);

struct PreservationVerdict {
  PreservationStatus status = PreservationStatus::Vacuous;
  /// First hypothesis found false, when Vacuous.
  std::optional<Hypothesis> failedHypothesis;
  /// The failed conclusion, when Violated.
  std::optional<ConstraintVerdict> detail;
};

/// Instance of: c1 ⊑ c2 (concrete), c1 refc c11, c2 refc c22  ⇒  c11 ⊑ c22
/// (abstract). Hypotheses are evaluated in that order after the structural
/// refinement itself.
PreservationVerdict check_subclock_preservation(const TimeStructure& concrete,
                                                const TimeStructure& abstract, const Clock& c1,
                                                const Clock& c2, const Clock& c11,
                                                const Clock& c22);

/// Instance of: c1 refc c, c2 refc c, c0 ≡ c1 ∪ c2 (concrete)  ⇒  c0 refc c.
PreservationVerdict check_union_preservation(const TimeStructure& concrete,
                                             const TimeStructure& abstract, const Clock& c0,
                                             const Clock& c1, const Clock& c2, const Clock& c);

}  // namespace chronoref
