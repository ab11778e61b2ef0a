#include "chronoref/clock.hpp"

#include <algorithm>
#include <string>

#include "chronoref/refinement.hpp"

namespace chronoref {

Clock::Clock(std::string name, std::vector<InstantId> ticks)
    : name_(std::move(name)), ticks_(std::move(ticks)) {
  std::sort(ticks_.begin(), ticks_.end());
  ticks_.erase(std::unique(ticks_.begin(), ticks_.end()), ticks_.end());
}

InvalidClockError::InvalidClockError(const std::string& clock, InstantId witness)
    : std::invalid_argument("clock '" + clock + "' is not totally ordered at tick " +
                            std::to_string(witness.value)),
      witness_(witness) {}

namespace {

void require_valid_structure(const TimeStructure& s) {
  if (!s.valid()) throw std::invalid_argument("clock check on a structure that is not a closed strict partial order");
}

void require_ticks_in_range(const TimeStructure& s, const Clock& c) {
  for (auto t : c.ticks()) {
    if (t.value >= s.universe_size()) {
      throw std::out_of_range("clock '" + c.name() + "' ticks at " + std::to_string(t.value) +
                              ", outside universe of size " + std::to_string(s.universe_size()));
    }
  }
}

ConstraintVerdict totality(const TimeStructure& s, const Clock& c) {
  const auto& ticks = c.ticks();
  for (std::size_t a = 0; a < ticks.size(); ++a) {
    for (std::size_t b = a + 1; b < ticks.size(); ++b) {
      if (!s.precedes(ticks[a], ticks[b]) && !s.precedes(ticks[b], ticks[a])) {
        return ConstraintVerdict::fail(ticks[a]);
      }
    }
  }
  return ConstraintVerdict::pass();
}

void require_clock(const TimeStructure& s, const Clock& c) {
  require_ticks_in_range(s, c);
  if (auto v = totality(s, c); !v.holds) throw InvalidClockError(c.name(), *v.witness);
}

// Does some tick of `targets` coincide with `x` under `coincidence`?
bool has_partner(const Relation& coincidence, InstantId x, const std::vector<InstantId>& targets) {
  return std::any_of(targets.begin(), targets.end(),
                     [&](InstantId y) { return coincidence.contains(x, y); });
}

std::optional<InstantId> first_without_partner(const Relation& coincidence,
                                               const std::vector<InstantId>& sources,
                                               const std::vector<InstantId>& targets) {
  for (auto x : sources) {
    if (!has_partner(coincidence, x, targets)) return x;
  }
  return std::nullopt;
}

std::vector<InstantId> merged(const Clock& a, const Clock& b) {
  std::vector<InstantId> out;
  std::set_union(a.ticks().begin(), a.ticks().end(), b.ticks().begin(), b.ticks().end(),
                 std::back_inserter(out));
  return out;
}

ConstraintVerdict clock_refinement_unchecked(const TimeStructure& abstract, const Clock& conc,
                                             const Clock& abs) {
  const auto& eq = abstract.coincidence();
  if (auto x = first_without_partner(eq, abs.ticks(), conc.ticks())) return ConstraintVerdict::fail(*x);
  if (auto x = first_without_partner(eq, conc.ticks(), abs.ticks())) return ConstraintVerdict::fail(*x);
  return ConstraintVerdict::pass();
}

}  // namespace

ConstraintVerdict validate_clock(const TimeStructure& s, const Clock& c) {
  require_valid_structure(s);
  require_ticks_in_range(s, c);
  return totality(s, c);
}

ConstraintVerdict check_subclock(const TimeStructure& s, const Clock& c1, const Clock& c2) {
  require_valid_structure(s);
  require_clock(s, c1);
  require_clock(s, c2);
  if (auto x = first_without_partner(s.coincidence(), c1.ticks(), c2.ticks())) {
    return ConstraintVerdict::fail(*x);
  }
  return ConstraintVerdict::pass();
}

ConstraintVerdict check_union(const TimeStructure& s, const Clock& c, const Clock& c1,
                              const Clock& c2) {
  require_valid_structure(s);
  require_clock(s, c);
  require_clock(s, c1);
  require_clock(s, c2);
  const auto operands = merged(c1, c2);
  if (auto x = first_without_partner(s.coincidence(), operands, c.ticks())) {
    return ConstraintVerdict::fail(*x);
  }
  if (auto x = first_without_partner(s.coincidence(), c.ticks(), operands)) {
    return ConstraintVerdict::fail(*x);
  }
  return ConstraintVerdict::pass();
}

ConstraintVerdict check_clock_refinement(const TimeStructure& concrete,
                                         const TimeStructure& abstract, const Clock& concrete_clock,
                                         const Clock& abstract_clock) {
  if (!refines(concrete, abstract)) {
    throw RefinementPreconditionError("clock refinement between levels that are not in refinement");
  }
  require_clock(concrete, concrete_clock);
  require_clock(abstract, abstract_clock);
  return clock_refinement_unchecked(abstract, concrete_clock, abstract_clock);
}

std::string_view status_name(PreservationStatus s) {
  switch (s) {
    case PreservationStatus::Vacuous: return "vacuous";
    case PreservationStatus::Satisfied: return "satisfied";
    case PreservationStatus::Violated: return "violated";
  }
  return "unknown";
}

std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::Refinement: return "refines";
    case Hypothesis::Subclock: return "subclock";
    case Hypothesis::FirstClockRefinement: return "clockrefines-first";
    case Hypothesis::SecondClockRefinement: return "clockrefines-second";
    case Hypothesis::Union: return "union";
  }
  return "unknown";
}

namespace {

PreservationVerdict vacuous(Hypothesis h) {
  return {PreservationStatus::Vacuous, h, std::nullopt};
}

PreservationVerdict conclude(const ConstraintVerdict& conclusion) {
  if (conclusion.holds) return {PreservationStatus::Satisfied, std::nullopt, std::nullopt};
  return {PreservationStatus::Violated, std::nullopt, conclusion};
}

}  // namespace

PreservationVerdict check_subclock_preservation(const TimeStructure& concrete,
                                                const TimeStructure& abstract, const Clock& c1,
                                                const Clock& c2, const Clock& c11,
                                                const Clock& c22) {
  if (!refines(concrete, abstract)) return vacuous(Hypothesis::Refinement);
  if (!check_subclock(concrete, c1, c2).holds) return vacuous(Hypothesis::Subclock);
  if (!check_clock_refinement(concrete, abstract, c1, c11).holds) {
    return vacuous(Hypothesis::FirstClockRefinement);
  }
  if (!check_clock_refinement(concrete, abstract, c2, c22).holds) {
    return vacuous(Hypothesis::SecondClockRefinement);
  }
  return conclude(check_subclock(abstract, c11, c22));
}

PreservationVerdict check_union_preservation(const TimeStructure& concrete,
                                             const TimeStructure& abstract, const Clock& c0,
                                             const Clock& c1, const Clock& c2, const Clock& c) {
  if (!refines(concrete, abstract)) return vacuous(Hypothesis::Refinement);
  require_clock(concrete, c0);
  if (!check_clock_refinement(concrete, abstract, c1, c).holds) {
    return vacuous(Hypothesis::FirstClockRefinement);
  }
  if (!check_clock_refinement(concrete, abstract, c2, c).holds) {
    return vacuous(Hypothesis::SecondClockRefinement);
  }
  if (!check_union(concrete, c0, c1, c2).holds) return vacuous(Hypothesis::Union);
  return conclude(check_clock_refinement(concrete, abstract, c0, c));
}

}  // namespace chronoref
