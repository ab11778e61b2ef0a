#pragma once

// Evaluates the claims of a parsed specification against its levels.

#include <string>
#include <variant>
#include <vector>

#include "chronoref/clock.hpp"
#include "chronoref/dsl.hpp"
#include "chronoref/refinement.hpp"

namespace chronoref {

enum class Outcome { Pass, Fail, Vacuous };

std::string_view outcome_name(Outcome o);

struct SpoResult {
  AxiomReport axioms;
  std::vector<SpoViolation> violations;
};

struct ClaimResult {
  dsl::Claim claim;
  Outcome outcome = Outcome::Pass;
  /// Set when a precondition failed (invalid clock, levels not in refinement).
  std::string error;
  std::variant<std::monostate, SpoResult, RefinementReport, ConstraintVerdict, PreservationVerdict>
      detail;
};

/// Claims are evaluated in document order; each level is closed once.
std::vector<ClaimResult> evaluate_claims(const dsl::SpecDocument& doc);

}  // namespace chronoref
