#pragma once

// Counterexample search for the preservation of subclocking and union under
// refinement: exhaustive over small universes, seeded-random beyond.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "chronoref/clock.hpp"

namespace chronoref {

enum class PreservationLemma { Subclock, Union };

std::string_view lemma_name(PreservationLemma l);
std::optional<PreservationLemma> parse_lemma(std::string_view text);

struct PreservationCounterexample {
  TimeStructure concrete;
  TimeStructure abstract;
  /// Clock operands in the order taken by the corresponding check function.
  std::vector<Clock> clocks;
  PreservationVerdict verdict;
};

struct HarnessReport {
  PreservationLemma lemma;
  std::size_t instances = 0;
  std::size_t vacuous = 0;
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::optional<PreservationCounterexample> counterexample;  // first Violated

  bool holds() const { return violated == 0; }
};

/// Every clock of `s`: each subset of the universe whose distinct members are
/// pairwise ordered by precedence, the empty clock included. Universe must be
/// at most 16.
std::vector<Clock> all_clocks(const TimeStructure& s);

/// Every pair of structures on n instants (n <= 3) in refinement, crossed with
/// every assignment of clocks to the lemma's operands.
HarnessReport run_preservation_exhaustive(std::size_t n, PreservationLemma lemma);

/// `count` random instances on n instants drawn from `seed`. Most instances
/// are built so that the hypotheses hold; the rest use unconstrained clocks
/// and unrelated structures.
HarnessReport run_preservation_random(std::size_t n, std::size_t count, std::uint64_t seed,
                                      PreservationLemma lemma);

/// A random closed valid structure on n instants.
TimeStructure random_structure(std::size_t n, std::mt19937_64& rng);

/// A random (concrete, abstract) pair such that concrete refines abstract:
/// every abstract coincidence class is split into a chain of concrete classes,
/// and precedence across abstract classes is carried over unchanged.
std::pair<TimeStructure, TimeStructure> random_refinement_pair(std::size_t n, std::mt19937_64& rng);

/// A random clock on `s`, grown greedily from a shuffled universe.
Clock random_clock(const TimeStructure& s, std::string name, std::mt19937_64& rng);

}  // namespace chronoref
