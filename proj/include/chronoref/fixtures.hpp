#pragma once

// Bundled example specifications and the mod-5 two-level generator.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronoref/dsl.hpp"

namespace chronoref::fixtures {

/// Names accepted by text(): "morning", "light", "mod5_k3", "broken-embodiment".
std::vector<std::string> names();

/// The .chrono source of a bundled fixture. Throws std::invalid_argument for
/// unknown names.
std::string text(std::string_view name);

/// Companion expected-classification file, for fixtures that have one.
std::optional<std::string> expectations(std::string_view name);

/// Abstract level of the mod-5 encoding: a ≈ a' iff a/5 == a'/5, a ≺ a' iff
/// a/5 < a'/5.
bool mod5_abstract_coincide(std::uint32_t a, std::uint32_t b);
bool mod5_abstract_precede(std::uint32_t a, std::uint32_t b);

/// Concrete level: within a group of five, offsets 0 and 1 coincide and the
/// remaining offsets follow in order.
bool mod5_concrete_coincide(std::uint32_t a, std::uint32_t b);
bool mod5_concrete_precede(std::uint32_t a, std::uint32_t b);

/// Two levels over the prefix 0..5k-1, with one clock per row at each level
/// and claims for both orders, their refinement and the row clock refinements.
/// Throws std::invalid_argument for k == 0 or a prefix above kMaxUniverse.
dsl::SpecDocument mod5_document(std::uint32_t groups);

/// mod5_document() serialized, preceded by an explanatory comment header.
std::string mod5_text(std::uint32_t groups);

/// One line of an expected-classification file:
///   LEVEL I J (coincident | precedes | preceded-by | independent)
struct Expectation {
  std::string level;
  InstantId first;
  InstantId second;
  PairClassification expected;
  std::size_t line = 0;
};

/// Throws std::invalid_argument naming the offending line.
std::vector<Expectation> parse_expectations(std::string_view text);

}  // namespace chronoref::fixtures
