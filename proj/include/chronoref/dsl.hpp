#pragma once

// The .chrono specification format.
//
//   spec   := stmt*
//   stmt   := ( "universe" INT
//             | "level" NAME "{" rel* "}"
//             | "clock" NAME "@" NAME "=" "{" INT ("," INT)* "}"
//             | claim ) ";"
//   rel    := ("coincide" | "precede") INT INT ";"
//   claim  := "assert" ( "spo" NAME | "refines" NAME NAME
//             | "subclock" NAME NAME | "union" NAME NAME NAME
//             | "clockrefines" NAME NAME
//             | "preserve-subclock" NAME NAME NAME NAME
//             | "preserve-union" NAME NAME NAME NAME )
//
// "#" starts a comment running to the end of the line. Names are ASCII
// identifiers, optionally containing '-'. Instants are indices into the
// universe.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chronoref/clock.hpp"
#include "chronoref/order.hpp"

namespace chronoref::dsl {

enum class ClaimKind {
  ValidSpo,
  Refines,
  Subclock,
  Union,
  ClockRefines,
  PreserveSubclock,
  PreserveUnion,
};

std::string_view claim_keyword(ClaimKind k);
std::size_t claim_arity(ClaimKind k);
std::optional<ClaimKind> parse_claim_keyword(std::string_view word);

struct Claim {
  ClaimKind kind;
  std::vector<std::string> operands;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct LevelDecl {
  std::set<InstantPair> coincide;
  std::set<InstantPair> precede;

  friend bool operator==(const LevelDecl&, const LevelDecl&) = default;
};

struct ClockDecl {
  std::string level;
  std::set<std::uint32_t> ticks;

  friend bool operator==(const ClockDecl&, const ClockDecl&) = default;
};

struct SpecDocument {
  std::uint32_t universe = 0;
  std::map<std::string, LevelDecl> levels;
  std::map<std::string, ClockDecl> clocks;
  std::vector<Claim> claims;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

struct ParseDiagnostic {
  enum class Kind { Syntax, Resolution, Range };

  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  Kind kind = Kind::Syntax;
};

std::string_view kind_name(ParseDiagnostic::Kind k);

/// "<origin>:<line>:<column>: <kind> error: <message>"
std::string format_diagnostic(std::string_view origin, const ParseDiagnostic& d);

struct ParseResult {
  std::optional<SpecDocument> document;  // set iff diagnostics is empty
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

/// Never throws on malformed input. Recovers at statement boundaries so a
/// single pass reports every independent problem.
ParseResult parse(std::string_view source);

/// Canonical text: universe, then levels and clocks sorted by name with pairs
/// and ticks in ascending order, then claims in document order.
std::string serialize(const SpecDocument& doc);

/// The closed structure of a declared level.
TimeStructure level_structure(const SpecDocument& doc, const std::string& level);

Clock clock_of(const SpecDocument& doc, const std::string& name);

}  // namespace chronoref::dsl
