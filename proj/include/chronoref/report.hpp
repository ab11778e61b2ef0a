#pragma once

// JSON rendering of every report type. Field order is fixed; witnesses are
// integer pairs (or single integers for clock ticks). See docs/report-schema.md.

#include <string>

#include "chronoref/checker.hpp"
#include "chronoref/preservation.hpp"
#include "chronoref/refinement.hpp"
#include "json.hpp"

namespace chronoref::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json pair_json(InstantPair p);
Json structure_json(const TimeStructure& s);
Json clock_json(const Clock& c);

Json to_json(const AxiomReport& r);
Json to_json(const RefinementReport& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const ConstraintVerdict& v);
Json to_json(const PreservationVerdict& v);
Json to_json(const PropertyReport& r);
Json to_json(const HarnessReport& r);
Json to_json(const ClaimResult& r);

/// Wraps a payload in the versioned envelope: {"schemaVersion": 1, ...fields}.
Json envelope(Json payload);

/// Pretty-printed JSON text of `payload` inside the envelope.
std::string emit_report(Json payload);

}  // namespace chronoref::report
