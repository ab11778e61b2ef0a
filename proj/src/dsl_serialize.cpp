#include <sstream>

#include "chronoref/dsl.hpp"

namespace chronoref::dsl {

std::string serialize(const SpecDocument& doc) {
  std::ostringstream out;
  out << "universe " << doc.universe << ";\n";

  for (const auto& [name, level] : doc.levels) {
    out << "\nlevel " << name << " {\n";
    for (const auto& p : level.coincide) {
      out << "  coincide " << p.first.value << ' ' << p.second.value << ";\n";
    }
    for (const auto& p : level.precede) {
      out << "  precede " << p.first.value << ' ' << p.second.value << ";\n";
    }
    out << "};\n";
  }

  if (!doc.clocks.empty()) out << '\n';
  for (const auto& [name, clock] : doc.clocks) {
    out << "clock " << name << " @ " << clock.level << " = {";
    const char* sep = "";
    for (auto t : clock.ticks) {
      out << sep << t;
      sep = ", ";
    }
    out << "};\n";
  }

  if (!doc.claims.empty()) out << '\n';
  for (const auto& claim : doc.claims) {
    out << "assert " << claim_keyword(claim.kind);
    for (const auto& op : claim.operands) out << ' ' << op;
    out << ";\n";
  }
  return out.str();
}

}  // namespace chronoref::dsl
