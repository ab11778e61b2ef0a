#include "chronoref/checker.hpp"

#include <map>
#include <stdexcept>

namespace chronoref {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Vacuous: return "vacuous";
  }
  return "unknown";
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const dsl::SpecDocument& doc) : doc_(doc) {}

  ClaimResult evaluate(const dsl::Claim& claim) {
    ClaimResult r{claim, Outcome::Pass, {}, {}};
    try {
      run(claim, r);
    } catch (const std::exception& e) {
      r.outcome = Outcome::Fail;
      r.error = e.what();
    }
    return r;
  }

 private:
  const TimeStructure& level(const std::string& name) {
    auto it = closed_.find(name);
    if (it == closed_.end()) it = closed_.emplace(name, dsl::level_structure(doc_, name)).first;
    return it->second;
  }

  const TimeStructure& level_of_clock(const std::string& clock) {
    return level(doc_.clocks.at(clock).level);
  }

  Clock clock(const std::string& name) const { return dsl::clock_of(doc_, name); }

  static Outcome verdict(bool holds) { return holds ? Outcome::Pass : Outcome::Fail; }

  static Outcome verdict(const PreservationVerdict& v) {
    switch (v.status) {
      case PreservationStatus::Vacuous: return Outcome::Vacuous;
      case PreservationStatus::Satisfied: return Outcome::Pass;
      case PreservationStatus::Violated: return Outcome::Fail;
    }
    return Outcome::Fail;
  }

  void run(const dsl::Claim& claim, ClaimResult& r) {
    const auto& ops = claim.operands;
    switch (claim.kind) {
      case dsl::ClaimKind::ValidSpo: {
        const auto& s = level(ops[0]);
        SpoResult spo{check_axioms(s), validate_spo(s)};
        r.outcome = verdict(spo.axioms.holds() && spo.violations.empty());
        r.detail = std::move(spo);
        break;
      }
      case dsl::ClaimKind::Refines: {
        auto report = check_refinement(level(ops[0]), level(ops[1]));
        r.outcome = verdict(report.holds);
        r.detail = report;
        break;
      }
      case dsl::ClaimKind::Subclock: {
        auto v = check_subclock(level_of_clock(ops[0]), clock(ops[0]), clock(ops[1]));
        r.outcome = verdict(v.holds);
        r.detail = v;
        break;
      }
      case dsl::ClaimKind::Union: {
        auto v = check_union(level_of_clock(ops[0]), clock(ops[0]), clock(ops[1]), clock(ops[2]));
        r.outcome = verdict(v.holds);
        r.detail = v;
        break;
      }
      case dsl::ClaimKind::ClockRefines: {
        auto v = check_clock_refinement(level_of_clock(ops[0]), level_of_clock(ops[1]),
                                        clock(ops[0]), clock(ops[1]));
        r.outcome = verdict(v.holds);
        r.detail = v;
        break;
      }
      case dsl::ClaimKind::PreserveSubclock: {
        auto v = check_subclock_preservation(level_of_clock(ops[0]), level_of_clock(ops[2]),
                                             clock(ops[0]), clock(ops[1]), clock(ops[2]),
                                             clock(ops[3]));
        r.outcome = verdict(v);
        r.detail = v;
        break;
      }
      case dsl::ClaimKind::PreserveUnion: {
        auto v = check_union_preservation(level_of_clock(ops[0]), level_of_clock(ops[3]),
                                          clock(ops[0]), clock(ops[1]), clock(ops[2]),
                                          clock(ops[3]));
        r.outcome = verdict(v);
        r.detail = v;
        break;
      }
    }
  }

  const dsl::SpecDocument& doc_;
  std::map<std::string, TimeStructure> closed_;
};

}  // namespace

std::vector<ClaimResult> evaluate_claims(const dsl::SpecDocument& doc) {
  Evaluator eval(doc);
  std::vector<ClaimResult> out;
  out.reserve(doc.claims.size());
  for (const auto& claim : doc.claims) out.push_back(eval.evaluate(claim));
  return out;
}

}  // namespace chronoref
