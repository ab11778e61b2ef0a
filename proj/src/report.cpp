#include "chronoref/report.hpp"

namespace chronoref::report {

Json pair_json(InstantPair p) { return Json::array({p.first.value, p.second.value}); }

namespace {

Json pairs_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& p : r.pairs()) out.push_back(pair_json(p));
  return out;
}

Json ids_json(const std::vector<InstantId>& ids) {
  Json out = Json::array();
  for (auto i : ids) out.push_back(i.value);
  return out;
}

}  // namespace

Json structure_json(const TimeStructure& s) {
  Json j;
  j["universe"] = s.universe_size();
  j["coincidence"] = pairs_json(s.coincidence());
  j["precedence"] = pairs_json(s.precedence());
  return j;
}

Json clock_json(const Clock& c) {
  Json j;
  j["name"] = c.name();
  j["ticks"] = ids_json(c.ticks());
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["holds"] = r.holds();
  j["passed"] = r.passed();
  Json axioms = Json::array();
  for (const auto& a : r.results) {
    Json e;
    e["name"] = axiom_name(a.axiom);
    e["holds"] = a.holds;
    e["witness"] = a.holds ? Json(nullptr) : ids_json(a.witness);
    axioms.push_back(std::move(e));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

Json to_json(const RefinementReport& r) {
  Json j;
  j["holds"] = r.holds;
  Json preds = Json::array();
  for (const auto& p : r.predicates) {
    Json e;
    e["name"] = predicate_name(p.predicate);
    e["holds"] = p.holds;
    e["witness"] = p.witness ? pair_json(*p.witness) : Json(nullptr);
    preds.push_back(std::move(e));
  }
  j["predicates"] = std::move(preds);
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["holds"] = r.holds;
  if (r.witness) {
    j["direction"] = direction_name(r.witness->direction);
    j["witness"] = pair_json(r.witness->pair);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const ConstraintVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? Json(v.witness->value) : Json(nullptr);
  return j;
}

Json to_json(const PreservationVerdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  if (v.failedHypothesis) j["failedHypothesis"] = hypothesis_name(*v.failedHypothesis);
  if (v.detail) j["detail"] = to_json(*v.detail);
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["law"] = law_name(r.law);
  j["universe"] = r.universe;
  j["structures"] = r.structures;
  j["instancesChecked"] = r.instancesChecked;
  j["hypothesesHeld"] = r.hypothesesHeld;
  j["holds"] = r.holds();
  if (r.counterexample) {
    Json ce = Json::array();
    for (const auto& s : *r.counterexample) ce.push_back(structure_json(s));
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const HarnessReport& r) {
  Json j;
  j["lemma"] = lemma_name(r.lemma);
  j["instances"] = r.instances;
  j["vacuous"] = r.vacuous;
  j["satisfied"] = r.satisfied;
  j["violated"] = r.violated;
  if (r.counterexample) {
    Json ce;
    ce["concrete"] = structure_json(r.counterexample->concrete);
    ce["abstract"] = structure_json(r.counterexample->abstract);
    Json clocks = Json::array();
    for (const auto& c : r.counterexample->clocks) clocks.push_back(clock_json(c));
    ce["clocks"] = std::move(clocks);
    ce["verdict"] = to_json(r.counterexample->verdict);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const ClaimResult& r) {
  Json j;
  j["claim"] = dsl::claim_keyword(r.claim.kind);
  auto finish = [&] {
    j["operands"] = r.claim.operands;
    j["outcome"] = outcome_name(r.outcome);
    return j;
  };
  if (!r.error.empty()) {
    j["holds"] = false;
    j["error"] = r.error;
    return finish();
  }
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, SpoResult>) {
          j["holds"] = r.outcome == Outcome::Pass;
          auto axioms = to_json(d.axioms);
          j["axiomsPassed"] = axioms["passed"];
          j["axioms"] = std::move(axioms["axioms"]);
          Json violations = Json::array();
          for (const auto& v : d.violations) violations.push_back(pair_json(v.witness));
          j["violations"] = std::move(violations);
        } else if constexpr (std::is_same_v<T, RefinementReport>) {
          auto body = to_json(d);
          j["holds"] = body["holds"];
          j["predicates"] = std::move(body["predicates"]);
        } else if constexpr (std::is_same_v<T, ConstraintVerdict>) {
          j["holds"] = d.holds;
          j["witness"] = d.witness ? Json(d.witness->value) : Json(nullptr);
        } else if constexpr (std::is_same_v<T, PreservationVerdict>) {
          const auto body = to_json(d);
          for (const auto& item : body.items()) j[item.key()] = item.value();
        }
      },
      r.detail);
  return finish();
}

Json envelope(Json payload) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  for (const auto& item : payload.items()) j[item.key()] = item.value();
  return j;
}

std::string emit_report(Json payload) { return envelope(std::move(payload)).dump(2) + "\n"; }

}  // namespace chronoref::report
