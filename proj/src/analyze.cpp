#include "actkit/analyze.hpp"

#include "actkit/classifiers.hpp"

namespace actkit {

namespace {

Json sets_json(const std::vector<ElementSet>& sets) {
  Json j = Json::array();
  for (ElementSet s : sets) j.push_back(to_json(s));
  return j;
}

}  // namespace

Json profile_json(const Semigroup& s) {
  const SemigroupProfile& p = s.profile();
  Json j{{"order", s.size()},
         {"identity", s.identity() ? Json(*s.identity()) : Json(nullptr)},
         {"idempotents", to_json(p.idempotents)},
         {"left_zeros", to_json(p.left_zeros)},
         {"right_zeros", to_json(p.right_zeros)},
         {"left_identities", to_json(p.left_identities)},
         {"group", p.is_group},
         {"right_zero_semigroup", p.is_right_zero_semigroup},
         {"left_zero_semigroup", p.is_left_zero_semigroup},
         {"regular", p.is_regular},
         {"left_reversible", p.is_left_reversible},
         {"right_ideals_aS_meet", p.right_ideals_aS_meet},
         {"left_cancellative", p.is_left_cancellative},
         {"right_simple", p.is_right_simple}};
  if (p.unit_group) j["unit_group"] = to_json(*p.unit_group);
  return j;
}

Json analyze_act(const Act& act) {
  ActAnalysis a(act);
  const ActProfile& p = a.profile();
  Json j;
  j["size"] = act.size();
  j["zeros"] = a.zeros().size();
  j["cocyclic"] = p.is_cocyclic;
  Json profile{{"zero_elements", to_json(a.zeros())},
               {"simple", p.is_simple},
               {"theta_simple", p.is_theta_simple},
               {"components", sets_json(p.components)},
               {"subact_count", a.subacts().size()}};
  if (p.monolith) profile["monolith"] = to_json(*p.monolith);
  j["profile"] = profile;
  if (act.size() < 2) {
    j["uniform"] = nullptr;
    j["sdi"] = nullptr;
    j["irreducible"] = nullptr;
    j["structure"] = nullptr;
    j["witness"] = Json::object();
    return j;
  }
  const UniformityVerdict& u = a.uniformity();
  const IrreducibilityReport& r = a.irreducibility();
  j["uniform"] = u.uniform;
  j["sdi"] = r.is_sdi;
  j["irreducible"] = r.is_irreducible;
  const StructureTag tag = classify_structure(a);
  j["structure"] = std::string(to_string(tag.kind));
  Json w = Json::object();
  if (u.failing_subact) w["failing_subact"] = to_json(*u.failing_subact);
  if (u.witness) w["congruence"] = to_json(*u.witness);
  if (r.least_nondiagonal) w["least_nondiagonal"] = to_json(*r.least_nondiagonal);
  if (r.disjoint_pair)
    w["disjoint_pair"] = Json::array({to_json(r.disjoint_pair->first),
                                      to_json(r.disjoint_pair->second)});
  if (tag.main_part) w["main_part"] = to_json(*tag.main_part);
  if (tag.zero) w["split_zero"] = *tag.zero;
  j["witness"] = w;
  if (act.semigroup().is_monoid() && a.zeros().size() <= 1)
    j["translation_criterion"] = is_uniform_by_translations(a);
  return j;
}

Json analyze_semigroup(const SemigroupPtr& s) {
  Json j{{"profile", profile_json(*s)}, {"regular_act", analyze_act(regular_act(s))}};
  if (s->is_monoid()) {
    const MonoidClassification c = classify_regular_uniform_monoid(s);
    j["monoid_classification"] = {
        {"case", std::string(to_string(c.verdict))},
        {"uniform", c.uniform},
        {"structure", c.structure ? Json(std::string(to_string(*c.structure))) : Json(nullptr)},
        {"all_cyclic_uniform", c.all_cyclic_uniform},
        {"consistent", c.consistent}};
    const TwoZeroConstruction t = construct_two_zero_uniform(s);
    Json tz{{"applicable", t.applicable}, {"verified", t.verified}};
    if (t.generators) tz["generators"] = {t.generators->first, t.generators->second};
    if (t.congruence) tz["congruence"] = to_json(*t.congruence);
    if (t.act) tz["act"] = to_json(*t.act)["act"];
    if (t.zeros) tz["zeros"] = {t.zeros->first, t.zeros->second};
    j["two_zero_construction"] = tz;
  }
  return j;
}

}  // namespace actkit
