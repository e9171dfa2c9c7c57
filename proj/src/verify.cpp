#include "actkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "actkit/classifiers.hpp"
#include "actkit/error.hpp"

namespace actkit {

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Verified: return "verified";
    case VerdictKind::Falsified: return "falsified";
    case VerdictKind::Skipped: return "skipped";
  }
  return "?";
}

Json to_json(const EnumerationScope& scope) {
  Json j{{"min_semigroup_order", scope.min_semigroup_order},
         {"max_semigroup_order", scope.max_semigroup_order},
         {"min_act_order", scope.min_act_order},
         {"max_act_order", scope.max_act_order},
         {"up_to_iso", scope.up_to_iso},
         {"monoids_only", scope.monoids_only}};
  j["filter"] = scope.filter ? Json(std::string(to_string(*scope.filter))) : Json(nullptr);
  return j;
}

namespace {

Json counterexample_json(const Counterexample& c) {
  Json j{{"semigroup", c.semigroup}, {"witness", c.witness}};
  if (c.act) j["act"] = *c.act;
  return j;
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json j{{"theorem_id", r.theorem_id},
         {"statement", r.statement},
         {"scope", to_json(r.scope)},
         {"instances_enumerated", r.instances_enumerated},
         {"instances_checked", r.instances_checked},
         {"counterexample_count", r.counterexample_count},
         {"verdict", std::string(to_string(r.verdict))}};
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) ces.push_back(counterexample_json(c));
  j["counterexamples"] = ces;
  if (r.mismatch_count > 0 || r.theorem_id == "pr8") {
    Json ms = Json::array();
    for (const auto& c : r.mismatches) ms.push_back(counterexample_json(c));
    j["mismatch_count"] = r.mismatch_count;
    j["mismatches"] = ms;
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j;
}

// ---------------------------------------------------------------------------

namespace {

enum class Status { NotApplicable, Holds, Violated };

struct Outcome {
  Status status = Status::NotApplicable;
  Json witness;
};

Outcome not_applicable() { return {}; }
Outcome holds() { return {Status::Holds, {}}; }
Outcome violated(Json witness) { return {Status::Violated, std::move(witness)}; }
Outcome check_that(bool ok, Json witness) {
  return ok ? holds() : violated(std::move(witness));
}

using ActCheck = std::function<Outcome(ActAnalysis&)>;
using SemigroupCheck =
    std::function<Outcome(const SemigroupPtr&, const EnumerationScope&)>;

struct Theorem {
  TheoremInfo info;
  ActCheck act_check;
  SemigroupCheck semigroup_check;
  bool report_only = false;
};

Json sets_json(const std::vector<ElementSet>& sets) {
  Json j = Json::array();
  for (ElementSet s : sets) j.push_back(to_json(s));
  return j;
}

Json act_json(const Act& a) {
  return Json{{"action", table_json(a.action(), a.semigroup().size())}};
}

Json semigroup_json(const Semigroup& s) { return to_json(s)["semigroup"]; }

// Non-zero subacts: those with at least two elements.
std::vector<ElementSet> nonzero_subacts(ActAnalysis& a) {
  std::vector<ElementSet> out;
  for (const Subact& b : a.subacts())
    if (b.size() >= 2) out.push_back(b.members);
  return out;
}

ActAnalysis sub_analysis(ActAnalysis& a, ElementSet b) {
  return ActAnalysis(restrict_to(a.act(), b).act);
}

bool indecomposable(const Act& a) {
  const auto labels = component_labels(a);
  return std::all_of(labels.begin(), labels.end(),
                     [](Index l) { return l == 0; });
}

// --- act-level checks ------------------------------------------------------

Outcome check_pr1(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  const auto& r = a.irreducibility();
  if (!r.is_sdi && !r.is_irreducible) return not_applicable();
  const auto& u = a.uniformity();
  Json w{{"sdi", r.is_sdi}, {"irreducible", r.is_irreducible}, {"uniform", u.uniform}};
  if (u.failing_subact) w["failing_subact"] = to_json(*u.failing_subact);
  if (u.witness) w["congruence"] = to_json(*u.witness);
  return check_that(u.uniform, w);
}

// SDI and irreducibility recomputed from the full congruence lattice.
Outcome check_sdi_irr(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  std::vector<const Congruence*> nondiagonal;
  for (const Congruence& c : a.congruences().members)
    if (!c.is_diagonal()) nondiagonal.push_back(&c);
  Congruence least = Congruence::full(a.size());
  for (const Congruence* c : nondiagonal) least = meet(least, *c);
  const bool sdi = !least.is_diagonal();
  bool irreducible = true;
  Json pair;
  for (std::size_t i = 0; i < nondiagonal.size() && irreducible; ++i)
    for (std::size_t j = i + 1; j < nondiagonal.size(); ++j)
      if (meet(*nondiagonal[i], *nondiagonal[j]).is_diagonal()) {
        irreducible = false;
        pair = Json::array({to_json(*nondiagonal[i]), to_json(*nondiagonal[j])});
        break;
      }
  const auto& r = a.irreducibility();
  Json w{{"sdi", sdi}, {"irreducible", irreducible},
         {"report_sdi", r.is_sdi}, {"report_irreducible", r.is_irreducible}};
  if (!pair.is_null()) w["disjoint_pair"] = pair;
  return check_that(sdi == irreducible && sdi == r.is_sdi &&
                        irreducible == r.is_irreducible,
                    w);
}

Outcome check_co2(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  const auto subs = nonzero_subacts(a);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if ((subs[i] & subs[j]).size() < 2)
        return violated({{"B", to_json(subs[i])}, {"C", to_json(subs[j])}});
  return holds();
}

Outcome check_co5(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  return check_that(a.zeros().size() <= 2, {{"zeros", to_json(a.zeros())}});
}

Outcome check_co8(ActAnalysis& a) {
  if (a.size() < 2 || a.zeros().size() != 2 || !a.uniform())
    return not_applicable();
  return check_that(a.sdi(), {{"zeros", to_json(a.zeros())}, {"sdi", false}});
}

Outcome check_co18(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  const ElementSet z = a.zeros();
  for (ElementSet b : nonzero_subacts(a))
    if (!z.is_subset_of(b) && z.intersects(b))
      return violated({{"zeros", to_json(z)}, {"B", to_json(b)}});
  return holds();
}

Outcome check_pr9(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  const auto& components = a.profile().components;
  if (components.size() < 2) return not_applicable();
  Json w{{"components", sets_json(components)}};
  if (components.size() != 2) return violated(w);
  const ElementSet z = a.zeros();
  auto is_theta = [&](ElementSet c) { return c.size() == 1 && c.is_subset_of(z); };
  if (is_theta(components[0]) && is_theta(components[1])) return holds();
  ElementSet b;
  if (is_theta(components[0])) {
    b = components[1];
  } else if (is_theta(components[1])) {
    b = components[0];
  } else {
    return violated(w);
  }
  if (b.intersects(z)) return violated(w);
  ActAnalysis sub = sub_analysis(a, b);
  w["B_uniform"] = sub.uniform();
  return check_that(sub.uniform(), w);
}

Outcome check_pr4(ActAnalysis& a) {
  if (!a.zeros().empty()) return not_applicable();
  ActAnalysis extended(coproduct(a.act(), zero_act(a.act().semigroup_ptr(), 1)));
  const bool u = a.uniform(), ue = extended.uniform();
  const bool s = a.sdi(), se = extended.sdi();
  return check_that(u == ue && s == se, {{"uniform", u},
                                         {"uniform_plus_zero", ue},
                                         {"sdi", s},
                                         {"sdi_plus_zero", se}});
}

Outcome check_th1(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  std::optional<ElementSet> found;
  for (ElementSet b : nonzero_subacts(a)) {
    ActAnalysis sub = sub_analysis(a, b);
    const auto& p = sub.profile();
    if (!p.is_simple && !p.is_theta_simple) continue;
    if (!is_large(a, b).is_large) continue;
    if (sub.sdi()) {
      found = b;
      break;
    }
  }
  Json w{{"sdi", a.sdi()}};
  if (found) w["subact"] = to_json(*found);
  return check_that(a.sdi() == found.has_value(), w);
}

Outcome check_co1(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  const auto& p = a.profile();
  bool rhs = a.uniform() && p.is_cocyclic && p.monolith.has_value();
  if (rhs) {
    ActAnalysis mono = sub_analysis(a, *p.monolith);
    rhs = mono.sdi();
  }
  Json w{{"sdi", a.sdi()}, {"uniform", a.uniform()}, {"cocyclic", p.is_cocyclic}};
  if (p.monolith) w["monolith"] = to_json(*p.monolith);
  return check_that(a.sdi() == rhs, w);
}

Outcome check_le1(ActAnalysis& a) {
  if (a.size() < 2 || a.zeros().size() > 1) return not_applicable();
  bool all_large = true, cyclic_large = true, indecomposable_large = true,
       all_uniform = true;
  for (const Subact& b : a.subacts()) {
    if (b.size() < 2) continue;
    const bool large = is_large(a, b.members).is_large;
    all_large = all_large && large;
    if (b.is_cyclic()) cyclic_large = cyclic_large && large;
    ActAnalysis sub = sub_analysis(a, b.members);
    if (indecomposable(sub.act())) indecomposable_large = indecomposable_large && large;
    all_uniform = all_uniform && sub.uniform();
  }
  const bool u = a.uniform();
  return check_that(u == all_large && u == cyclic_large &&
                        u == indecomposable_large && u == all_uniform,
                    {{"uniform", u},
                     {"finitely_generated_large", all_large},
                     {"cyclic_large", cyclic_large},
                     {"indecomposable_large", indecomposable_large},
                     {"subacts_uniform", all_uniform}});
}

Outcome check_le3(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  const bool u = a.uniform(), s = a.sdi();
  for (ElementSet b : nonzero_subacts(a)) {
    if (b == a.act().elements()) continue;
    ActAnalysis sub = sub_analysis(a, b);
    const bool bu = sub.uniform(), bs = sub.sdi();
    Json w{{"B", to_json(b)}, {"uniform", u}, {"sdi", s},
           {"B_uniform", bu}, {"B_sdi", bs}};
    if ((u && !bu) || (s && !bs)) {
      w["part"] = "subact";
      return violated(w);
    }
    if (is_large(a, b).is_large && ((bu && !u) || (bs && !s))) {
      w["part"] = "large subact";
      return violated(w);
    }
  }
  return holds();
}

Outcome check_pr10(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  const Act& act = a.act();
  const ElementSet left_ids = act.semigroup().profile().left_identities;
  auto moved = [&](Index x) {
    for (Index s : left_ids)
      if (act(x, s) != x) return true;
    return false;
  };
  std::vector<Index> special;
  for (Index x = 0; x < act.size(); ++x)
    if (moved(x)) special.push_back(x);
  if (special.empty()) return not_applicable();
  const auto subs = nonzero_subacts(a);
  const Index first = special.front();
  for (ElementSet b : subs)
    if (!b.contains(first))
      return violated({{"a", first}, {"part", "i"}, {"B", to_json(b)}});
  if (!a.profile().is_cocyclic) return violated({{"a", first}, {"part", "ii"}});
  if (a.zeros().size() > 1)
    return violated({{"a", first}, {"part", "iii"}, {"zeros", to_json(a.zeros())}});
  const ElementSet orbit = cyclic_subact(act, first);
  for (Index b : special)
    if (cyclic_subact(act, b) != orbit)
      return violated({{"a", first}, {"b", b}, {"part", "iv"}});
  return holds();
}

bool simple_or_theta_simple(ActAnalysis& a, ElementSet b) {
  return is_simple_subact(a, b) || is_theta_simple_subact(a, b);
}

Outcome check_co13(ActAnalysis& a) {
  const Act& act = a.act();
  if (!act.semigroup().profile().is_right_zero_semigroup) return not_applicable();
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  const ElementSet all = act.elements();
  const ElementSet z = a.zeros();
  const StructureKind tag = classify_structure(a).kind;
  const bool tag_ok = tag == StructureKind::ZeroCoproductZero ||
                      tag == StructureKind::RzsCyclic ||
                      tag == StructureKind::RzsSimplePlusZero;
  bool shape = a.size() == 2 && z.size() == 2;
  for (Index x = 0; x < act.size() && !shape; ++x) {
    const ElementSet orbit = cyclic_subact(act, x);
    if (orbit.size() < 2 || z.size() > 1) continue;
    const ElementSet rest = all - orbit;
    const bool cyclic = rest.empty();
    const bool plus_zero = rest.size() == 1 && rest.is_subset_of(z);
    shape = (cyclic || plus_zero) && simple_or_theta_simple(a, orbit);
  }
  return check_that(shape && tag_ok,
                    {{"zeros", to_json(z)},
                     {"structure", std::string(to_string(tag))},
                     {"shape_found", shape}});
}

bool th2_shape(ActAnalysis& a) {
  if (a.size() == 2) return true;
  if (a.size() != 3 || a.zeros().size() != 1) return false;
  const ElementSet b = a.act().elements() - a.zeros();
  return is_subact(a.act(), b) && is_simple_subact(a, b);
}

Outcome check_th2(ActAnalysis& a) {
  if (!a.act().semigroup().profile().is_right_zero_semigroup) return not_applicable();
  if (a.size() < 2) return not_applicable();
  const auto& r = a.irreducibility();
  const bool shape = th2_shape(a);
  return check_that(r.is_sdi == shape && r.is_sdi == r.is_irreducible,
                    {{"sdi", r.is_sdi},
                     {"irreducible", r.is_irreducible},
                     {"shape", shape}});
}

Outcome check_pr5(ActAnalysis& a) {
  if (a.size() < 2) return not_applicable();
  const EndoReport& r = a.endomorphism_summary();
  for (const EndoEntry& e : r.entries) {
    if (e.stabilization_n == 0 || e.stabilization_n > a.size())
      return violated({{"endomorphism", to_json(e.map)}, {"part", "meet"}});
    if (e.is_epi && !e.is_mono)
      return violated({{"endomorphism", to_json(e.map)}, {"part", "epi"}});
  }
  return check_that(r.meet_condition_holds && r.epi_iff_iso, {{"part", "summary"}});
}

Outcome check_pr11(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform()) return not_applicable();
  for (const EndoEntry& e : a.endomorphism_summary().entries)
    if (e.is_mono == e.is_nilpotent)
      return violated({{"endomorphism", to_json(e.map)},
                       {"mono", e.is_mono},
                       {"nilpotent", e.is_nilpotent}});
  return holds();
}

Outcome check_pr12(ActAnalysis& a) {
  if (a.size() < 2 || !a.uniform() || a.zeros().empty()) return not_applicable();
  for (const EndoEntry& e : a.endomorphism_summary().entries)
    for (const ZeroNilpotency& zn : e.per_zero)
      if (zn.fixed && zn.preimage_nontrivial != zn.exponent.has_value())
        return violated({{"endomorphism", to_json(e.map)},
                         {"zero", zn.zero},
                         {"preimage_nontrivial", zn.preimage_nontrivial},
                         {"power_constant", zn.exponent.has_value()}});
  return holds();
}

Outcome check_rm2(ActAnalysis& a) {
  if (a.size() < 2 || !a.zeros().empty() || !a.uniform()) return not_applicable();
  for (const EndoEntry& e : a.endomorphism_summary().entries)
    if (!e.is_mono || !e.is_epi)
      return violated({{"endomorphism", to_json(e.map)}});
  return holds();
}

Outcome check_pr8(ActAnalysis& a) {
  if (!a.act().semigroup().is_monoid() || a.size() < 2 || a.zeros().size() > 1)
    return not_applicable();
  const bool u = a.uniform();
  const bool t = is_uniform_by_translations(a);
  return check_that(u == t, {{"uniform", u}, {"translation_criterion", t}});
}

Outcome check_co9(ActAnalysis& a) {
  if (a.size() < 2 || a.zeros().size() != 2 || !a.uniform()) return not_applicable();
  const std::size_t n = a.act().semigroup().size();
  const bool bound = n >= 63 || a.size() <= (std::size_t{1} << n);
  const PowerEmbedding e = embed_in_power_act(a.act());
  bool embedded = false;
  if (e.embedding) {
    const Act power = power01(a.act().semigroup_ptr());
    embedded = e.embedding->is_injective() &&
               is_homomorphism(a.act(), power, e.embedding->image);
  }
  Json w{{"size", a.size()}, {"bound_holds", bound}, {"embedding_found", embedded}};
  if (!e.reason.empty()) w["reason"] = e.reason;
  return check_that(bound && embedded, w);
}

// --- semigroup-level checks ------------------------------------------------

struct SemigroupFacts {
  SemigroupPtr s;
  ActAnalysis regular;
  bool uniform;
};

SemigroupFacts facts(const SemigroupPtr& s) {
  SemigroupFacts f{s, ActAnalysis(regular_act(s)), false};
  f.uniform = s->size() >= 2 && f.regular.uniform();
  return f;
}

bool is_left_zero(const Semigroup& s, Index x) {
  return s.profile().left_zeros.contains(x);
}

Outcome check_lem_idem(const SemigroupPtr& s, const EnumerationScope&) {
  if (!facts(s).uniform) return not_applicable();
  const auto& p = s->profile();
  for (Index e : p.idempotents)
    if (!p.left_zeros.contains(e) && !p.left_identities.contains(e))
      return violated({{"idempotent", e}});
  return holds();
}

Outcome check_prop_gi(const SemigroupPtr& s, const EnumerationScope&) {
  if (!s->is_monoid() || !facts(s).uniform) return not_applicable();
  const UnitDecomposition d = unit_group(*s);
  // G must also contain every subgroup of S, i.e. every element lying in
  // a subgroup with identity 1.
  bool maximal = true;
  const Index one = *s->identity();
  for (Index x = 0; x < s->size(); ++x) {
    const ElementSet p = powers(*s, x);
    if (p.contains(one) && !d.group.contains(x)) maximal = false;
  }
  return check_that(d.group_is_closed && d.group_has_two_sided_inverses &&
                        d.rest_is_two_sided_ideal && maximal,
                    {{"G", to_json(d.group)},
                     {"I", to_json(d.rest)},
                     {"closed", d.group_is_closed},
                     {"inverses", d.group_has_two_sided_inverses},
                     {"ideal", d.rest_is_two_sided_ideal},
                     {"maximal", maximal}});
}

Outcome check_le4(const SemigroupPtr& s, const EnumerationScope&) {
  if (s->size() < 2) return not_applicable();
  SemigroupFacts f = facts(s);
  const Semigroup& sg = *s;
  const auto& left_ids = sg.profile().left_identities;
  bool any = false;
  for (const Subact& sub : f.regular.subacts()) {
    const ElementSet ideal = sub.members;
    if (ideal.size() < 2 || !is_large(f.regular, ideal).is_large) continue;
    for (Index x = 0; x < sg.size(); ++x) {
      const ElementSet p = powers(sg, x);
      bool separated = true;
      for (Index i : ideal)
        for (Index j : ideal)
          if (i != j)
            for (Index u : p)
              for (Index v : p)
                if (sg(u, i) == sg(v, j)) separated = false;
      if (!separated) continue;
      any = true;
      if (!left_ids.contains(x))
        return violated({{"ideal", to_json(ideal)}, {"x", x}});
    }
  }
  return any ? holds() : not_applicable();
}

Outcome check_co11(const SemigroupPtr& s, const EnumerationScope&) {
  if (!s->is_monoid() || !facts(s).uniform) return not_applicable();
  const Index one = *s->identity();
  for (Index x = 0; x < s->size(); ++x)
    for (Index y = 0; y < s->size(); ++y)
      if ((*s)(x, y) == y && x != one && !is_left_zero(*s, y))
        return violated({{"x", x}, {"y", y}});
  return holds();
}

Outcome check_co17(const SemigroupPtr& s, const EnumerationScope&) {
  if (!s->is_monoid()) return not_applicable();
  SemigroupFacts f = facts(s);
  if (!f.uniform) return not_applicable();
  const ElementSet g = unit_group(*s).group;
  const ElementSet z = f.regular.zeros();
  for (Index x = 0; x < s->size(); ++x) {
    if (z.contains(x)) continue;
    ElementSet orbit;
    for (Index u : g) orbit.insert((*s)(u, x));
    if (orbit.size() != g.size())
      return violated({{"s", x}, {"G", to_json(g)}, {"Gs", to_json(orbit)}});
  }
  return holds();
}

Outcome check_co16(const SemigroupPtr& s, const EnumerationScope&) {
  const auto& p = s->profile();
  if (p.left_zeros.empty() || !facts(s).uniform) return not_applicable();
  for (Index x = 0; x < s->size(); ++x)
    for (Index y = 0; y < s->size(); ++y) {
      if (p.left_zeros.contains(y) || !p.left_zeros.contains((*s)(x, y))) continue;
      if (!powers(*s, x).intersects(p.left_zeros))
        return violated({{"x", x}, {"y", y}});
    }
  return holds();
}

Outcome check_co15(const SemigroupPtr& s, const EnumerationScope&) {
  const auto& p = s->profile();
  if (!p.left_zeros.empty() || !facts(s).uniform) return not_applicable();
  const bool group_if_monoid = !s->is_monoid() || p.is_group;
  return check_that(p.is_left_cancellative && p.is_right_simple && group_if_monoid,
                    {{"left_cancellative", p.is_left_cancellative},
                     {"right_simple", p.is_right_simple},
                     {"group_if_monoid", group_if_monoid}});
}

Outcome check_th3(const SemigroupPtr& s, const EnumerationScope&) {
  if (!s->is_monoid() || !s->profile().is_regular) return not_applicable();
  const MonoidClassification c = classify_regular_uniform_monoid(s);
  const bool uniform = s->size() < 2 || is_uniform(regular_act(s)).uniform;
  Json w{{"verdict", std::string(to_string(c.verdict))},
         {"uniform", c.uniform},
         {"uniform_recomputed", uniform},
         {"all_cyclic_uniform", c.all_cyclic_uniform},
         {"structure", c.structure ? Json(std::string(to_string(*c.structure))) : Json(nullptr)}};
  return check_that(c.consistent && c.uniform == uniform, w);
}

// Independent re-validation of a two-zero act.
bool two_zero_act_valid(const Act& act) {
  ActAnalysis a(act);
  return a.size() >= 3 && a.zeros().size() == 2 && a.uniform() && a.sdi();
}

Outcome check_pr7(const SemigroupPtr& s, const EnumerationScope& scope) {
  if (!s->is_monoid()) return not_applicable();
  if (!s->profile().is_left_reversible) {
    const TwoZeroConstruction c = construct_two_zero_uniform(s);
    Json w{{"left_reversible", false}, {"verified", c.verified}};
    if (c.act) w["act"] = act_json(*c.act);
    return check_that(c.applicable && c.act && c.verified && two_zero_act_valid(*c.act), w);
  }
  std::optional<Act> bad;
  for (std::size_t m = std::max<std::size_t>(3, scope.min_act_order);
       m <= scope.max_act_order && !bad; ++m)
    for_each_act(s, m, scope.up_to_iso, [&](const Act& act) {
      if (bad || zeros(act).size() != 2) return;
      ActAnalysis a(act);
      if (a.uniform()) bad = act;
    }, scope.budget);
  if (bad) return violated({{"left_reversible", true}, {"act", act_json(*bad)}});
  return holds();
}

Outcome check_ex1(const SemigroupPtr& s, const EnumerationScope&) {
  if (!s->profile().is_group) return not_applicable();
  const GroupCongruenceCorrespondence c = group_congruence_bijection(s);
  const std::size_t subgroup_count = subgroups(*s).size();
  const std::size_t congruence_count = all_congruences(regular_act(s)).size();
  return check_that(c.bijective && c.order_preserving &&
                        subgroup_count == congruence_count,
                    {{"bijective", c.bijective},
                     {"order_preserving", c.order_preserving},
                     {"subgroups", subgroup_count},
                     {"congruences", congruence_count}});
}

Outcome check_pr6(const SemigroupPtr& s, const EnumerationScope& scope) {
  if (!s->profile().is_group) {
    auto w = non_uniform_amalgam(s);
    if (!w) return violated({{"group", false}, {"amalgam_found", false}});
    return holds();
  }
  std::optional<Act> bad;
  for (std::size_t m = std::max<std::size_t>(2, scope.min_act_order);
       m <= scope.max_act_order && !bad; ++m)
    for_each_act(s, m, scope.up_to_iso, [&](const Act& act) {
      if (bad || !indecomposable(act)) return;
      if (!ActAnalysis(act).uniform()) bad = act;
    }, scope.budget);
  if (bad) return violated({{"group", true}, {"act", act_json(*bad)}});
  return holds();
}

// --- catalog ---------------------------------------------------------------

EnumerationScope scope_of(std::size_t max_s, std::size_t max_a,
                          std::optional<SemigroupFilter> filter = std::nullopt,
                          std::size_t min_s = 1) {
  EnumerationScope sc;
  sc.min_semigroup_order = min_s;
  sc.max_semigroup_order = max_s;
  sc.max_act_order = max_a;
  sc.filter = filter;
  sc.monoids_only = filter == SemigroupFilter::Monoid ||
                    filter == SemigroupFilter::RegularMonoid;
  return sc;
}

const std::vector<Theorem>& theorems() {
  using F = SemigroupFilter;
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> t;
    auto act = [&](std::string id, std::string statement, EnumerationScope sc,
                   ActCheck check, bool report_only = false) {
      t.push_back({{std::move(id), std::move(statement), sc, true},
                   std::move(check), nullptr, report_only});
    };
    auto sg = [&](std::string id, std::string statement, EnumerationScope sc,
                  SemigroupCheck check, bool act_level = false) {
      t.push_back({{std::move(id), std::move(statement), sc, act_level},
                   nullptr, std::move(check), false});
    };
    act("pr1", "subdirectly irreducible and irreducible acts are uniform",
        scope_of(3, 4), check_pr1);
    act("co2", "in a uniform act any two non-zero subacts share at least two elements",
        scope_of(3, 4), check_co2);
    act("co5", "a uniform act has at most two zeros", scope_of(3, 5), check_co5);
    act("co8", "a uniform act with two zeros is subdirectly irreducible",
        scope_of(3, 5), check_co8);
    act("co18", "in a uniform act each non-zero subact contains all zeros or none",
        scope_of(3, 4), check_co18);
    act("pr9", "a decomposable uniform act is Θ⊔Θ or B⊔Θ with B indecomposable, "
               "uniform and zero-free",
        scope_of(3, 4), check_pr9);
    act("pr4", "for a zero-free act A, A and A⊔Θ are together uniform and "
               "together subdirectly irreducible",
        scope_of(3, 4), check_pr4);
    sg("pr6", "all indecomposable acts are uniform exactly over groups; "
              "non-groups get an indecomposable non-uniform amalgam",
       scope_of(3, 4), check_pr6, true);
    act("th1", "an act is subdirectly irreducible iff it has a large simple or "
               "θ-simple subdirectly irreducible subact",
        scope_of(3, 4), check_th1);
    act("co1", "subdirectly irreducible iff uniform, cocyclic and the least "
               "non-zero subact is subdirectly irreducible",
        scope_of(3, 4), check_co1);
    act("le1", "with at most one zero: uniform, all non-zero f.g./cyclic/"
               "indecomposable subacts large, all non-zero subacts uniform agree",
        scope_of(3, 4), check_le1);
    act("pr8", "over a monoid, with at most one zero: uniform iff the "
               "translation criterion holds (report-only unless strict)",
        scope_of(3, 4, F::Monoid), check_pr8, true);
    act("pr10", "in a uniform act, an element moved by a left identity lies in "
                "every non-zero subact and generates the same cyclic subact as "
                "every other such element",
        scope_of(3, 4), check_pr10);
    act("co13", "uniform acts over right zero semigroups are Θ⊔Θ, aS¹ or aS¹⊔Θ",
        scope_of(3, 5, F::RightZero, 2), check_co13);
    act("th2", "over right zero semigroups: subdirectly irreducible iff |A| = 2 "
               "or A = B⊔Θ with B simple of order 2",
        scope_of(3, 5, F::RightZero, 2), check_th2);
    act("pr5", "every endomorphism has a power whose kernel meets the Rees "
               "congruence of its image trivially; epi iff iso",
        scope_of(3, 4), check_pr5);
    act("pr11", "on a uniform act an endomorphism is mono iff not nilpotent",
        scope_of(3, 4), check_pr11);
    act("pr12", "on a uniform act, f sends a non-zero element to a fixed zero "
                "iff some power of f is constant at it",
        scope_of(3, 4), check_pr12);
    act("rm2", "on a uniform zero-free act every endomorphism is an automorphism",
        scope_of(3, 4), check_rm2);
    sg("co16", "uniform S with a left zero: if xy is a left zero and y is not, "
               "some power of x is a left zero",
       scope_of(4, 1), check_co16);
    sg("co15", "a uniform semigroup without left zeros is left cancellative and "
               "right simple, and a group if it is a monoid",
       scope_of(4, 1), check_co15);
    sg("lem-idem", "in a uniform semigroup every idempotent is a left zero or "
                   "a left identity",
       scope_of(4, 1), check_lem_idem);
    sg("prop-GI", "a uniform monoid splits as its group of units plus a "
                  "two-sided ideal",
       scope_of(4, 1, F::Monoid), check_prop_gi);
    sg("le4", "if a large right ideal I is separated by the powers of x, "
              "then x is a left identity",
       scope_of(4, 1), check_le4);
    sg("co11", "in a uniform monoid xy = y forces x = 1 or y a left zero",
       scope_of(4, 1, F::Monoid), check_co11);
    sg("co17", "in a uniform monoid |Gs| = |G| for every s that is not a left zero",
       scope_of(4, 1, F::Monoid), check_co17);
    sg("th3", "a regular monoid is uniform iff all its cyclic acts are iff it "
              "is G, G⊔{θ} or G⊔{θ1,θ2} with the stated twist",
       scope_of(4, 1, F::RegularMonoid), check_th3);
    sg("pr7", "a monoid has a uniform act with two zeros and more than two "
              "elements iff it is not left reversible",
       scope_of(4, 5, F::Monoid), check_pr7, true);
    act("co9", "a uniform act with two zeros has at most 2^|S| elements and "
               "embeds in {0,1}^S",
        scope_of(3, 5), check_co9);
    sg("ex1", "for a group, H ↦ ρ_H is an order-preserving bijection between "
              "subgroups and right congruences",
       scope_of(4, 1, F::Group), check_ex1);
    act("le3", "subacts of uniform (subdirectly irreducible) acts inherit the "
               "property, and a large such subact passes it up",
        scope_of(3, 4), check_le3);
    act("sdi-irr", "a finite act is subdirectly irreducible iff irreducible",
        scope_of(3, 4), check_sdi_irr);
    return t;
  }();
  return all;
}

const Theorem& theorem(std::string_view id) {
  for (const Theorem& t : theorems())
    if (t.info.id == id) return t;
  throw PreconditionError("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const Theorem& t : theorems()) out.push_back(t.info);
    return out;
  }();
  return infos;
}

const TheoremInfo* find_theorem(std::string_view id) {
  for (const TheoremInfo& t : theorem_catalog())
    if (t.id == id) return &t;
  return nullptr;
}

EnumerationScope effective_scope(const TheoremInfo& theorem,
                                 const ScopeOverride& o) {
  EnumerationScope sc = theorem.default_scope;
  if (o.max_semigroup_order) {
    sc.max_semigroup_order = *o.max_semigroup_order;
    sc.min_semigroup_order = std::min(sc.min_semigroup_order, sc.max_semigroup_order);
  }
  if (o.max_act_order) {
    sc.max_act_order = *o.max_act_order;
    sc.min_act_order = std::min(sc.min_act_order, sc.max_act_order);
  }
  if (o.up_to_iso) sc.up_to_iso = *o.up_to_iso;
  if (o.budget) sc.budget = *o.budget;
  sc.jobs = o.jobs;
  sc.allow_order_five = o.allow_order_five;
  return sc;
}

// ---------------------------------------------------------------------------

namespace {

struct Tally {
  std::size_t enumerated = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<Counterexample> examples;
};

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void record(Tally& t, const Outcome& o, const Json& semigroup,
              std::optional<Json> act) const {
    ++t.enumerated;
    if (o.status == Status::NotApplicable) return;
    ++t.checked;
    if (o.status != Status::Violated) return;
    ++t.violations;
    if (t.examples.size() < cap_)
      t.examples.push_back({semigroup, std::move(act), o.witness});
  }

  void merge(Tally& into, Tally&& from) const {
    into.enumerated += from.enumerated;
    into.checked += from.checked;
    into.violations += from.violations;
    for (auto& c : from.examples)
      if (into.examples.size() < cap_) into.examples.push_back(std::move(c));
  }

 private:
  std::size_t cap_;
};

// Rebuilds the instance from its serialized form and re-runs the check:
// a reported counterexample must reproduce from the JSON alone.
void revalidate_act(const Theorem& t, const Act& act) {
  const Document d = document_from_json(to_json(act));
  ActAnalysis fresh(std::get<Act>(d));
  if (t.act_check(fresh).status != Status::Violated)
    throw std::logic_error(t.info.id + ": counterexample did not reproduce");
}

void revalidate_semigroup(const Theorem& t, const Semigroup& s,
                          const EnumerationScope& scope) {
  const Document d = document_from_json(to_json(s));
  auto fresh = std::make_shared<const Semigroup>(std::get<Semigroup>(d));
  if (t.semigroup_check(fresh, scope).status != Status::Violated)
    throw std::logic_error(t.info.id + ": counterexample did not reproduce");
}

unsigned worker_count(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs `task(i)` for i in [0, count) on a pool; rethrows the first error.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(jobs), std::max<std::size_t>(count, 1)));
  std::vector<std::future<void>> running;
  for (unsigned i = 0; i < threads; ++i)
    running.push_back(std::async(std::launch::async, worker));
  for (auto& f : running) f.get();
  if (error) std::rethrow_exception(error);
}

VerificationReport finish(const Theorem& t, const EnumerationScope& scope,
                          Tally&& tally, const VerifyOptions& options) {
  VerificationReport r;
  r.theorem_id = t.info.id;
  r.statement = t.info.statement;
  r.scope = scope;
  r.instances_enumerated = tally.enumerated;
  r.instances_checked = tally.checked;
  if (t.report_only && !options.strict_pr8) {
    r.mismatch_count = tally.violations;
    r.mismatches = std::move(tally.examples);
  } else {
    r.counterexample_count = tally.violations;
    r.counterexamples = std::move(tally.examples);
  }
  if (r.counterexample_count > 0) {
    r.verdict = VerdictKind::Falsified;
  } else if (r.instances_checked > 0) {
    r.verdict = VerdictKind::Verified;
  } else {
    r.verdict = VerdictKind::Skipped;
    r.reason = "no enumerated instance satisfies the hypothesis";
  }
  return r;
}

VerificationReport skipped(const Theorem& t, const EnumerationScope& scope,
                           const std::string& reason) {
  VerificationReport r;
  r.theorem_id = t.info.id;
  r.statement = t.info.statement;
  r.scope = scope;
  r.verdict = VerdictKind::Skipped;
  r.reason = reason;
  r.budget_exceeded = true;
  return r;
}

// Act-level theorems sharing one scope: one pass over every (S, m).
std::vector<VerificationReport> run_act_group(
    const std::vector<const Theorem*>& group, const EnumerationScope& scope,
    const VerifyOptions& options) {
  const Collector collector(options.max_counterexamples);
  std::vector<SemigroupPtr> semigroups;
  try {
    semigroups = enumerate_semigroups(scope);
  } catch (const BudgetExceeded& e) {
    std::vector<VerificationReport> out;
    for (const Theorem* t : group) out.push_back(skipped(*t, scope, e.what()));
    return out;
  }
  struct Task {
    std::size_t semigroup;
    std::size_t m;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < semigroups.size(); ++i)
    for (std::size_t m = scope.min_act_order; m <= scope.max_act_order; ++m)
      tasks.push_back({i, m});

  std::vector<std::vector<Tally>> results(tasks.size());
  std::vector<std::string> budget_errors(tasks.size());
  parallel_for(tasks.size(), scope.jobs, [&](std::size_t k) {
    const SemigroupPtr& s = semigroups[tasks[k].semigroup];
    const Json sj = semigroup_json(*s);
    std::vector<Tally> tallies(group.size());
    try {
      for_each_act(s, tasks[k].m, scope.up_to_iso, [&](const Act& act) {
        ActAnalysis a(act);
        for (std::size_t i = 0; i < group.size(); ++i) {
          const Outcome o = group[i]->act_check(a);
          if (o.status == Status::Violated) revalidate_act(*group[i], act);
          collector.record(tallies[i], o, sj,
                           o.status == Status::Violated
                               ? std::optional<Json>(act_json(act))
                               : std::nullopt);
        }
      }, scope.budget);
    } catch (const BudgetExceeded& e) {
      budget_errors[k] = e.what();
    }
    results[k] = std::move(tallies);
  });

  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    Tally total;
    std::string budget;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      if (!budget_errors[k].empty() && budget.empty()) budget = budget_errors[k];
      if (!results[k].empty()) collector.merge(total, std::move(results[k][i]));
    }
    if (!budget.empty()) {
      out.push_back(skipped(*group[i], scope, budget));
    } else {
      out.push_back(finish(*group[i], scope, std::move(total), options));
    }
  }
  return out;
}

VerificationReport run_semigroup_theorem(const Theorem& t,
                                         const EnumerationScope& scope,
                                         const VerifyOptions& options) {
  const Collector collector(options.max_counterexamples);
  std::vector<SemigroupPtr> semigroups;
  try {
    semigroups = enumerate_semigroups(scope);
  } catch (const BudgetExceeded& e) {
    return skipped(t, scope, e.what());
  }
  std::vector<Tally> results(semigroups.size());
  std::vector<std::string> budget_errors(semigroups.size());
  parallel_for(semigroups.size(), scope.jobs, [&](std::size_t k) {
    const SemigroupPtr& s = semigroups[k];
    try {
      const Outcome o = t.semigroup_check(s, scope);
      if (o.status == Status::Violated) revalidate_semigroup(t, *s, scope);
      collector.record(results[k], o, semigroup_json(*s), std::nullopt);
    } catch (const BudgetExceeded& e) {
      budget_errors[k] = e.what();
    }
  });
  Tally total;
  for (std::size_t k = 0; k < semigroups.size(); ++k) {
    if (!budget_errors[k].empty()) return skipped(t, scope, budget_errors[k]);
    collector.merge(total, std::move(results[k]));
  }
  return finish(t, scope, std::move(total), options);
}

using ScopeKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t,
                            bool, bool, int, std::uint64_t>;

ScopeKey key_of(const EnumerationScope& s) {
  return {s.min_semigroup_order, s.max_semigroup_order, s.min_act_order,
          s.max_act_order,       s.up_to_iso,           s.monoids_only,
          s.filter ? static_cast<int>(*s.filter) : -1, s.budget};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<VerificationReport> run(
    const std::vector<std::pair<const Theorem*, EnumerationScope>>& work,
    const VerifyOptions& options) {
  std::vector<std::optional<VerificationReport>> out(work.size());

  // Group act-level checks by scope, preserving first-seen order.
  std::map<ScopeKey, std::vector<std::size_t>> groups;
  std::vector<ScopeKey> order;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!work[i].first->act_check) continue;
    const ScopeKey key = key_of(work[i].second);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(i);
  }
  for (const ScopeKey& key : order) {
    const auto& members = groups[key];
    std::vector<const Theorem*> group;
    for (std::size_t i : members) group.push_back(work[i].first);
    const auto start = std::chrono::steady_clock::now();
    auto reports = run_act_group(group, work[members.front()].second, options);
    const double elapsed = seconds_since(start);
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (options.timing) reports[j].elapsed_seconds = elapsed;
      out[members[j]] = std::move(reports[j]);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work[i].first->act_check) continue;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = run_semigroup_theorem(*work[i].first, work[i].second, options);
    if (options.timing) r.elapsed_seconds = seconds_since(start);
    out[i] = std::move(r);
  }
  std::vector<VerificationReport> reports;
  for (auto& r : out) reports.push_back(std::move(*r));
  return reports;
}

}  // namespace

std::vector<VerificationReport> verify(std::span<const std::string> ids,
                                       const VerifyOptions& options) {
  std::vector<std::pair<const Theorem*, EnumerationScope>> work;
  for (const std::string& id : ids) {
    const Theorem& t = theorem(id);
    EnumerationScope scope = effective_scope(t.info, options.override);
    validate_scope(scope);
    work.emplace_back(&t, scope);
  }
  return run(work, options);
}

VerificationReport verify(std::string_view id, const VerifyOptions& options) {
  const std::string ids[] = {std::string(id)};
  return std::move(verify(ids, options).front());
}

VerificationReport verify(std::string_view id, const EnumerationScope& scope,
                          const VerifyOptions& options) {
  const Theorem& t = theorem(id);
  validate_scope(scope);
  return std::move(run({{&t, scope}}, options).front());
}

int exit_code(std::span<const VerificationReport> reports) {
  bool budget = false;
  for (const auto& r : reports) {
    if (r.verdict == VerdictKind::Falsified) return 1;
    budget = budget || r.budget_exceeded;
  }
  return budget ? 3 : 0;
}

}  // namespace actkit
