#include "actkit/classifiers.hpp"

#include <algorithm>
#include <stdexcept>

#include "actkit/error.hpp"

namespace actkit {

ActAnalysis::ActAnalysis(Act act, bool cross_check)
    : act_(std::move(act)), cross_check_(cross_check) {}

ElementSet ActAnalysis::zeros() {
  if (!zeros_) zeros_ = actkit::zeros(act_);
  return *zeros_;
}

const std::vector<Subact>& ActAnalysis::subacts() {
  if (!subacts_) subacts_ = subact_lattice(act_);
  return *subacts_;
}

const ActProfile& ActAnalysis::profile() {
  if (!profile_) profile_ = act_profile(act_, subacts());
  return *profile_;
}

const std::vector<MonocyclicCongruence>& ActAnalysis::monocyclics() {
  if (!monocyclics_) monocyclics_ = monocyclic_congruences(act_);
  return *monocyclics_;
}

const CongruenceSet& ActAnalysis::congruences() {
  if (!congruences_) congruences_ = all_congruences(act_);
  return *congruences_;
}

const UniformityVerdict& ActAnalysis::uniformity() {
  if (!uniformity_) uniformity_ = is_uniform(*this);
  return *uniformity_;
}

const IrreducibilityReport& ActAnalysis::irreducibility() {
  if (!irreducibility_) irreducibility_ = irreducibility_report(*this);
  return *irreducibility_;
}

const EndoReport& ActAnalysis::endomorphism_summary() {
  if (!endos_) endos_ = endomorphism_report(*this);
  return *endos_;
}

// ---------------------------------------------------------------------------

namespace {

// ρ ∩ ρ_B ≠ Δ: some block of ρ holds two elements of B.
bool meets_nontrivially(const Congruence& rho, ElementSet b) {
  if (rho.size() <= 64) {
    std::uint64_t seen = 0;
    for (Index x : b) {
      const std::uint64_t bit = std::uint64_t{1} << rho.label(x);
      if (seen & bit) return true;
      seen |= bit;
    }
    return false;
  }
  std::vector<Index> labels;
  for (Index x : b) {
    const Index l = rho.label(x);
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) return true;
    labels.push_back(l);
  }
  return false;
}

void require_nonzero_subact(ActAnalysis& a, ElementSet b) {
  if (b.size() < 2 || !is_subact(a.act(), b))
    throw PreconditionError("is_large needs a subact with at least two "
                            "elements");
}

}  // namespace

LargenessVerdict is_large_exhaustive(ActAnalysis& a, ElementSet b) {
  require_nonzero_subact(a, b);
  for (const Congruence& rho : a.congruences().members)
    if (!rho.is_diagonal() && !meets_nontrivially(rho, b))
      return {false, rho};
  return {true, std::nullopt};
}

LargenessVerdict is_large(ActAnalysis& a, ElementSet b) {
  require_nonzero_subact(a, b);
  LargenessVerdict verdict{true, std::nullopt};
  for (const auto& mc : a.monocyclics())
    if (!meets_nontrivially(mc.rho, b)) {
      verdict = {false, mc.rho};
      break;
    }
  if (a.cross_check() && is_large_exhaustive(a, b).is_large != verdict.is_large)
    throw std::logic_error("monocyclic and exhaustive largeness disagree");
  return verdict;
}

LargenessVerdict is_large(const Act& a, ElementSet b) {
  ActAnalysis analysis(a);
  return is_large(analysis, b);
}

UniformityVerdict is_uniform(ActAnalysis& a) {
  if (a.size() < 2) throw PreconditionError("is_uniform needs |A| >= 2");
  const ElementSet z = a.zeros();
  if (z.size() >= 3) {
    auto it = z.begin();
    const Index z0 = *it++;
    const Index z1 = *it++;
    const Index z2 = *it;
    ElementSet pair = ElementSet::single(z0) | ElementSet::single(z1);
    return {false, pair, monocyclic(a.act(), z0, z2)};
  }
  std::vector<ElementSet> done;
  for (Index x = 0; x < a.size(); ++x) {
    if (z.contains(x)) continue;
    const ElementSet c = cyclic_subact(a.act(), x);
    bool repeat = false;
    for (ElementSet d : done) repeat = repeat || d == c;
    if (repeat) continue;
    done.push_back(c);
    auto verdict = is_large(a, c);
    if (!verdict.is_large) return {false, c, std::move(verdict.witness)};
  }
  if (z.size() == 2) {
    auto verdict = is_large(a, z);
    if (!verdict.is_large) return {false, z, std::move(verdict.witness)};
  }
  return {true, std::nullopt, std::nullopt};
}

UniformityVerdict is_uniform(const Act& a) {
  ActAnalysis analysis(a);
  return is_uniform(analysis);
}

bool is_uniform_by_translations(ActAnalysis& a) {
  const Act& act = a.act();
  if (!act.semigroup().is_monoid())
    throw PreconditionError("translation criterion needs a monoid");
  const ElementSet z = a.zeros();
  if (z.size() > 1)
    throw PreconditionError("translation criterion needs at most one zero");
  if (a.size() < 2) throw PreconditionError("translation criterion needs |A| >= 2");
  const auto n = static_cast<Index>(act.semigroup().size());
  for (Index x = 0; x < a.size(); ++x) {
    if (z.contains(x)) continue;
    for (const auto& mc : a.monocyclics()) {
      bool found = false;
      for (Index s = 0; s < n && !found; ++s)
        for (Index t = 0; t < n && !found; ++t) {
          const Index xs = act(x, s), xt = act(x, t);
          found = xs != xt && mc.rho.related(xs, xt);
        }
      if (!found) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

IrreducibilityReport irreducibility_report(ActAnalysis& a) {
  if (a.size() < 2) throw PreconditionError("irreducibility needs |A| >= 2");
  const auto& monos = a.monocyclics();
  IrreducibilityReport report;
  Congruence least = monos.front().rho;
  for (const auto& mc : monos) least = meet(least, mc.rho);
  report.is_sdi = !least.is_diagonal();
  if (report.is_sdi) report.least_nondiagonal = least;

  report.is_irreducible = true;
  for (std::size_t i = 0; i < monos.size() && report.is_irreducible; ++i)
    for (std::size_t j = i + 1; j < monos.size(); ++j)
      if (meet(monos[i].rho, monos[j].rho).is_diagonal()) {
        report.is_irreducible = false;
        report.disjoint_pair.emplace(monos[i].rho, monos[j].rho);
        break;
      }
  if (report.is_sdi != report.is_irreducible)
    throw std::logic_error("finite act with SDI != irreducible");
  return report;
}

IrreducibilityReport irreducibility_report(const Act& a) {
  ActAnalysis analysis(a);
  return irreducibility_report(analysis);
}

// ---------------------------------------------------------------------------

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::NotUniform: return "NotUniform";
    case StructureKind::ZeroCoproductZero: return "ZeroCoproductZero";
    case StructureKind::IndecomposableCoproductZero:
      return "IndecomposableCoproductZero";
    case StructureKind::Indecomposable: return "Indecomposable";
    case StructureKind::SimplePlusZero: return "SimplePlusZero";
    case StructureKind::IndecomposableSimple: return "IndecomposableSimple";
    case StructureKind::RzsCyclic: return "RzsCyclic";
    case StructureKind::RzsSimplePlusZero: return "RzsSimplePlusZero";
    case StructureKind::Unmatched: return "Unmatched";
  }
  return "?";
}

std::string_view to_string(MonoidCase c) {
  switch (c) {
    case MonoidCase::Group: return "Group";
    case MonoidCase::GroupPlusZero: return "GroupPlusZero";
    case MonoidCase::GroupPlusTwoLeftZeros: return "GroupPlusTwoLeftZeros";
    case MonoidCase::NotUniform: return "NotUniform";
    case MonoidCase::NotRegularMonoid: return "NotRegularMonoid";
  }
  return "?";
}

bool is_simple_subact(ActAnalysis& a, ElementSet b) {
  for (const Subact& sub : a.subacts())
    if (sub.members != b && sub.members.is_subset_of(b)) return false;
  return true;
}

bool is_theta_simple_subact(ActAnalysis& a, ElementSet b) {
  for (const Subact& sub : a.subacts())
    if (sub.size() >= 2 && sub.members != b && sub.members.is_subset_of(b))
      return false;
  return true;
}

namespace {

bool is_cyclic_set(ActAnalysis& a, ElementSet b) {
  for (Index x : b)
    if (cyclic_subact(a.act(), x) == b) return true;
  return false;
}

}  // namespace

StructureTag classify_structure(ActAnalysis& a) {
  StructureTag tag;
  if (!a.uniform()) return tag;
  const ActProfile& p = a.profile();
  const SemigroupProfile& sp = a.act().semigroup().profile();
  const ElementSet z = p.zeros;
  const ElementSet all = a.act().elements();

  if (p.is_decomposable()) {
    if (a.size() == 2 && z.size() == 2) {
      tag.kind = StructureKind::ZeroCoproductZero;
      return tag;
    }
    tag.kind = StructureKind::Unmatched;
    if (p.components.size() != 2) return tag;
    ElementSet theta, rest;
    for (ElementSet c : p.components) {
      if (c.size() == 1 && z.intersects(c))
        theta = c;
      else
        rest = c;
    }
    if (theta.empty() || rest.empty() || rest.intersects(z)) return tag;
    tag.main_part = rest;
    tag.zero = theta.front();
    if (sp.is_group) {
      if (is_simple_subact(a, rest)) tag.kind = StructureKind::SimplePlusZero;
    } else if (sp.is_right_zero_semigroup) {
      if (is_cyclic_set(a, rest) &&
          (is_simple_subact(a, rest) || is_theta_simple_subact(a, rest)))
        tag.kind = StructureKind::RzsSimplePlusZero;
    } else {
      const Act part = restrict_to(a.act(), rest).act;
      if (part.size() >= 2 && is_uniform(part).uniform)
        tag.kind = StructureKind::IndecomposableCoproductZero;
    }
    return tag;
  }

  tag.main_part = all;
  if (sp.is_group) {
    tag.kind = p.is_simple ? StructureKind::IndecomposableSimple
                           : StructureKind::Unmatched;
  } else if (sp.is_right_zero_semigroup) {
    const bool shape = is_cyclic_set(a, all) && z.size() <= 1 &&
                       (p.is_simple || p.is_theta_simple);
    tag.kind = shape ? StructureKind::RzsCyclic : StructureKind::Unmatched;
  } else {
    tag.kind = StructureKind::Indecomposable;
  }
  return tag;
}

StructureTag classify_structure(const Act& a) {
  ActAnalysis analysis(a);
  return classify_structure(analysis);
}

// ---------------------------------------------------------------------------

namespace {

// `g` (a subset of S containing the identity) is a group under S's product.
bool is_subgroup_with_identity(const Semigroup& s, ElementSet g) {
  const Index one = *s.identity();
  if (!g.contains(one)) return false;
  for (Index x : g) {
    bool inverse = false;
    for (Index y : g) {
      if (!g.contains(s(x, y))) return false;
      inverse = inverse || (s(x, y) == one && s(y, x) == one);
    }
    if (!inverse) return false;
  }
  return true;
}

}  // namespace

std::optional<MonoidCase> match_monoid_structure(const Semigroup& s) {
  if (!s.is_monoid()) return std::nullopt;
  const SemigroupProfile& p = s.profile();
  if (p.is_group) return MonoidCase::Group;
  const ElementSet lz = p.left_zeros;
  const ElementSet g = s.elements() - lz;
  const Index one = *s.identity();
  if (lz.size() == 1) {
    const Index theta = lz.front();
    for (Index x = 0; x < s.size(); ++x)
      if (s(x, theta) != theta) return std::nullopt;
    if (is_subgroup_with_identity(s, g)) return MonoidCase::GroupPlusZero;
    return std::nullopt;
  }
  if (lz.size() == 2) {
    if (!is_subgroup_with_identity(s, g)) return std::nullopt;
    auto it = lz.begin();
    const Index t1 = *it++;
    const Index t2 = *it;
    for (Index x : g) {
      if (x == one) continue;
      if (s(x, t1) != t2 || s(x, t2) != t1) return std::nullopt;
    }
    return MonoidCase::GroupPlusTwoLeftZeros;
  }
  return std::nullopt;
}

MonoidClassification classify_regular_uniform_monoid(const SemigroupPtr& s) {
  if (!s->is_monoid())
    throw PreconditionError("classify_regular_uniform_monoid needs a monoid");
  MonoidClassification out;
  if (!s->profile().is_regular) {
    out.verdict = MonoidCase::NotRegularMonoid;
    return out;
  }
  const Act regular = regular_act(s);
  out.uniform = regular.size() < 2 || is_uniform(regular).uniform;
  out.structure = match_monoid_structure(*s);

  out.all_cyclic_uniform = true;
  for (const Congruence& rho : all_congruences(regular).members) {
    const Act cyclic = quotient(regular, rho).act;
    if (cyclic.size() >= 2 && !is_uniform(cyclic).uniform) {
      out.all_cyclic_uniform = false;
      break;
    }
  }
  out.consistent = out.uniform == out.structure.has_value() &&
                   out.uniform == out.all_cyclic_uniform;
  out.verdict = out.uniform && out.structure ? *out.structure
                                             : MonoidCase::NotUniform;
  return out;
}

// ---------------------------------------------------------------------------

EndoReport endomorphism_report(ActAnalysis& a) {
  if (a.size() < 2) throw PreconditionError("endomorphism_report needs |A| >= 2");
  const Act& act = a.act();
  const auto m = static_cast<Index>(act.size());
  const ElementSet z = a.zeros();
  EndoReport report;
  report.uniform = a.uniform();

  for (ActHom& f : endomorphisms(act)) {
    EndoEntry e;
    e.is_mono = f.is_injective();
    e.is_epi = f.is_surjective(m);
    for (Index theta : z) {
      ZeroNilpotency zn;
      zn.zero = theta;
      zn.fixed = f(theta) == theta;
      for (Index x = 0; x < m; ++x)
        if (x != theta && f(x) == theta) zn.preimage_nontrivial = true;
      e.per_zero.push_back(zn);
    }

    std::vector<Index> power = f.image;  // f^k, starting at k = 1
    for (unsigned k = 1; k <= m; ++k) {
      const ElementSet image = ElementSet::of(power);
      if (e.stabilization_n == 0) {
        bool injective_on_image = true;
        for (Index x : image)
          for (Index y : image)
            if (x < y && power[x] == power[y]) injective_on_image = false;
        if (injective_on_image) e.stabilization_n = k;
      }
      if (image.size() == 1) {
        e.is_nilpotent = true;
        for (auto& zn : e.per_zero)
          if (!zn.exponent && image.front() == zn.zero) zn.exponent = k;
      }
      for (Index x = 0; x < m; ++x) power[x] = f(power[x]);
    }

    report.meet_condition_holds = report.meet_condition_holds && e.stabilization_n > 0;
    report.epi_iff_iso = report.epi_iff_iso && (!e.is_epi || e.is_mono);
    if (report.uniform) {
      if (e.is_mono == e.is_nilpotent) report.mono_iff_not_nilpotent = false;
      for (const auto& zn : e.per_zero)
        if (zn.fixed && zn.preimage_nontrivial != zn.exponent.has_value())
          report.preimage_iff_nilpotent = false;
      if (z.empty() && !e.is_mono) report.zero_free_all_mono = false;
    }
    e.map = std::move(f);
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// [a] and [b] are distinct zeros of S/ρ.
bool keeps_two_zeros(const Act& regular, const Congruence& rho, Index a,
                     Index b) {
  if (rho.related(a, b)) return false;
  const auto n = static_cast<Index>(regular.semigroup().size());
  for (Index s = 0; s < n; ++s)
    if (!rho.related(regular(a, s), a) || !rho.related(regular(b, s), b))
      return false;
  return true;
}

}  // namespace

TwoZeroConstruction construct_two_zero_uniform(const SemigroupPtr& s) {
  if (!s->is_monoid())
    throw PreconditionError("construct_two_zero_uniform needs a monoid");
  TwoZeroConstruction out;
  if (s->profile().is_left_reversible) return out;
  out.applicable = true;

  const auto n = static_cast<Index>(s->size());
  for (Index a = 0; a < n && !out.generators; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (!right_ideal(*s, a, false).intersects(right_ideal(*s, b, false))) {
        out.generators = ElementPair{a, b};
        break;
      }
  const auto [a, b] = *out.generators;

  const Act regular = regular_act(s);
  std::vector<ElementPair> seeds;
  for (Index x : right_ideal(*s, a, false)) seeds.emplace_back(a, x);
  for (Index x : right_ideal(*s, b, false)) seeds.emplace_back(b, x);
  Congruence rho = congruence_closure(regular, seeds);
  if (!keeps_two_zeros(regular, rho, a, b))
    throw std::logic_error("Rees factor by aS and bS lost its two zeros");

  const auto monos = monocyclic_congruences(regular);
  bool grown = true;
  while (grown) {
    grown = false;
    for (const auto& mc : monos) {
      if (rho.contains(mc.rho)) continue;
      Congruence next = join(regular, rho, mc.rho);
      if (keeps_two_zeros(regular, next, a, b)) {
        rho = std::move(next);
        grown = true;
        break;
      }
    }
  }

  Quotient q = quotient(regular, rho);
  out.zeros = ElementPair{q.projection(a), q.projection(b)};
  out.congruence = std::move(rho);
  ActAnalysis analysis(q.act);
  const ElementSet z = analysis.zeros();
  out.verified = q.act.size() >= 3 && z.size() == 2 &&
                 z.contains(out.zeros->first) && z.contains(out.zeros->second) &&
                 is_uniform(analysis).uniform &&
                 irreducibility_report(analysis).is_sdi;
  out.act = std::move(q.act);
  return out;
}

PowerEmbedding embed_in_power_act(const Act& a) {
  const std::size_t n = a.semigroup().size();
  if (n > kMaxPowerActExponent)
    throw BudgetExceeded("power act {0,1}^S refused for |S| > 20");
  const std::size_t bound = std::size_t{1} << n;
  if (a.size() > bound)
    return {std::nullopt, "|A| = " + std::to_string(a.size()) +
                              " exceeds 2^|S| = " + std::to_string(bound)};
  const Act power = power01(a.semigroup_ptr());
  if (auto hom = first_embedding(a, power)) return {std::move(hom), ""};
  return {std::nullopt, "no monomorphism into {0,1}^S exists"};
}

namespace {

bool connected(const Act& a) {
  const auto labels = component_labels(a);
  return std::all_of(labels.begin(), labels.end(),
                     [](Index l) { return l == 0; });
}

}  // namespace

std::optional<AmalgamWitness> non_uniform_amalgam(const SemigroupPtr& s) {
  const Act regular = regular_act(s);
  for (Index x = 0; x < s->size(); ++x) {
    const ElementSet ideal = right_ideal(*s, x, false);
    if (ideal == s->elements()) continue;
    const Restriction u = restrict_to(regular, ideal);
    Amalgam q = amalgam(regular, regular, u.act, u.inclusion, u.inclusion);
    if (q.act.size() >= 2 && connected(q.act) && !is_uniform(q.act).uniform)
      return AmalgamWitness{"S amalgamated over sS", x, std::move(q.act)};
  }
  if (!s->is_monoid()) {
    const Act one = regular_act_with_identity(s);
    ActHom inclusion;
    for (Index x = 0; x < s->size(); ++x) inclusion.image.push_back(x);
    Amalgam q = amalgam(one, one, regular, inclusion, inclusion);
    if (connected(q.act) && !is_uniform(q.act).uniform)
      return AmalgamWitness{"S1 amalgamated over S", std::nullopt, std::move(q.act)};
  }
  return std::nullopt;
}

}  // namespace actkit
