// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
//   acceptance            run all criteria
//   acceptance 3 7        run only criteria 3 and 7

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "actkit/classifiers.hpp"
#include "actkit/enumeration.hpp"
#include "actkit/fixtures.hpp"
#include "actkit/verify.hpp"
#include "oracles.hpp"

using namespace actkit;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Result()> run;
};

std::string str(const std::vector<Index>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string str(const Act& a) { return "act " + str({a.action().begin(), a.action().end()}); }

std::vector<SemigroupPtr> semigroups_up_to(std::size_t max_n) {
  std::vector<SemigroupPtr> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& s : enumerate_semigroups(n, false))
      out.push_back(std::make_shared<const Semigroup>(std::move(s)));
  return out;
}

/// Every labeled act of order min_m..max_m over every labeled semigroup of
/// order 1..max_s.
template <class Visit>
void each_act(std::size_t max_s, std::size_t min_m, std::size_t max_m, Visit&& visit) {
  for (const auto& s : semigroups_up_to(max_s))
    for (std::size_t m = min_m; m <= max_m; ++m) for_each_act(s, m, false, visit);
}

// --- 1 ----------------------------------------------------------------------

Result m3_example() {
  Result r;
  const Act m3 = regular_act(fixtures::m3());
  const ElementSet i = ElementSet::of(std::vector<Index>{1, 2});
  const LargenessVerdict v = is_large(m3, i);
  r.expect(!v.is_large, "{e,f} reported large");
  r.expect(v.witness.has_value(), "no witness");
  if (v.witness) {
    r.expect(!v.witness->is_diagonal(), "witness is the diagonal");
    r.expect(is_right_congruence(m3, *v.witness), "witness is not a right congruence");
    r.expect(meet(*v.witness, rees_congruence(m3, i)).is_diagonal(),
             "witness meets the Rees congruence nontrivially");
    r.detail = "witness " + str({v.witness->labels().begin(), v.witness->labels().end()});
  }
  std::size_t nonzero = 0;
  for (std::uint64_t x : oracle::subacts(m3)) {
    if (std::popcount(x) < 2) continue;
    ++nonzero;
    r.expect((x & i.bits()) != 0, "a non-zero subact misses I");
  }
  r.expect(nonzero == 2, "expected two non-zero subacts");
  r.detail += ", " + std::to_string(nonzero) + " non-zero subacts all meet I";
  return r;
}

// --- 2 ----------------------------------------------------------------------

Result implication_suite() {
  Result r;
  const std::vector<std::string> ids{"pr1", "co2", "co5", "co8", "co18", "pr9",
                                     "pr4", "le1", "le3", "th1", "co1", "sdi-irr"};
  VerifyOptions o;
  o.override.max_semigroup_order = 3;
  o.override.max_act_order = 4;
  o.override.up_to_iso = false;
  const auto reports = verify(ids, o);
  std::size_t enumerated = 0;
  for (const auto& rep : reports) {
    r.expect(rep.verdict == VerdictKind::Verified && rep.counterexample_count == 0 &&
                 rep.instances_checked > 0,
             rep.theorem_id + ": " + std::string(to_string(rep.verdict)) + ", " +
                 std::to_string(rep.counterexample_count) + " counterexamples");
    r.expect(rep.scope.max_semigroup_order == 3 && rep.scope.max_act_order == 4,
             rep.theorem_id + ": wrong scope");
    enumerated = std::max(enumerated, rep.instances_enumerated);
  }
  r.detail = std::to_string(ids.size()) + " statements, " + std::to_string(enumerated) +
             " acts, 0 counterexamples";
  return r;
}

// --- 3 ----------------------------------------------------------------------

// |A| = 3 with one zero θ whose complement B is closed and has no zero,
// i.e. B ⊔ Θ with B simple of order 2.
bool simple_pair_plus_zero(const Act& a) {
  if (a.size() != 3) return false;
  const std::uint64_t z = oracle::zero_mask(a);
  if (std::popcount(z) != 1) return false;
  const Index theta = static_cast<Index>(std::countr_zero(z));
  for (Index b = 0; b < 3; ++b) {
    if (b == theta) continue;
    for (Index s = 0; s < a.semigroup().size(); ++s)
      if (a(b, s) == theta) return false;
  }
  return true;
}

Result th2() {
  Result r;
  std::size_t acts = 0, sdi_count = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Index> table(n * n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) table[x * n + y] = y;
    const auto s = std::make_shared<const Semigroup>(n, table);
    for (std::size_t m = 2; m <= 5; ++m)
      for_each_act(s, m, false, [&](const Act& a) {
        ++acts;
        const IrreducibilityReport rep = irreducibility_report(a);
        const bool shape = a.size() == 2 || simple_pair_plus_zero(a);
        sdi_count += rep.is_sdi;
        r.expect(rep.is_sdi == shape, "n=" + std::to_string(n) + " " + str(a));
        r.expect(rep.is_sdi == rep.is_irreducible, "SDI and irreducible differ on " + str(a));
      });
  }
  r.detail = std::to_string(acts) + " acts, " + std::to_string(sdi_count) +
             " SDI, all of the two shapes";
  return r;
}

// --- 4 ----------------------------------------------------------------------

Result th3() {
  Result r;
  std::size_t monoids = 0, uniform_count = 0;
  for (const auto& s : semigroups_up_to(4)) {
    if (!s->is_monoid() || !s->profile().is_regular) continue;
    ++monoids;
    const MonoidClassification c = classify_regular_uniform_monoid(s);
    const std::string tag = "monoid " + str({s->table().begin(), s->table().end()});
    // The one-element monoid is the trivial group.
    const bool uniform = s->size() == 1 || is_uniform(regular_act(s)).uniform;
    bool cyclic_uniform = true;
    if (s->size() > 1) {
      const Act regular = regular_act(s);
      for (const Congruence& rho : all_congruences(regular).members) {
        if (rho.block_count() < 2) continue;
        cyclic_uniform = cyclic_uniform && is_uniform(quotient(regular, rho).act).uniform;
      }
    }
    const auto structure = match_monoid_structure(*s);
    uniform_count += uniform;
    r.expect(c.verdict != MonoidCase::NotRegularMonoid, tag + ": not treated as regular");
    r.expect((c.verdict != MonoidCase::NotUniform) == uniform, tag + ": verdict vs is_uniform");
    r.expect(structure.has_value() == uniform, tag + ": structure vs is_uniform");
    if (structure && uniform) r.expect(*structure == c.verdict, tag + ": structure vs verdict");
    r.expect(cyclic_uniform == uniform, tag + ": cyclic acts vs is_uniform");
    r.expect(c.consistent, tag + ": classifier reports inconsistency");
  }
  const std::pair<SemigroupPtr, MonoidCase> expected[] = {
      {fixtures::z2(), MonoidCase::Group},
      {fixtures::u3(), MonoidCase::GroupPlusZero},
      {fixtures::w4(), MonoidCase::GroupPlusTwoLeftZeros},
      {fixtures::m3(), MonoidCase::NotUniform}};
  for (const auto& [s, want] : expected) {
    const MonoidCase got = classify_regular_uniform_monoid(s).verdict;
    r.expect(got == want, "fixture classified " + std::string(to_string(got)));
  }
  r.detail = std::to_string(monoids) + " regular monoids, " + std::to_string(uniform_count) +
             " uniform; Z2, U3, W4, M3 as expected";
  return r;
}

// --- 5 ----------------------------------------------------------------------

Result oracle_equivalences() {
  Result r;
  std::size_t acts = 0, pairs = 0, lattices = 0, subacts = 0, pr8_checked = 0,
              pr8_mismatch = 0;
  each_act(3, 1, 5, [&](const Act& a) {
    ++acts;
    const std::size_t m = a.size();
    // (a)
    for (const auto& mc : monocyclic_congruences(a)) {
      ++pairs;
      const auto expected = oracle::labels_of(oracle::chain_relation(a, {{mc.x, mc.y}}), m);
      const std::vector<Index> got(mc.rho.labels().begin(), mc.rho.labels().end());
      r.expect(got == expected, "closure " + str(a));
    }
    // (b)
    const auto filtered = oracle::congruences(a);
    const CongruenceSet joined = all_congruences(a);
    ++lattices;
    bool same = joined.size() == filtered.size();
    for (std::size_t i = 0; same && i < filtered.size(); ++i)
      same = joined.members[i] == Congruence(filtered[i]);
    r.expect(same, "lattice " + str(a));
    r.expect(congruences_by_partition_filter(a).members == joined.members,
             "library partition filter " + str(a));
    // (c)
    ActAnalysis analysis(a, false);
    for (std::uint64_t b : oracle::subacts(a)) {
      if (std::popcount(b) < 2) continue;
      ++subacts;
      r.expect(is_large(analysis, ElementSet(b)).is_large == oracle::is_large(filtered, b),
               "largeness " + str(a));
    }
    // (d), report-only
    if (m >= 2 && a.semigroup().is_monoid() && std::popcount(oracle::zero_mask(a)) <= 1) {
      ++pr8_checked;
      pr8_mismatch += analysis.uniform() != is_uniform_by_translations(analysis);
    }
  });
  r.detail = std::to_string(acts) + " acts: " + std::to_string(pairs) + " closures, " +
             std::to_string(lattices) + " lattices, " + std::to_string(subacts) +
             " largeness checks; translation criterion " + std::to_string(pr8_checked) +
             " acts, " + std::to_string(pr8_mismatch) + " mismatches (report-only)";
  return r;
}

// --- 6 ----------------------------------------------------------------------

std::vector<Index> compose(const std::vector<Index>& f, const std::vector<Index>& g) {
  std::vector<Index> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

ElementSet image(const std::vector<Index>& f) { return ElementSet::of(f); }

Result endomorphism_suite() {
  Result r;
  std::size_t acts = 0, endos = 0;
  each_act(3, 2, 4, [&](const Act& a) {
    ++acts;
    const std::size_t m = a.size();
    const bool uniform = is_uniform(a).uniform;
    const ElementSet z = zeros(a);
    for (const ActHom& h : endomorphisms(a)) {
      ++endos;
      const std::vector<Index>& f = h.image;
      // Powers f¹..f^|A|.
      std::vector<std::vector<Index>> powers{f};
      while (powers.size() < m) powers.push_back(compose(f, powers.back()));
      bool stabilizes = false;
      for (const auto& fn : powers)
        stabilizes = stabilizes ||
                     meet(kernel(fn), rees_congruence(a, image(fn))).is_diagonal();
      r.expect(stabilizes, "no n with trivial meet on " + str(a) + " f=" + str(f));
      if (!uniform) continue;

      const bool mono = image(f).size() == m;
      bool nilpotent = false;
      for (const auto& fn : powers) nilpotent = nilpotent || image(fn).size() == 1;
      r.expect(mono != nilpotent, "mono vs nilpotent on " + str(a) + " f=" + str(f));
      for (Index theta : z) {
        if (f[theta] != theta) continue;
        bool preimage = false;
        for (Index x = 0; x < m; ++x) preimage = preimage || (x != theta && f[x] == theta);
        bool constant = false;
        for (const auto& fn : powers)
          constant = constant || std::all_of(fn.begin(), fn.end(),
                                             [&](Index v) { return v == theta; });
        r.expect(preimage == constant, "preimage vs constant on " + str(a) + " f=" + str(f));
      }
      if (z.empty()) r.expect(mono, "zero-free uniform act with non-mono " + str(f));
    }
    ActAnalysis analysis(a);
    const EndoReport& rep = analysis.endomorphism_summary();
    r.expect(rep.meet_condition_holds && rep.mono_iff_not_nilpotent &&
                 rep.preimage_iff_nilpotent && rep.zero_free_all_mono,
             "library report disagrees on " + str(a));
  });
  r.detail = std::to_string(acts) + " acts, " + std::to_string(endos) + " endomorphisms";
  return r;
}

// --- 7 ----------------------------------------------------------------------

Result pr7() {
  Result r;
  std::size_t constructed = 0, reversible = 0, two_zero_acts = 0;
  bool l21_seen = false;
  for (const auto& s : semigroups_up_to(4)) {
    if (!s->is_monoid()) continue;
    const std::string tag = "monoid " + str({s->table().begin(), s->table().end()});
    if (!s->profile().is_left_reversible) {
      ++constructed;
      const TwoZeroConstruction c = construct_two_zero_uniform(s);
      r.expect(c.applicable && c.act.has_value(), tag + ": no act constructed");
      if (!c.act) continue;
      // Re-validate from the table alone.
      const Act fresh(c.act->semigroup_ptr(), c.act->size(),
                      {c.act->action().begin(), c.act->action().end()});
      ActAnalysis a(fresh);
      r.expect(a.size() >= 3 && a.zeros().size() == 2 && a.uniform() && a.sdi(),
               tag + ": constructed act fails re-validation");
      if (*s == *fixtures::l21()) {
        l21_seen = true;
        r.expect(fresh.size() == 3, "L21 act has " + std::to_string(fresh.size()) + " elements");
      }
      continue;
    }
    ++reversible;
    for (std::size_t m = 3; m <= 5; ++m)
      for_each_act(s, m, false, [&](const Act& act) {
        if (zeros(act).size() != 2) return;
        ++two_zero_acts;
        r.expect(!is_uniform(act).uniform, tag + ": uniform two-zero " + str(act));
      });
  }
  r.expect(l21_seen, "L21 not enumerated");
  r.detail = std::to_string(constructed) + " non-left-reversible monoids constructed, " +
             std::to_string(reversible) + " left-reversible with " +
             std::to_string(two_zero_acts) + " two-zero acts, none uniform";
  return r;
}

// --- 8 ----------------------------------------------------------------------

Result co9() {
  Result r;
  std::size_t found = 0;
  each_act(3, 2, 5, [&](const Act& a) {
    if (zeros(a).size() != 2 || !is_uniform(a).uniform) return;
    ++found;
    const std::size_t n = a.semigroup().size();
    r.expect(a.size() <= (std::size_t{1} << n), "bound fails on " + str(a));
    const PowerEmbedding e = embed_in_power_act(a);
    r.expect(e.embedding.has_value(), "no embedding for " + str(a));
    if (e.embedding)
      r.expect(e.embedding->is_injective() &&
                   is_homomorphism(a, power01(a.semigroup_ptr()), e.embedding->image),
               "bad embedding for " + str(a));
  });
  r.expect(found > 0, "no uniform two-zero acts found");
  r.detail = std::to_string(found) + " uniform two-zero acts embedded";
  return r;
}

// --- 9 ----------------------------------------------------------------------

Result ex1() {
  Result r;
  const std::pair<const char*, std::size_t> groups[] = {
      {"Z2", 2}, {"Z3", 2}, {"Z4", 3}, {"K4", 5}};
  for (const auto& [name, want] : groups) {
    const SemigroupPtr g = *fixtures::semigroup_named(name);
    const std::size_t subgroups = oracle::subgroup_count(*g);
    const auto c = group_congruence_bijection(g);
    const std::size_t congruences = all_congruences(regular_act(g)).size();
    r.expect(subgroups == want, std::string(name) + ": oracle found " + std::to_string(subgroups));
    r.expect(congruences == subgroups, std::string(name) + ": congruence count");
    r.expect(c.bijective && c.order_preserving && c.pairs.size() == subgroups,
             std::string(name) + ": correspondence");
    r.detail += std::string(r.detail.empty() ? "" : ", ") + name + ":" +
                std::to_string(congruences);
  }
  return r;
}

// --- 10 ---------------------------------------------------------------------

Result pr6() {
  Result r;
  std::size_t witnesses = 0, group_acts = 0;
  for (const auto& s : semigroups_up_to(3)) {
    if (s->profile().is_group) continue;
    const auto w = non_uniform_amalgam(s);
    const std::string tag = "semigroup " + str({s->table().begin(), s->table().end()});
    r.expect(w.has_value(), tag + ": no amalgam");
    if (!w) continue;
    ++witnesses;
    r.expect(oracle::component_count(w->act) == 1, tag + ": amalgam decomposes");
    r.expect(!oracle::is_uniform(w->act), tag + ": amalgam is uniform");
  }
  for (const auto& g : {fixtures::z2(), fixtures::z3()})
    for (std::size_t m = 2; m <= 4; ++m)
      for_each_act(g, m, false, [&](const Act& a) {
        if (oracle::component_count(a) != 1) return;
        ++group_acts;
        r.expect(is_uniform(a).uniform, "indecomposable non-uniform " + str(a));
      });
  r.detail = std::to_string(witnesses) + " non-group witnesses, " +
             std::to_string(group_acts) + " indecomposable acts over Z2, Z3 uniform";
  return r;
}

// --- 11 ---------------------------------------------------------------------

Result enumeration_counts() {
  Result r;
  const std::size_t n1 = enumerate_semigroups(1, false).size();
  const std::size_t n2 = enumerate_semigroups(2, false).size();
  const std::size_t iso2 = enumerate_semigroups(2, true).size();
  const std::size_t r2_acts = enumerate_acts(fixtures::r2(), 2, false).size();
  const auto brute = oracle::all_semigroup_tables(2);
  r.expect(n1 == 1 && oracle::all_semigroup_tables(1).size() == 1, "n=1");
  r.expect(n2 == 8 && brute.size() == 8, "n=2 labeled");
  r.expect(iso2 == 5 && oracle::iso_classes(2, brute).size() == 5, "n=2 up to iso");
  r.expect(r2_acts == 5 && oracle::all_act_tables(2, {0, 1, 0, 1}, 2).size() == 5,
           "acts over R2");
  r.detail = "1, 8, iso 5, R2 acts 5 (got " + std::to_string(n1) + ", " +
             std::to_string(n2) + ", " + std::to_string(iso2) + ", " +
             std::to_string(r2_acts) + ")";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "M3: {e,f} meets every non-zero subact but is not large", 1, m3_example},
      {2, "implication suite over S<=3, A<=4", 300, implication_suite},
      {3, "right zero semigroups: SDI acts are exactly the two shapes", 120, th2},
      {4, "regular monoids of order <=4: uniformity classification", 300, th3},
      {5, "oracle equivalences on acts <=5 over S<=3", 600, oracle_equivalences},
      {6, "endomorphism suite on acts <=4 over S<=3", 300, endomorphism_suite},
      {7, "two-zero uniform acts exist exactly without left reversibility", 300, pr7},
      {8, "uniform two-zero acts embed into {0,1}^S", 120, co9},
      {9, "group congruences correspond to subgroups", 1, ex1},
      {10, "indecomposable non-uniform amalgams for non-groups", 120, pr6},
      {11, "enumeration counts", 1, enumeration_counts},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      r.pass = false;
      r.failures.push_back("runtime " + std::to_string(seconds) + " s over the limit of " +
                           std::to_string(c.limit_seconds) + " s");
    }
    std::printf("%s %2d  %s  [%.2f s / %.0f s]  %s\n", r.pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, c.limit_seconds, r.detail.c_str());
    for (const auto& f : r.failures) std::printf("        %s\n", f.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
