#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"

namespace actkit {

class ActAnalysis;

// ---------------------------------------------------------------------------
// Largeness and uniformity

struct LargenessVerdict {
  bool is_large = false;
  /// A nondiagonal ρ with ρ ∩ ρ_B = Δ, present exactly when not large.
  std::optional<Congruence> witness;
};

/// B ⊆′ A. A nondiagonal congruence meeting ρ_B trivially exists iff some
/// ρ(x, y), x ≠ y, does, so only monocyclic congruences are tested.
/// Throws PreconditionError unless B is a subact with at least two elements.
LargenessVerdict is_large(ActAnalysis& a, ElementSet b);
LargenessVerdict is_large(const Act& a, ElementSet b);

/// Same question answered over every congruence of A.
LargenessVerdict is_large_exhaustive(ActAnalysis& a, ElementSet b);

struct UniformityVerdict {
  bool uniform = false;
  std::optional<ElementSet> failing_subact;
  std::optional<Congruence> witness;
};

/// Every non-zero subact large. Checks the cyclic subacts aS¹ of non-zero
/// elements, plus Z(A) when it has exactly two elements; three or more
/// zeros fail immediately. Throws PreconditionError when |A| < 2.
UniformityVerdict is_uniform(ActAnalysis& a);
UniformityVerdict is_uniform(const Act& a);

/// Uniformity over a monoid with at most one zero, decided by: for every
/// non-zero a and x ≠ y there are s, t with as ≠ at and (as, at) ∈ ρ(x, y).
/// Throws PreconditionError outside that domain.
bool is_uniform_by_translations(ActAnalysis& a);

// ---------------------------------------------------------------------------
// Irreducibility

struct IrreducibilityReport {
  bool is_irreducible = false;
  bool is_sdi = false;
  std::optional<Congruence> least_nondiagonal;
  /// Two nondiagonal congruences meeting in Δ, when not irreducible.
  std::optional<std::pair<Congruence, Congruence>> disjoint_pair;
};

/// Throws PreconditionError when |A| < 2.
IrreducibilityReport irreducibility_report(ActAnalysis& a);
IrreducibilityReport irreducibility_report(const Act& a);

// ---------------------------------------------------------------------------
// Structure

enum class StructureKind {
  NotUniform,
  ZeroCoproductZero,            ///< Θ ⊔ Θ
  IndecomposableCoproductZero,  ///< B ⊔ Θ, B indecomposable uniform, zero-free
  Indecomposable,
  SimplePlusZero,        ///< over a group: B ⊔ Θ with B simple
  IndecomposableSimple,  ///< over a group: a simple act
  RzsCyclic,             ///< over a right zero semigroup: aS¹
  RzsSimplePlusZero,     ///< over a right zero semigroup: aS¹ ⊔ Θ
  Unmatched,             ///< uniform, but none of the expected shapes
};

std::string_view to_string(StructureKind kind);

struct StructureTag {
  StructureKind kind = StructureKind::NotUniform;
  /// The non-zero component (or the whole act when indecomposable).
  std::optional<ElementSet> main_part;
  std::optional<Index> zero;  ///< the split-off Θ, if any
};

StructureTag classify_structure(ActAnalysis& a);
StructureTag classify_structure(const Act& a);

/// Simple / θ-simple for a subact B of A, viewed as an act on its own.
bool is_simple_subact(ActAnalysis& a, ElementSet b);
bool is_theta_simple_subact(ActAnalysis& a, ElementSet b);

enum class MonoidCase {
  Group,
  GroupPlusZero,
  GroupPlusTwoLeftZeros,
  NotUniform,
  NotRegularMonoid,
};

std::string_view to_string(MonoidCase c);

struct MonoidClassification {
  MonoidCase verdict = MonoidCase::NotRegularMonoid;
  bool uniform = false;                    ///< S_S uniform
  std::optional<MonoidCase> structure;     ///< which of the three shapes fits
  bool all_cyclic_uniform = false;         ///< every S/ρ with |S/ρ| >= 2
  bool consistent = false;                 ///< the three answers agree
};

/// Throws PreconditionError if S has no identity.
MonoidClassification classify_regular_uniform_monoid(const SemigroupPtr& s);

/// The group-plus-zeros shapes a monoid may have, tested by table scans.
std::optional<MonoidCase> match_monoid_structure(const Semigroup& s);

// ---------------------------------------------------------------------------
// Endomorphisms

struct ZeroNilpotency {
  Index zero = 0;
  bool fixed = false;  ///< f(θ) = θ
  std::optional<unsigned> exponent;  ///< least m with f^m constant at θ
  bool preimage_nontrivial = false;  ///< f(a) = θ for some a ≠ θ
};

struct EndoEntry {
  ActHom map;
  bool is_mono = false;
  bool is_epi = false;
  bool is_nilpotent = false;  ///< some power has a one-element image
  std::vector<ZeroNilpotency> per_zero;
  /// Least n with ker fⁿ ∩ ρ_{Im fⁿ} = Δ; 0 if none up to |A|.
  unsigned stabilization_n = 0;
};

struct EndoReport {
  std::vector<EndoEntry> entries;
  bool uniform = false;
  bool meet_condition_holds = true;  ///< every entry has stabilization_n > 0
  bool epi_iff_iso = true;
  bool mono_iff_not_nilpotent = true;     ///< checked only when uniform
  bool preimage_iff_nilpotent = true;     ///< per fixed zero, when uniform
  bool zero_free_all_mono = true;         ///< when uniform and Z(A) = ∅
};

/// Throws PreconditionError when |A| < 2.
EndoReport endomorphism_report(ActAnalysis& a);

// ---------------------------------------------------------------------------

/// Lazily computed, cached facts about one act: zeros, subacts, profile,
/// monocyclic congruences, the congruence lattice and the main verdicts.
/// Not for sharing between threads; build one per worker.
class ActAnalysis {
 public:
  explicit ActAnalysis(Act act, bool cross_check = true);

  const Act& act() const { return act_; }
  std::size_t size() const { return act_.size(); }
  /// Whether largeness answers are re-derived from the full congruence
  /// lattice (only while |A| <= 8).
  bool cross_check() const { return cross_check_ && act_.size() <= kPartitionFilterLimit; }

  ElementSet zeros();
  const std::vector<Subact>& subacts();
  const ActProfile& profile();
  const std::vector<MonocyclicCongruence>& monocyclics();
  const CongruenceSet& congruences();
  /// Cached is_uniform / irreducibility_report / endomorphism_report;
  /// |A| >= 2 is required as for the free functions.
  const UniformityVerdict& uniformity();
  const IrreducibilityReport& irreducibility();
  const EndoReport& endomorphism_summary();
  bool uniform() { return uniformity().uniform; }
  bool sdi() { return irreducibility().is_sdi; }

 private:
  Act act_;
  bool cross_check_;
  std::optional<ElementSet> zeros_;
  std::optional<std::vector<Subact>> subacts_;
  std::optional<ActProfile> profile_;
  std::optional<std::vector<MonocyclicCongruence>> monocyclics_;
  std::optional<CongruenceSet> congruences_;
  std::optional<UniformityVerdict> uniformity_;
  std::optional<IrreducibilityReport> irreducibility_;
  std::optional<EndoReport> endos_;
};

// ---------------------------------------------------------------------------
// Constructions

struct TwoZeroConstruction {
  bool applicable = false;  ///< false when S is left reversible
  std::optional<ElementPair> generators;  ///< a, b with aS ∩ bS = ∅
  std::optional<Congruence> congruence;   ///< maximal member of Σ on S_S
  std::optional<Act> act;                 ///< S/ρ
  std::optional<ElementPair> zeros;       ///< [a], [b] in S/ρ
  bool verified = false;  ///< two zeros, |A| >= 3, uniform and SDI
};

/// Non-trivial uniform act with two zeros for a non-left-reversible
/// monoid: collapse aS and bS separately, then greedily join monocyclic
/// congruences while [a] and [b] remain distinct zeros.
/// Throws PreconditionError if S has no identity.
TwoZeroConstruction construct_two_zero_uniform(const SemigroupPtr& s);

struct PowerEmbedding {
  std::optional<ActHom> embedding;
  std::string reason;  ///< why no embedding was returned
};

struct AmalgamWitness {
  std::string construction;  ///< "S amalgamated over sS" or "S1 amalgamated over S"
  std::optional<Index> s;    ///< the s of sS, for the first kind
  Act act;
};

/// An indecomposable act that is not uniform, built as S ⊔^{sS} S for the
/// first s with sS ≠ S that works, else (S without identity) as
/// S¹ ⊔^S S¹. Empty when neither kind works, e.g. for groups.
std::optional<AmalgamWitness> non_uniform_amalgam(const SemigroupPtr& s);

/// Searches for a monomorphism A → {0,1}^S; acts larger than 2^|S| are
/// rejected up front. Throws BudgetExceeded when |S| > 20.
PowerEmbedding embed_in_power_act(const Act& a);

}  // namespace actkit
