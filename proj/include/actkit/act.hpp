#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "actkit/element_set.hpp"
#include "actkit/semigroup.hpp"

namespace actkit {

class Congruence;

/// A finite right S-act: the carrier 0..m-1 with a(st) = (as)t, and
/// a·1 = a whenever S has an identity. `action` is stored row-major,
/// row a holding a·s for every s.
class Act {
 public:
  /// Validates dimensions, ranges and the act axioms; throws
  /// MalformedError.
  Act(SemigroupPtr semigroup, std::size_t m, std::vector<Index> action);

  std::size_t size() const { return m_; }
  const Semigroup& semigroup() const { return *semigroup_; }
  const SemigroupPtr& semigroup_ptr() const { return semigroup_; }
  Index operator()(Index a, Index s) const { return action_[a * n_ + s]; }
  std::span<const Index> action() const { return action_; }
  std::span<const Index> row(Index a) const {
    return std::span<const Index>(action_).subspan(a * n_, n_);
  }
  /// All elements as a set; requires size() <= 64.
  ElementSet elements() const;

  friend bool operator==(const Act& x, const Act& y) {
    return x.m_ == y.m_ && *x.semigroup_ == *y.semigroup_ &&
           x.action_ == y.action_;
  }

 private:
  SemigroupPtr semigroup_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Index> action_;
};

/// Checks both act axioms. Throws MalformedError when `action` does not
/// have m·n entries in [0, m).
bool check_act(const Semigroup& s, std::size_t m, std::span<const Index> action);

/// True when both acts are over semigroups with identical tables.
bool same_semigroup(const Act& a, const Act& b);

/// A structure-preserving map between two acts, given by its images.
struct ActHom {
  std::vector<Index> image;

  Index operator()(Index a) const { return image[a]; }
  std::size_t source_size() const { return image.size(); }
  bool is_injective() const;
  bool is_surjective(std::size_t target_size) const;
  friend bool operator==(const ActHom&, const ActHom&) = default;
  friend auto operator<=>(const ActHom&, const ActHom&) = default;
};

/// map[a·s] == map[a]·s for all a, s (and the map is in range).
bool is_homomorphism(const Act& source, const Act& target,
                     std::span<const Index> map);

// ---------------------------------------------------------------------------
// Constructions

/// S_S, the semigroup acting on itself by right multiplication.
Act regular_act(const SemigroupPtr& s);

/// S¹ viewed as a right S-act (the adjoined identity, if any, is element
/// n). Equals the regular act when S is a monoid.
Act regular_act_with_identity(const SemigroupPtr& s);

/// The act with `count` zero elements and nothing else (Θ, Θ ⊔ Θ, ...).
Act zero_act(const SemigroupPtr& s, std::size_t count = 1);

/// A ⊔ B; elements of B are shifted by |A|.
Act coproduct(const Act& a, const Act& b);

/// A × B with componentwise action; (x, y) has index x·|B| + y.
Act product(const Act& a, const Act& b);

struct Quotient {
  Act act;
  ActHom projection;
};

/// A/ρ. Classes are numbered in order of their smallest element. Throws
/// PreconditionError if ρ is not a right congruence on `a`.
Quotient quotient(const Act& a, const Congruence& rho);

/// A^θ: A itself if it has a zero, otherwise A with a zero appended.
Act adjoin_zero(const Act& a);

/// S_S with each of the given pairwise disjoint right ideals collapsed to
/// its own point. With a single ideal this is the Rees factor S/I.
Act rees_factor(const SemigroupPtr& s, std::span<const ElementSet> ideals);

/// {0,1}^S: the maps f: S → {0,1}, encoded as n-bit masks, with
/// (f·s)(t) = f(st). Guarded to |S| <= 20.
Act power01(const SemigroupPtr& s);

inline constexpr std::size_t kMaxPowerActExponent = 20;

struct Restriction {
  Act act;
  ActHom inclusion;
};

/// The subact `members` as an act in its own right, relabeled in
/// increasing order, plus the inclusion map.
Restriction restrict_to(const Act& a, ElementSet members);

struct Amalgam {
  Act act;
  ActHom from_first;
  ActHom from_second;
};

/// X1 ⊔^U X2: the coproduct of X1 and X2 modulo the congruence generated
/// by (j1(u), j2(u)). Throws PreconditionError unless j1, j2 are injective
/// homomorphisms out of U.
Amalgam amalgam(const Act& x1, const Act& x2, const Act& u, const ActHom& j1,
                const ActHom& j2);

// ---------------------------------------------------------------------------
// Subacts

/// Z(A) = { θ : θ·s = θ for all s }.
ElementSet zeros(const Act& a);

/// aS¹ = {a} ∪ aS.
ElementSet cyclic_subact(const Act& a, Index x);

/// Smallest subact containing `generators`.
ElementSet generated_subact(const Act& a, ElementSet generators);

/// Closed under the action and nonempty.
bool is_subact(const Act& a, ElementSet members);

struct Subact {
  ElementSet members;
  ElementSet generators;  ///< elements x with xS¹ = members

  std::size_t size() const { return members.size(); }
  bool is_cyclic() const { return !generators.empty(); }
  /// A one-element subact; its element is necessarily a zero.
  bool is_zero_subact() const { return members.size() == 1; }
};

inline constexpr std::size_t kDefaultSubactLimit = std::size_t{1} << 16;

/// Every subact of A, found as unions of cyclic subacts, sorted by
/// (size, mask). Throws BudgetExceeded past `limit` subacts and
/// PreconditionError for acts with more than 64 elements.
std::vector<Subact> subact_lattice(const Act& a,
                                   std::size_t limit = kDefaultSubactLimit);

/// Connected components of the graph with edges a to a·s, i.e. the classes of the
/// indecomposability relation. Labels are the smallest element of each
/// component; works for any size.
std::vector<Index> component_labels(const Act& a);

struct ActProfile {
  ElementSet zeros;
  bool is_zero_act = false;
  bool is_simple = false;
  bool is_theta_simple = false;
  bool is_cocyclic = false;
  std::optional<ElementSet> monolith;  ///< least non-zero subact
  std::vector<ElementSet> components;

  bool is_decomposable() const { return components.size() > 1; }
};

ActProfile act_profile(const Act& a);
/// Same, reusing an already computed lattice of `a`.
ActProfile act_profile(const Act& a, std::span<const Subact> lattice);

// ---------------------------------------------------------------------------
// Homomorphisms

enum class HomMode {
  All,
  Monomorphisms,
  Isomorphisms,
  FirstEmbedding,
  Endomorphisms,  ///< all maps A → A; `target` is ignored
};

inline constexpr std::uint64_t kDefaultHomNodeBudget = 50'000'000;

/// Backtracking search: an unassigned element is given a candidate image,
/// which is pushed along the action; conflicts backtrack. Results come in
/// lexicographic order of the image arrays.
std::vector<ActHom> homomorphisms(const Act& source, const Act& target,
                                  HomMode mode,
                                  std::uint64_t node_budget = kDefaultHomNodeBudget);

std::vector<ActHom> endomorphisms(const Act& a);
std::optional<ActHom> first_embedding(const Act& source, const Act& target);

}  // namespace actkit
