#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "actkit/element_set.hpp"

namespace actkit {

/// Structural facts about a finite semigroup, each computed by a direct
/// quantifier scan over the multiplication table.
///
/// Right ideals are taken as aS¹ = {a} ∪ aS for left reversibility
/// (`is_left_reversible`). The variant without the adjoined identity,
/// aS ∩ bS ≠ ∅, is reported separately as `right_ideals_aS_meet`; the two
/// agree on monoids.
struct SemigroupProfile {
  ElementSet idempotents;
  ElementSet left_zeros;       ///< s·x = s for all x
  ElementSet right_zeros;      ///< x·s = s for all x
  ElementSet left_identities;  ///< s·x = x for all x
  bool is_group = false;
  bool is_right_zero_semigroup = false;
  bool is_left_zero_semigroup = false;
  bool is_regular = false;
  bool is_left_reversible = false;  ///< aS¹ ∩ bS¹ ≠ ∅ for all a, b
  bool right_ideals_aS_meet = false;  ///< aS ∩ bS ≠ ∅ for all a, b
  bool is_left_cancellative = false;
  bool is_right_simple = false;  ///< aS = S for all a
  std::optional<ElementSet> unit_group;  ///< monoids only
  std::optional<ElementSet> non_units;   ///< monoids only
};

/// A finite semigroup given by its n×n multiplication table on the
/// elements 0..n-1. Immutable; the profile is computed once on
/// construction.
///
/// The identity element is detected from the table. A declared identity
/// (from a file, say) must agree with the table.
class Semigroup {
 public:
  /// Validates ranges and associativity; throws MalformedError.
  Semigroup(std::size_t n, std::vector<Index> table,
            std::optional<Index> declared_identity = std::nullopt);

  std::size_t size() const { return n_; }
  Index operator()(Index x, Index y) const { return table_[x * n_ + y]; }
  std::span<const Index> table() const { return table_; }
  std::span<const Index> row(Index x) const {
    return std::span<const Index>(table_).subspan(x * n_, n_);
  }
  std::optional<Index> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }
  const SemigroupProfile& profile() const { return *profile_; }
  ElementSet elements() const { return ElementSet::first(n_); }

  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<Index> table_;
  std::optional<Index> identity_;
  std::shared_ptr<const SemigroupProfile> profile_;
};

using SemigroupPtr = std::shared_ptr<const Semigroup>;

/// True iff (x·y)·z == x·(y·z) for all triples. Throws MalformedError if
/// the table has the wrong length or an entry is outside [0, n).
bool check_associativity(std::size_t n, std::span<const Index> table);

/// Associativity check usable in constant expressions on fixed tables.
template <std::size_t N>
constexpr bool is_associative_table(const Index (&table)[N * N]) {
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        if (table[x * N + y] >= N) return false;
        if (table[table[x * N + y] * N + z] != table[x * N + table[y * N + z]])
          return false;
      }
  return true;
}

/// S¹: S itself when it already has an identity, otherwise S with a new
/// two-sided identity appended as element n.
Semigroup adjoin_identity(const Semigroup& s);

/// The cached profile of `s`.
const SemigroupProfile& semigroup_profile(const Semigroup& s);

/// Recomputes a profile from scratch (used by the constructor).
SemigroupProfile compute_profile(const Semigroup& s);

/// aS (with_identity = false) or aS¹ = {a} ∪ aS.
ElementSet right_ideal(const Semigroup& s, Index a, bool with_identity);

/// Smallest right ideal containing `generators`, using S¹.
ElementSet right_ideal_closure(const Semigroup& s, ElementSet generators);

/// The split S = G ⊔ I of a monoid into right-invertible elements and the
/// rest, plus the structural facts the decomposition is expected to have.
struct UnitDecomposition {
  ElementSet group;  ///< { x : x·y = 1 for some y }
  ElementSet rest;   ///< S \ group
  bool group_is_closed = false;           ///< G·G ⊆ G
  bool group_has_two_sided_inverses = false;
  bool rest_is_two_sided_ideal = false;   ///< vacuously true when I = ∅
};

/// Throws PreconditionError if `s` has no identity.
UnitDecomposition unit_group(const Semigroup& s);

/// Powers x, x², x³, ... as a set (the monogenic subsemigroup of x).
ElementSet powers(const Semigroup& s, Index x);

}  // namespace actkit
