#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/element_set.hpp"

namespace actkit {

/// An equivalence relation on an act carrier, stored as per-element block
/// labels where each label is the smallest element of its block. Two
/// congruences are equal exactly when their label arrays are.
class Congruence {
 public:
  Congruence() = default;
  /// Accepts arbitrary block labels and canonicalizes them.
  explicit Congruence(std::span<const Index> labels);

  static Congruence diagonal(std::size_t m);
  static Congruence full(std::size_t m);

  std::size_t size() const { return labels_.size(); }
  std::span<const Index> labels() const { return labels_; }
  Index label(Index a) const { return labels_[a]; }
  bool related(Index a, Index b) const { return labels_[a] == labels_[b]; }
  bool is_diagonal() const;
  bool is_full() const;
  std::size_t block_count() const;
  /// Blocks in order of their smallest element.
  std::vector<std::vector<Index>> blocks() const;
  /// ρ ⊇ σ as sets of pairs.
  bool contains(const Congruence& sigma) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Index> labels_;
};

struct CongruenceHash {
  std::size_t operator()(const Congruence& c) const noexcept;
};

using ElementPair = std::pair<Index, Index>;

/// a ρ b implies (a·s) ρ (b·s) for all s.
bool is_right_congruence(const Act& a, const Congruence& rho);

/// Least right congruence containing every seed pair: union-find with a
/// work queue of pairs (a·s, b·s) scheduled whenever two blocks merge.
Congruence congruence_closure(const Act& a, std::span<const ElementPair> seeds);

/// ρ(x, y).
Congruence monocyclic(const Act& a, Index x, Index y);

/// ρ_B = (B × B) ∪ Δ. Throws PreconditionError if B is not a subact.
Congruence rees_congruence(const Act& a, ElementSet subact);

/// ker f = { (x, y) : f(x) = f(y) }.
Congruence kernel(std::span<const Index> map);

Congruence meet(const Congruence& rho, const Congruence& sigma);
/// Congruence generated by ρ ∪ σ; requires the act for the closure.
Congruence join(const Act& a, const Congruence& rho, const Congruence& sigma);

enum class LatticeOp { Meet, Join };
/// Throws PreconditionError when the two relations have different sizes.
Congruence combine(const Act& a, LatticeOp op, const Congruence& rho,
                   const Congruence& sigma);

/// ρ(x, y) for one unordered pair x < y.
struct MonocyclicCongruence {
  Index x;
  Index y;
  Congruence rho;
};

/// ρ(x, y) for all x < y, in lexicographic order of (x, y).
std::vector<MonocyclicCongruence> monocyclic_congruences(const Act& a);

/// All right congruences of an act, sorted, with a flag for those equal to
/// some ρ(x, y).
struct CongruenceSet {
  std::vector<Congruence> members;
  std::vector<bool> monocyclic;

  std::size_t size() const { return members.size(); }
  bool contains(const Congruence& c) const;
};

inline constexpr std::size_t kDefaultCongruenceGuard = 12;
inline constexpr std::size_t kPartitionFilterLimit = 8;

struct CongruenceOptions {
  std::size_t max_size = kDefaultCongruenceGuard;
  /// Also filter all set partitions and require the same answer; only
  /// honored while |A| <= kPartitionFilterLimit.
  bool cross_check = false;
};

/// Every right congruence, by closing {Δ} ∪ {ρ(x, y)} under joins.
/// Throws BudgetExceeded if |A| exceeds the guard.
CongruenceSet all_congruences(const Act& a, const CongruenceOptions& options = {});

/// Same result, by filtering every set partition for right compatibility.
CongruenceSet congruences_by_partition_filter(const Act& a);

/// H ↦ ρ_H = { (x, y) : x·y⁻¹ ∈ H } for every subgroup H of a group.
struct GroupCongruenceCorrespondence {
  std::vector<std::pair<ElementSet, Congruence>> pairs;
  bool bijective = false;         ///< onto all right congruences of G_G
  bool order_preserving = false;  ///< H ⊆ K ⟺ ρ_H ⊆ ρ_K
};

/// Subgroups of a group, generated as closures of cyclic subgroups.
std::vector<ElementSet> subgroups(const Semigroup& g);

/// Throws PreconditionError if `g` is not a group.
GroupCongruenceCorrespondence group_congruence_bijection(const SemigroupPtr& g);

}  // namespace actkit
