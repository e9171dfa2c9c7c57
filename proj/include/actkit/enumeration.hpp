#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/semigroup.hpp"

namespace actkit {

enum class SemigroupFilter {
  RightZero,
  LeftZero,
  Regular,
  Group,
  Monoid,
  RegularMonoid,
  LeftReversible,
  NonLeftReversible,
  NonGroup,
};

std::optional<SemigroupFilter> parse_filter(std::string_view name);
std::string_view to_string(SemigroupFilter filter);
bool matches(const Semigroup& s, SemigroupFilter filter);

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

/// Node budget from ACTKIT_BUDGET when set, else kDefaultNodeBudget.
std::uint64_t default_node_budget();

struct EnumerationScope {
  std::size_t min_semigroup_order = 1;
  std::size_t max_semigroup_order = 3;
  std::size_t min_act_order = 1;
  std::size_t max_act_order = 4;
  bool up_to_iso = false;
  bool monoids_only = false;
  std::optional<SemigroupFilter> filter;
  std::uint64_t budget = default_node_budget();
  unsigned jobs = 0;  ///< 0 = hardware concurrency
  bool allow_order_five = false;
};

/// Throws PreconditionError on empty ranges and BudgetExceeded for
/// semigroup orders above 4 (5 with allow_order_five).
void validate_scope(const EnumerationScope& scope);

/// All semigroups of one order (labeled, or one per isomorphism class),
/// by a depth-first fill of the table with associativity pruning. The
/// search is split into independent shards by the first table row; the
/// output order is lexicographic in the table either way.
std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool up_to_iso,
                                            std::uint64_t budget = default_node_budget(),
                                            unsigned jobs = 0);

/// Every semigroup in the scope's order range that passes its filters.
std::vector<SemigroupPtr> enumerate_semigroups(const EnumerationScope& scope);

/// Calls `visit` for each act of order m over S, in lexicographic order of
/// the action table (filled column by column, identity column forced for
/// monoids, compatibility checked as soon as an instance is complete).
void for_each_act(const SemigroupPtr& s, std::size_t m, bool up_to_iso,
                  const std::function<void(const Act&)>& visit,
                  std::uint64_t budget = default_node_budget());

std::vector<Act> enumerate_acts(const SemigroupPtr& s, std::size_t m,
                                bool up_to_iso,
                                std::uint64_t budget = default_node_budget());

inline constexpr std::size_t kMaxCanonicalOrder = 7;

/// Lexicographically least table over all relabelings, prefixed with the
/// order. Equal bytes ⟺ isomorphic.
std::vector<std::uint8_t> canonical_form(const Semigroup& s);

/// Least action table over relabelings of the act elements (semigroup
/// fixed), prefixed with m, n and the semigroup table.
std::vector<std::uint8_t> canonical_form(const Act& a);

/// Number of labeled tables isomorphic to `s` (n! / |Aut S|).
std::size_t orbit_size(const Semigroup& s);

}  // namespace actkit
