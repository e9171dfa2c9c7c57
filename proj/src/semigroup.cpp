#include "actkit/semigroup.hpp"

#include <string>

#include "actkit/error.hpp"

namespace actkit {

namespace {

void check_table_shape(std::size_t n, std::span<const Index> table) {
  if (n == 0) throw MalformedError("semigroup must have at least one element");
  if (n > kMaxMaskedSize)
    throw MalformedError("semigroup order " + std::to_string(n) +
                         " exceeds the supported maximum of 64");
  if (table.size() != n * n)
    throw MalformedError("multiplication table has " +
                         std::to_string(table.size()) + " entries, expected " +
                         std::to_string(n * n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw MalformedError("entry " + std::to_string(table[i]) + " at row " +
                           std::to_string(i / n) + ", column " +
                           std::to_string(i % n) + " is out of range");
}

std::optional<Index> find_identity(std::size_t n,
                                   std::span<const Index> table) {
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x)
      ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

bool check_associativity(std::size_t n, std::span<const Index> table) {
  if (table.size() != n * n)
    throw MalformedError("multiplication table has " +
                         std::to_string(table.size()) + " entries, expected " +
                         std::to_string(n * n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw MalformedError("entry out of range at row " +
                           std::to_string(i / n) + ", column " +
                           std::to_string(i % n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Index xy = table[x * n + y];
      for (std::size_t z = 0; z < n; ++z)
        if (table[xy * n + z] != table[x * n + table[y * n + z]]) return false;
    }
  return true;
}

Semigroup::Semigroup(std::size_t n, std::vector<Index> table,
                     std::optional<Index> declared_identity)
    : n_(n), table_(std::move(table)) {
  check_table_shape(n_, table_);
  if (!check_associativity(n_, table_))
    throw MalformedError("multiplication table is not associative");
  identity_ = find_identity(n_, table_);
  if (declared_identity && declared_identity != identity_)
    throw MalformedError("declared identity " +
                         std::to_string(*declared_identity) +
                         " is not a two-sided identity of the table");
  profile_ = std::make_shared<const SemigroupProfile>(compute_profile(*this));
}

ElementSet right_ideal(const Semigroup& s, Index a, bool with_identity) {
  ElementSet out = ElementSet::of(s.row(a));
  if (with_identity) out.insert(a);
  return out;
}

ElementSet right_ideal_closure(const Semigroup& s, ElementSet generators) {
  ElementSet out;
  for (Index g : generators) out |= right_ideal(s, g, true);
  return out;
}

ElementSet powers(const Semigroup& s, Index x) {
  ElementSet out;
  Index p = x;
  while (!out.contains(p)) {
    out.insert(p);
    p = s(p, x);
  }
  return out;
}

SemigroupProfile compute_profile(const Semigroup& s) {
  const auto n = static_cast<Index>(s.size());
  SemigroupProfile p;
  for (Index x = 0; x < n; ++x) {
    if (s(x, x) == x) p.idempotents.insert(x);
    bool left_zero = true, right_zero = true, left_identity = true;
    for (Index y = 0; y < n; ++y) {
      left_zero = left_zero && s(x, y) == x;
      right_zero = right_zero && s(y, x) == x;
      left_identity = left_identity && s(x, y) == y;
    }
    if (left_zero) p.left_zeros.insert(x);
    if (right_zero) p.right_zeros.insert(x);
    if (left_identity) p.left_identities.insert(x);
  }
  const ElementSet all = s.elements();
  p.is_right_zero_semigroup = p.right_zeros == all;
  p.is_left_zero_semigroup = p.left_zeros == all;

  p.is_regular = true;
  for (Index a = 0; a < n && p.is_regular; ++a) {
    bool found = false;
    for (Index x = 0; x < n && !found; ++x) found = s(s(a, x), a) == a;
    p.is_regular = found;
  }

  std::vector<ElementSet> ideal(n), ideal1(n);
  for (Index a = 0; a < n; ++a) {
    ideal[a] = right_ideal(s, a, false);
    ideal1[a] = right_ideal(s, a, true);
  }
  p.is_left_reversible = true;
  p.right_ideals_aS_meet = true;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (!ideal1[a].intersects(ideal1[b])) p.is_left_reversible = false;
      if (!ideal[a].intersects(ideal[b])) p.right_ideals_aS_meet = false;
    }

  p.is_left_cancellative = true;
  for (Index a = 0; a < n && p.is_left_cancellative; ++a)
    p.is_left_cancellative = ideal[a].size() == n;  // row a is a bijection
  p.is_right_simple = true;
  for (Index a = 0; a < n && p.is_right_simple; ++a)
    p.is_right_simple = ideal[a] == all;

  if (const auto one = s.identity()) {
    ElementSet units;
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (s(x, y) == *one && s(y, x) == *one) units.insert(x);
    p.unit_group = units;
    p.non_units = all - units;
    p.is_group = units == all;
  }
  return p;
}

const SemigroupProfile& semigroup_profile(const Semigroup& s) {
  return s.profile();
}

Semigroup adjoin_identity(const Semigroup& s) {
  if (s.is_monoid()) return s;
  const std::size_t n = s.size();
  const auto one = static_cast<Index>(n);
  std::vector<Index> table((n + 1) * (n + 1));
  for (Index x = 0; x <= n; ++x)
    for (Index y = 0; y <= n; ++y) {
      Index v;
      if (x == one)
        v = y;
      else if (y == one)
        v = x;
      else
        v = s(x, y);
      table[x * (n + 1) + y] = v;
    }
  return Semigroup(n + 1, std::move(table));
}

UnitDecomposition unit_group(const Semigroup& s) {
  const auto one = s.identity();
  if (!one) throw PreconditionError("unit_group requires a monoid");
  const auto n = static_cast<Index>(s.size());
  UnitDecomposition d;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (s(x, y) == *one) {
        d.group.insert(x);
        break;
      }
  d.rest = s.elements() - d.group;

  d.group_is_closed = true;
  for (Index x : d.group)
    for (Index y : d.group)
      if (!d.group.contains(s(x, y))) d.group_is_closed = false;

  d.group_has_two_sided_inverses = true;
  for (Index x : d.group) {
    bool found = false;
    for (Index y : d.group)
      if (s(x, y) == *one && s(y, x) == *one) found = true;
    if (!found) d.group_has_two_sided_inverses = false;
  }

  d.rest_is_two_sided_ideal = true;
  for (Index i : d.rest)
    for (Index x = 0; x < n; ++x)
      if (!d.rest.contains(s(i, x)) || !d.rest.contains(s(x, i)))
        d.rest_is_two_sided_ideal = false;
  return d;
}

}  // namespace actkit
