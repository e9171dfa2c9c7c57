#include <doctest.h>

#include <memory>
#include <vector>

#include "actkit/enumeration.hpp"
#include "actkit/error.hpp"
#include "actkit/fixtures.hpp"
#include "actkit/semigroup.hpp"
#include "oracles.hpp"

using namespace actkit;

namespace {

ElementSet set(std::initializer_list<Index> xs) { return ElementSet::of(xs); }

}  // namespace

TEST_CASE("associativity check on small tables") {
  CHECK(check_associativity(2, std::vector<Index>{0, 1, 0, 1}));
  // a·a = b, a·b = a, b·a = a, b·b = b is Z2 with identity b.
  const std::vector<Index> z2_relabeled{1, 0, 0, 1};
  CHECK(oracle::associative(2, z2_relabeled));
  CHECK(check_associativity(2, z2_relabeled));
  // (0·0)·0 = 1·0 = 0 but 0·(0·0) = 0·1 = 1.
  const std::vector<Index> bad{1, 1, 0, 0};
  CHECK_FALSE(oracle::associative(2, bad));
  CHECK_FALSE(check_associativity(2, bad));
  for (Index c = 0; c < 3; ++c)
    CHECK(check_associativity(3, std::vector<Index>(9, c)));
}

TEST_CASE("associativity check agrees with the triple loop on all 2x2 and 3x3 tables") {
  for (std::size_t n : {2u, 3u}) {
    std::vector<Index> t(n * n, 0);
    std::size_t agree = 0, total = 0;
    bool done = false;
    while (!done) {
      agree += check_associativity(n, t) == oracle::associative(n, t);
      ++total;
      done = true;
      for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < n) {
          done = false;
          break;
        }
        t[i] = 0;
      }
    }
    CHECK(agree == total);
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(check_associativity(2, std::vector<Index>{0, 1, 2, 0}), MalformedError);
  CHECK_THROWS_AS(check_associativity(2, std::vector<Index>{0, 1, 0}), MalformedError);
  CHECK_THROWS_AS(Semigroup(2, {1, 1, 0, 0}), MalformedError);
  CHECK_THROWS_AS(Semigroup(2, {0, 1, 1, 0}, Index{1}), MalformedError);
  CHECK_NOTHROW(Semigroup(2, {0, 1, 1, 0}, Index{0}));
}

TEST_CASE("adjoin_identity") {
  const auto z2 = fixtures::z2();
  CHECK(adjoin_identity(*z2) == *z2);

  const Semigroup r2_one = adjoin_identity(*fixtures::r2());
  CHECK(r2_one.size() == 3);
  CHECK(r2_one.identity() == Index{2});
  CHECK(canonical_form(r2_one) == canonical_form(*fixtures::m3()));

  const Semigroup l2_one = adjoin_identity(*fixtures::l2());
  CHECK(oracle::associative(3, {l2_one.table().begin(), l2_one.table().end()}));
  CHECK(canonical_form(l2_one) == canonical_form(*fixtures::l21()));

  CHECK(adjoin_identity(r2_one).size() == r2_one.size());
}

TEST_CASE("profile of R2") {
  const auto& p = fixtures::r2()->profile();
  CHECK(p.right_zeros == set({0, 1}));
  CHECK(p.left_identities == set({0, 1}));
  CHECK(p.left_zeros.empty());
  CHECK(p.is_right_zero_semigroup);
  CHECK_FALSE(p.is_left_zero_semigroup);
  CHECK_FALSE(p.unit_group.has_value());
}

TEST_CASE("profile of L21") {
  const auto& p = fixtures::l21()->profile();
  CHECK(p.left_zeros == set({1, 2}));
  CHECK(p.is_regular);
  CHECK_FALSE(p.is_left_reversible);
  CHECK(right_ideal(*fixtures::l21(), 1, true) == set({1}));
  CHECK(right_ideal(*fixtures::l21(), 2, true) == set({2}));
}

TEST_CASE("profile of Z2") {
  const auto& p = fixtures::z2()->profile();
  CHECK(p.is_group);
  CHECK(p.is_regular);
  CHECK(p.is_left_reversible);
  CHECK(p.unit_group == set({0, 1}));
  CHECK(p.non_units == ElementSet{});
}

TEST_CASE("unit group splits") {
  const UnitDecomposition u3 = unit_group(*fixtures::u3());
  CHECK(u3.group == set({0, 1}));
  CHECK(u3.rest == set({2}));
  CHECK(u3.rest_is_two_sided_ideal);

  const UnitDecomposition one = unit_group(Semigroup(1, {0}));
  CHECK(one.group == set({0}));
  CHECK(one.rest.empty());

  const UnitDecomposition m3 = unit_group(*fixtures::m3());
  CHECK(m3.group == set({0}));
  CHECK(m3.rest == set({1, 2}));

  CHECK_THROWS_AS(unit_group(*fixtures::r2()), PreconditionError);
}

TEST_CASE("unit group against a scan for xy = 1") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_semigroups(n, false)) {
      if (!s.is_monoid()) continue;
      const Index one = *s.identity();
      ElementSet expected;
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (s(x, y) == one) expected.insert(x);
      CHECK(unit_group(s).group == expected);
    }
}

TEST_CASE("profiles agree with quantifier scans on every semigroup of order at most 3") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& t : oracle::all_semigroup_tables(n)) {
      const Semigroup s(n, t);
      const auto& p = s.profile();
      bool all_regular = true;
      for (Index a = 0; a < n; ++a) {
        bool lz = true, rz = true, li = true, reg = false;
        for (Index x = 0; x < n; ++x) {
          lz = lz && t[a * n + x] == a;
          rz = rz && t[x * n + a] == a;
          li = li && t[a * n + x] == x;
          reg = reg || t[t[a * n + x] * n + a] == a;
        }
        CHECK(p.left_zeros.contains(a) == lz);
        CHECK(p.right_zeros.contains(a) == rz);
        CHECK(p.left_identities.contains(a) == li);
        CHECK(p.idempotents.contains(a) == (t[a * n + a] == a));
        all_regular = all_regular && reg;
      }
      CHECK(p.is_regular == all_regular);
      // aS¹ ∩ bS¹ ≠ ∅ for every pair.
      bool reversible = true;
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          bool meet = false;
          for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
              const Index ax = t[a * n + x], by = t[b * n + y];
              meet = meet || ax == by || ax == b || by == a || a == b;
            }
          reversible = reversible && meet;
        }
      CHECK(p.is_left_reversible == reversible);
    }
}

TEST_CASE("groups are exactly the right simple left cancellative monoids (order <= 4)") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, false)) {
      const auto& p = s.profile();
      CHECK(p.is_group == (p.is_right_simple && p.is_left_cancellative && s.is_monoid()));
      if (p.is_group) {
        CHECK(p.unit_group == s.elements());
        CHECK(p.non_units == ElementSet{});
      }
      CHECK(p.left_identities.is_subset_of(p.idempotents));
      CHECK(p.left_zeros.is_subset_of(p.idempotents));
    }
}

TEST_CASE("the decomposition is a group and an ideal on uniform fixtures") {
  for (const auto& s : {fixtures::z2(), fixtures::u3(), fixtures::w4(), fixtures::l21()}) {
    const UnitDecomposition d = unit_group(*s);
    CHECK(d.group_is_closed);
    CHECK(d.group_has_two_sided_inverses);
    CHECK(d.rest_is_two_sided_ideal);
  }
}

TEST_CASE("powers and right ideals") {
  CHECK(powers(*fixtures::z4(), 1) == set({0, 1, 2, 3}));
  CHECK(powers(*fixtures::z4(), 2) == set({0, 2}));
  CHECK(right_ideal(*fixtures::m3(), 1, false) == set({1, 2}));
  CHECK(right_ideal(*fixtures::r2(), 0, false) == set({0, 1}));
  CHECK(right_ideal_closure(*fixtures::m3(), set({1})) == set({1, 2}));
}
