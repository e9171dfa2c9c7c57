#include <doctest.h>

#include <vector>

#include "actkit/congruence.hpp"
#include "actkit/error.hpp"
#include "actkit/fixtures.hpp"
#include "actkit/io.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace actkit;

namespace {

ElementSet set(std::initializer_list<Index> xs) { return ElementSet::of(xs); }

Congruence labels(std::vector<Index> l) { return Congruence(l); }

}  // namespace

TEST_CASE("canonical labels") {
  const Congruence c(std::vector<Index>{7, 7, 3});
  CHECK(c.labels()[0] == 0);
  CHECK(c.labels()[1] == 0);
  CHECK(c.labels()[2] == 2);
  CHECK(c == labels({0, 0, 2}));
  CHECK(c.block_count() == 2);
  CHECK(c.blocks() == std::vector<std::vector<Index>>{{0, 1}, {2}});
  CHECK(Congruence::diagonal(3).is_diagonal());
  CHECK(Congruence::full(3).is_full());
  CHECK(Congruence::full(3).contains(c));
  CHECK_FALSE(c.contains(Congruence::full(3)));
}

TEST_CASE("monocyclic congruences of fixtures") {
  const Act m3 = regular_act(fixtures::m3());
  for (Index x = 0; x < 3; ++x) CHECK(monocyclic(m3, x, x).is_diagonal());
  CHECK(monocyclic(m3, 1, 2) == labels({0, 1, 1}));
  CHECK(oracle::labels_of(oracle::chain_relation(m3, {{1, 2}}), 3) ==
        std::vector<Index>{0, 1, 1});

  const Act rees = fixtures::rees_factor_act();
  CHECK(monocyclic(rees, 0, 1).is_full());
  CHECK(oracle::labels_of(oracle::chain_relation(rees, {{0, 1}}), 3) ==
        std::vector<Index>{0, 0, 0});

  CHECK_THROWS_AS(monocyclic(m3, 0, 3), PreconditionError);
}

TEST_CASE("Rees congruences") {
  const Act m3 = regular_act(fixtures::m3());
  CHECK(rees_congruence(m3, m3.elements()).is_full());
  const Act two = fixtures::two_zero_act();
  CHECK(rees_congruence(two, set({1})).is_diagonal());
  CHECK(rees_congruence(m3, set({1, 2})) == labels({0, 1, 1}));
  CHECK_THROWS_AS(rees_congruence(m3, set({0, 1})), PreconditionError);
}

TEST_CASE("meet and join") {
  const Act m3 = regular_act(fixtures::m3());
  const Congruence rho = monocyclic(m3, 0, 1);
  CHECK(rho == labels({0, 0, 2}));
  const Congruence rees = rees_congruence(m3, set({1, 2}));
  CHECK(meet(rho, rees).is_diagonal());
  CHECK(join(m3, Congruence::diagonal(3), rho) == rho);
  CHECK(meet(Congruence::full(3), rho) == rho);
  CHECK(join(m3, rho, rees).is_full());
  CHECK(combine(m3, LatticeOp::Meet, rho, rees).is_diagonal());
  CHECK_THROWS_AS(combine(m3, LatticeOp::Join, rho, Congruence::diagonal(2)),
                  PreconditionError);
}

TEST_CASE("kernels") {
  CHECK(kernel(std::vector<Index>{4, 2, 4, 2}) == labels({0, 1, 0, 1}));
  CHECK(kernel(std::vector<Index>{0, 1, 2}).is_diagonal());
}

TEST_CASE("congruence lattices of fixtures") {
  const CongruenceSet two = all_congruences(fixtures::two_zero_act());
  CHECK(two.members == std::vector<Congruence>{labels({0, 0}), labels({0, 1})});

  const CongruenceSet m3 = all_congruences(regular_act(fixtures::m3()));
  const std::vector<Congruence> expected{
      labels({0, 0, 0}),  // full
      labels({0, 0, 2}),  // {1,e | f}
      labels({0, 1, 0}),  // {1,f | e}
      labels({0, 1, 1}),  // {e,f | 1}
      labels({0, 1, 2}),  // Δ
  };
  CHECK(m3.members == expected);

  const CongruenceSet k4 = all_congruences(regular_act(fixtures::k4()));
  CHECK(k4.size() == 5);
  CHECK(k4.size() == oracle::subgroup_count(*fixtures::k4()));

  CHECK_THROWS_AS(all_congruences(zero_act(fixtures::r2(), 13)), BudgetExceeded);
  std::vector<Index> z13(169);
  for (Index x = 0; x < 13; ++x)
    for (Index y = 0; y < 13; ++y) z13[x * 13 + y] = (x + y) % 13;
  const Act cyclic = regular_act(std::make_shared<const Semigroup>(13, z13));
  CHECK_THROWS_AS(all_congruences(cyclic), BudgetExceeded);
  CongruenceOptions wide;
  wide.max_size = 13;
  CHECK(all_congruences(cyclic, wide).size() == 2);
}

TEST_CASE("group congruence correspondence") {
  const auto trivial = std::make_shared<const Semigroup>(1, std::vector<Index>{0});
  const auto t = group_congruence_bijection(trivial);
  REQUIRE(t.pairs.size() == 1);
  CHECK(t.pairs[0].first == set({0}));
  CHECK(t.pairs[0].second.is_diagonal());

  for (const auto& [g, count] : {std::pair{fixtures::z2(), 2u}, {fixtures::z3(), 2u},
                                  {fixtures::z4(), 3u}, {fixtures::k4(), 5u}}) {
    CHECK(oracle::subgroup_count(*g) == count);
    const auto c = group_congruence_bijection(g);
    CHECK(c.pairs.size() == count);
    CHECK(c.bijective);
    CHECK(c.order_preserving);
    CHECK(subgroups(*g).size() == count);
  }
  CHECK_THROWS_AS(group_congruence_bijection(fixtures::m3()), PreconditionError);
}

TEST_CASE("closure equals the chain description") {
  corpus::for_each_small_act(2, 4, [](const Act& a) {
    const std::size_t m = a.size();
    for (Index x = 0; x < m; ++x)
      for (Index y = x; y < m; ++y) {
        const auto expected = oracle::labels_of(oracle::chain_relation(a, {{x, y}}), m);
        CHECK(monocyclic(a, x, y) == Congruence(expected));
      }
    if (m >= 3) {
      const std::vector<ElementPair> seeds{{0, 1}, {1, 2}};
      const std::vector<std::pair<Index, Index>> raw(seeds.begin(), seeds.end());
      CHECK(congruence_closure(a, seeds) ==
            Congruence(oracle::labels_of(oracle::chain_relation(a, raw), m)));
    }
  });
}

TEST_CASE("join closure equals the partition filter") {
  corpus::for_each_small_act(2, 4, [](const Act& a) {
    const auto expected = oracle::congruences(a);
    const CongruenceSet got = all_congruences(a);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got.members[i] == Congruence(expected[i]));
    CHECK(congruences_by_partition_filter(a).members == got.members);
    CongruenceOptions cross;
    cross.cross_check = true;
    CHECK(all_congruences(a, cross).members == got.members);
  });
}

TEST_CASE("meets are right congruences and nondiagonal congruences contain a monocyclic") {
  corpus::for_each_small_act(2, 4, [](const Act& a) {
    const CongruenceSet all = all_congruences(a);
    const auto monos = monocyclic_congruences(a);
    for (const auto& r : all.members) {
      CHECK(is_right_congruence(a, r));
      for (const auto& s : all.members) CHECK(is_right_congruence(a, meet(r, s)));
      if (r.is_diagonal()) continue;
      bool found = false;
      for (const auto& mc : monos) found = found || r.contains(mc.rho);
      CHECK(found);
    }
  });
}

TEST_CASE("monocyclic flags") {
  const CongruenceSet m3 = all_congruences(regular_act(fixtures::m3()));
  // The full relation and Δ are not ρ(x, y) for any x ≠ y.
  CHECK(m3.monocyclic == std::vector<bool>{false, true, true, true, false});
}

TEST_CASE("groups have as many congruences as subgroups") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& s : enumerate_semigroups(n, false)) {
      if (!s.profile().is_group) continue;
      const auto g = std::make_shared<const Semigroup>(s);
      CHECK(all_congruences(regular_act(g)).size() == oracle::subgroup_count(s));
    }
}

TEST_CASE("congruence text form") {
  const Congruence c = labels({0, 0, 2});
  CHECK(format_congruence(c) == "0 0 2");
  CHECK(parse_congruence("0 0 2") == c);
  CHECK(parse_congruence("5 5 1") == c);
  CHECK(to_json(c).dump() == R"({"blocks":[0,0,2]})");
  CHECK_THROWS_AS(parse_congruence("0 x 2"), ParseError);
}
