#include "actkit/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iterator>

namespace actkit::fixtures {

namespace {

constexpr Index kR2[] = {0, 1,
                         0, 1};
constexpr Index kL2[] = {0, 0,
                         1, 1};
constexpr Index kM3[] = {0, 1, 2,
                         1, 1, 2,
                         2, 1, 2};
constexpr Index kL21[] = {0, 1, 2,
                          1, 1, 1,
                          2, 2, 2};
constexpr Index kZ2[] = {0, 1,
                         1, 0};
constexpr Index kZ3[] = {0, 1, 2,
                         1, 2, 0,
                         2, 0, 1};
constexpr Index kZ4[] = {0, 1, 2, 3,
                         1, 2, 3, 0,
                         2, 3, 0, 1,
                         3, 0, 1, 2};
constexpr Index kK4[] = {0, 1, 2, 3,
                         1, 0, 3, 2,
                         2, 3, 0, 1,
                         3, 2, 1, 0};
constexpr Index kU3[] = {0, 1, 2,
                         1, 0, 2,
                         2, 2, 2};
constexpr Index kW4[] = {0, 1, 2, 3,
                         1, 0, 3, 2,
                         2, 2, 2, 2,
                         3, 3, 3, 3};

static_assert(is_associative_table<2>(kR2));
static_assert(is_associative_table<2>(kL2));
static_assert(is_associative_table<3>(kM3));
static_assert(is_associative_table<3>(kL21));
static_assert(is_associative_table<2>(kZ2));
static_assert(is_associative_table<3>(kZ3));
static_assert(is_associative_table<4>(kZ4));
static_assert(is_associative_table<4>(kK4));
static_assert(is_associative_table<3>(kU3));
static_assert(is_associative_table<4>(kW4));

template <std::size_t N>
SemigroupPtr make(const Index (&table)[N]) {
  std::size_t n = 1;
  while (n * n < N) ++n;
  return std::make_shared<const Semigroup>(
      n, std::vector<Index>(std::begin(table), std::end(table)));
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

SemigroupPtr r2() { return make(kR2); }
SemigroupPtr l2() { return make(kL2); }
SemigroupPtr m3() { return make(kM3); }
SemigroupPtr l21() { return make(kL21); }
SemigroupPtr z2() { return make(kZ2); }
SemigroupPtr z3() { return make(kZ3); }
SemigroupPtr z4() { return make(kZ4); }
SemigroupPtr k4() { return make(kK4); }
SemigroupPtr u3() { return make(kU3); }
SemigroupPtr w4() { return make(kW4); }

Act r2_plus_zero() {
  const SemigroupPtr s = r2();
  return coproduct(regular_act(s), zero_act(s, 1));
}

Act two_zero_act() { return zero_act(r2(), 2); }

Act rees_factor_act() {
  const std::array<ElementSet, 2> ideals{ElementSet::single(1), ElementSet::single(2)};
  return rees_factor(l21(), ideals);
}

std::optional<SemigroupPtr> semigroup_named(std::string_view name) {
  const std::string key = upper(name);
  if (key == "R2") return r2();
  if (key == "L2") return l2();
  if (key == "M3") return m3();
  if (key == "L21") return l21();
  if (key == "Z2") return z2();
  if (key == "Z3") return z3();
  if (key == "Z4") return z4();
  if (key == "K4") return k4();
  if (key == "U3") return u3();
  if (key == "W4") return w4();
  return std::nullopt;
}

std::optional<Act> act_named(std::string_view name) {
  const std::string key = upper(name);
  if (key == "R2+0") return r2_plus_zero();
  if (key == "2ZERO") return two_zero_act();
  if (key == "REES") return rees_factor_act();
  return std::nullopt;
}

std::vector<std::string> semigroup_names() {
  return {"R2", "L2", "M3", "L21", "Z2", "Z3", "Z4", "K4", "U3", "W4"};
}

std::vector<std::string> act_names() { return {"R2+0", "2ZERO", "REES"}; }

}  // namespace actkit::fixtures
