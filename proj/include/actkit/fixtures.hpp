#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/semigroup.hpp"

/// Small named semigroups and acts used throughout the tests and the CLI.
///
///   R2   right zero semigroup {e, f}, xy = y
///   L2   left zero semigroup, xy = x
///   M3   {1, e, f} with e, f right zeros
///   L21  {1, a, b} with a, b left zeros
///   Z2, Z3, Z4, K4   cyclic groups and the Klein four-group
///   U3   {1, g, θ}: Z2 with a two-sided zero adjoined
///   W4   {1, g, θ1, θ2}: θi left zeros, gθ1 = θ2, gθ2 = θ1
namespace actkit::fixtures {

SemigroupPtr r2();
SemigroupPtr l2();
SemigroupPtr m3();
SemigroupPtr l21();
SemigroupPtr z2();
SemigroupPtr z3();
SemigroupPtr z4();
SemigroupPtr k4();
SemigroupPtr u3();
SemigroupPtr w4();

/// R2 ⊔ Θ over R2.
Act r2_plus_zero();
/// {θ1, θ2} over R2.
Act two_zero_act();
/// L21 with {a} and {b} collapsed separately: {[1], [a], [b]}.
Act rees_factor_act();

/// Lookup by the names above (case-insensitive); also "R2+0", "2ZERO"
/// and "REES" for the acts.
std::optional<SemigroupPtr> semigroup_named(std::string_view name);
std::optional<Act> act_named(std::string_view name);
std::vector<std::string> semigroup_names();
std::vector<std::string> act_names();

}  // namespace actkit::fixtures
