#pragma once

#include "actkit/act.hpp"
#include "actkit/io.hpp"
#include "actkit/semigroup.hpp"

namespace actkit {

/// Verdict object for one act:
///   {"uniform", "sdi", "irreducible", "cocyclic", "zeros", "structure",
///    "witness": {...}, "profile": {...}}
/// Acts with fewer than two elements get "uniform": null etc.
Json analyze_act(const Act& a);

/// Profile of S, the verdict for S_S, and for monoids the regular-monoid
/// classification and the two-zero construction.
Json analyze_semigroup(const SemigroupPtr& s);

Json profile_json(const Semigroup& s);

}  // namespace actkit
