#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/enumeration.hpp"
#include "actkit/io.hpp"

namespace actkit {

enum class VerdictKind { Verified, Falsified, Skipped };

std::string_view to_string(VerdictKind v);

struct Counterexample {
  Json semigroup;           ///< {"table": ..., "identity": ...}
  std::optional<Json> act;  ///< {"action": ...}, absent for semigroup-level checks
  Json witness;
};

struct VerificationReport {
  std::string theorem_id;
  std::string statement;
  EnumerationScope scope;
  std::size_t instances_enumerated = 0;
  /// Instances satisfying the hypothesis, i.e. where the conclusion was
  /// actually tested.
  std::size_t instances_checked = 0;
  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  ///< the first few, in order
  /// Report-only disagreements (pr8 unless strict).
  std::size_t mismatch_count = 0;
  std::vector<Counterexample> mismatches;
  VerdictKind verdict = VerdictKind::Skipped;
  std::string reason;
  bool budget_exceeded = false;
  std::optional<double> elapsed_seconds;
};

Json to_json(const EnumerationScope& scope);
Json to_json(const VerificationReport& report);

struct TheoremInfo {
  std::string id;
  std::string statement;
  EnumerationScope default_scope;
  bool act_level = true;  ///< quantifies over acts, not only semigroups
};

/// All theorem ids in a fixed order.
const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo* find_theorem(std::string_view id);

struct ScopeOverride {
  std::optional<std::size_t> max_semigroup_order;
  std::optional<std::size_t> max_act_order;
  std::optional<bool> up_to_iso;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 0;
  bool allow_order_five = false;
};

EnumerationScope effective_scope(const TheoremInfo& theorem,
                                 const ScopeOverride& override);

struct VerifyOptions {
  ScopeOverride override;
  bool strict_pr8 = false;
  bool timing = false;
  std::size_t max_counterexamples = 5;
};

/// Runs the given theorems. Act-level theorems with equal scopes share a
/// single pass over the enumerated acts. Throws PreconditionError for an
/// unknown id; budget overruns produce Skipped reports.
std::vector<VerificationReport> verify(std::span<const std::string> ids,
                                       const VerifyOptions& options = {});
VerificationReport verify(std::string_view id, const VerifyOptions& options = {});
/// One theorem over an explicit scope. Every check tests its own
/// hypotheses, so scope filters only narrow the enumeration.
VerificationReport verify(std::string_view id, const EnumerationScope& scope,
                          const VerifyOptions& options = {});

/// 1 if any report is falsified, else 3 if any ran out of budget, else 0.
int exit_code(std::span<const VerificationReport> reports);

}  // namespace actkit
