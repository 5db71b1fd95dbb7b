#pragma once

#include "claimlogic/chubb/claim.hpp"
#include "claimlogic/logic/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace claimlogic::chubb {

/// The hand-written reference rule base for the hospital cash benefit
/// policy. Top rule: covered(C) holds iff the policy is in effect, the
/// hospitalization reason is sickness or accidental injury, and no
/// exclusion applies. Exclusions are a disjunction: a listed cause activity
/// OR age at hospitalization >= 80.
logic::Program reference_policy();

/// Source text of the reference rule base (what reference_policy() parses).
std::string_view reference_policy_text();

/// Natural-language text of the simplified policy, used as prompt input.
std::string_view policy_text();

/// One ground fact per claim field, functor pattern claim_<field>(Id, V).
/// Absent optional months emit the atom `none`. The wellness visit month is
/// the effective (defaulted) one.
std::vector<logic::Clause> claim_to_facts(const ChubbClaim& claim);

struct CoverageDecision {
  enum class Kind { covered, not_covered, unknown };

  Kind kind = Kind::unknown;
  /// not_covered: the policy conditions whose individual probes fail (or
  /// exclusions whose probes fire). Never empty for not_covered.
  std::vector<std::string> failed_conditions;
  /// unknown: the engine's reason (ambiguity or resource exhaustion).
  std::string reason;

  bool covered() const { return kind == Kind::covered; }
};

std::string to_string(const CoverageDecision& decision);

/// Runs covered(<claim id>) over `policy` plus the claim's facts.
/// Proved -> covered; Failed -> not_covered with the failed conditions
/// recovered by probing each named sub-rule the policy defines;
/// Ambiguous / ResourceExhausted -> unknown.
CoverageDecision decide_coverage(const logic::Program& policy, const ChubbClaim& claim);

/// One gold benchmark entry: the natural-language coverage question, the
/// equivalent structured claim, and the adjudicated answer.
struct GoldEntry {
  std::string query_id;
  std::string question;
  ChubbClaim claim;
  bool gold_covered;
};

/// The nine benchmark queries with gold answers
/// (no, yes, yes, no, no, no, yes, no, yes). Every field a query leaves
/// unstated is set to a satisfying default.
const std::vector<GoldEntry>& gold_suite();

}  // namespace claimlogic::chubb
