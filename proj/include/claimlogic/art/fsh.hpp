#pragma once

#include "claimlogic/chubb/claim.hpp"  // SchemaError
#include "claimlogic/logic/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace claimlogic::art {

using chubb::SchemaError;
using logic::Rational;

enum class Medication { medicated, unmedicated };

/// One day-3 FSH laboratory result. Months sit on the same relative axis as
/// the claim's service month.
struct FshTest {
  Rational level;       // mIU/mL
  Rational test_month;  // absolute month on the shared axis
  Medication medication = Medication::unmedicated;

  bool operator==(const FshTest&) const = default;
};

struct ArtClaim {
  std::string claim_id;
  int age_at_service = 0;
  Rational service_month{0};
  bool has_premature_ovarian_failure = false;
  std::vector<FshTest> fsh_history;         // strictly increasing test_month
  std::vector<FshTest> tests_since_age_40;  // subset of fsh_history; empty under 40
};

/// Throws SchemaError on invariant violations (unsorted history, since-40
/// tests not drawn from the history, nonempty since-40 list under age 40).
void validate(const ArtClaim& claim);

/// Helper predicates the coverage rules may call, defined over the claim
/// facts: most_recent_day_3_fsh_test/2, day_3_fsh_tests_since_age_40_in_claim/2,
/// exists_test_with_level_at_least_19/1, leq_n_months_diff/3,
/// patient_age_at_time_of_service/2, claim_date_service_received/2.
logic::Program helper_rules();
std::string_view helper_rules_text();

/// One ground fact per claim field; fsh_test(Level, Month, Medication)
/// triples inside list values.
std::vector<logic::Clause> claim_to_facts(const ArtClaim& claim);

/// The two generated encodings under study, verbatim, plus an overbroad
/// variant that grants the ovarian-failure exception to every patient aged
/// 40+ (the misapplication regression fixture).
std::string_view o1_encoding_text();        // meets_fsh_criteria/1
std::string_view gpt4o_encoding_text();     // validate_day_3_fsh/1
std::string_view overbroad_pof_encoding_text();

enum class CriteriaResult { met, not_met, unknown };

std::string to_string(CriteriaResult r);

/// Evaluates the strict encoding (age bands at 39 and 40, recency for 39+,
/// all-tests-since-40 strictness, ovarian-failure exception) through the
/// logic engine. `unknown` when the history is empty or evaluation is
/// ambiguous.
CriteriaResult meets_fsh_criteria_o1(const ArtClaim& claim);

/// Evaluates the looser encoding (single age band at 40, no recency check,
/// no ovarian-failure branch) through the logic engine.
CriteriaResult validate_day_3_fsh_4o(const ArtClaim& claim);

/// Procedural restatement of the coverage text, written independently of
/// the logic-engine path; the adjudicator for the equivalence property.
/// Precondition: fsh_history nonempty.
///   - under 39: most recent level < 19
///   - exactly 39: most recent level < 19, taken within the prior 6 months
///   - 40+ with premature ovarian failure: most recent level < 19, within
///     the prior 6 months (semantics fixed by the strict encoding; the
///     coverage text itself does not mention the exception)
///   - 40+ otherwise: every unmedicated test since age 40 has level < 19,
///     and the most recent test is within the prior 6 months
bool fsh_oracle(const ArtClaim& claim);

/// Regression fixture: a claim (age 42, no ovarian failure, a stale high
/// test plus a fresh low one) on which the overbroad encoding answers met
/// while the strict encoding answers not_met.
struct PofProbe {
  ArtClaim claim;
  CriteriaResult overbroad_result;
  CriteriaResult strict_result;
};

PofProbe pof_misapplication_probe();

/// ART claim files mirror the hospital-policy claim format, with an
/// fsh_history list of [level, month, medication] triples.
std::vector<ArtClaim> parse_art_claims_jsonl(std::string_view text);
std::vector<ArtClaim> load_art_claims_file(const std::string& path);
std::string to_jsonl(const ArtClaim& claim);

}  // namespace claimlogic::art
