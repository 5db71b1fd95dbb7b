#pragma once

#include "claimlogic/logic/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace claimlogic::chubb {

using logic::Rational;

/// Why the claimant was hospitalized. The policy pays only for sickness or
/// accidental injury; anything else (e.g. an intentional self-inflicted
/// injury) is classified `other` when the claim is constructed, not inside
/// the rules.
enum class HospitalizationReason { sickness, accidental_injury, other };

/// The activity the hospitalization event arose out of. This describes
/// causation, never the claimant's occupation: a police officer bitten by
/// their son off duty has cause `none_listed`.
enum class CauseActivity {
  skydiving,
  military_service,
  firefighter_service,
  police_service,
  none_listed,
};

struct ChubbClaim {
  std::string claim_id;  // lowercase atom
  HospitalizationReason hospitalization_reason = HospitalizationReason::sickness;
  CauseActivity cause_activity = CauseActivity::none_listed;
  int age_at_hospitalization = 0;
  Rational hospitalization_month{0};              // months since effective date
  std::optional<Rational> wellness_proof_month;   // absent = never supplied
  std::optional<Rational> wellness_visit_month;   // absent = defaulted from proof
  bool misrepresentation_occurred = false;
  bool fraud_occurred = false;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view to_atom(HospitalizationReason r);
std::string_view to_atom(CauseActivity a);
std::optional<HospitalizationReason> reason_from_atom(std::string_view name);
std::optional<CauseActivity> activity_from_atom(std::string_view name);

/// Throws SchemaError when a field is outside its domain (bad claim-id
/// atom, negative months or age).
void validate(const ChubbClaim& claim);

/// When only the proof month is given, the visit month defaults to
/// min(proof month, 6) so that conditions unrelated to a query hold.
std::optional<Rational> effective_wellness_visit_month(const ChubbClaim& claim);

/// Claim files are line-delimited JSON, one claim per line, keys matching
/// the field names above. Month values may be JSON numbers or decimal
/// strings; either way they are read as exact rationals.
std::vector<ChubbClaim> parse_claims_jsonl(std::string_view text);
std::vector<ChubbClaim> load_claims_file(const std::string& path);
std::string to_jsonl(const ChubbClaim& claim);

}  // namespace claimlogic::chubb
