#include "claimlogic/chubb/claim.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace claimlogic::chubb {

using nlohmann::json;

std::string_view to_atom(HospitalizationReason r) {
  switch (r) {
    case HospitalizationReason::sickness: return "sickness";
    case HospitalizationReason::accidental_injury: return "accidental_injury";
    case HospitalizationReason::other: return "other";
  }
  return "other";
}

std::string_view to_atom(CauseActivity a) {
  switch (a) {
    case CauseActivity::skydiving: return "skydiving";
    case CauseActivity::military_service: return "military_service";
    case CauseActivity::firefighter_service: return "firefighter_service";
    case CauseActivity::police_service: return "police_service";
    case CauseActivity::none_listed: return "none_listed";
  }
  return "none_listed";
}

std::optional<HospitalizationReason> reason_from_atom(std::string_view name) {
  if (name == "sickness") return HospitalizationReason::sickness;
  if (name == "accidental_injury") return HospitalizationReason::accidental_injury;
  if (name == "other") return HospitalizationReason::other;
  return std::nullopt;
}

std::optional<CauseActivity> activity_from_atom(std::string_view name) {
  if (name == "skydiving") return CauseActivity::skydiving;
  if (name == "military_service") return CauseActivity::military_service;
  if (name == "firefighter_service") return CauseActivity::firefighter_service;
  if (name == "police_service") return CauseActivity::police_service;
  if (name == "none_listed") return CauseActivity::none_listed;
  return std::nullopt;
}

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void validate(const ChubbClaim& claim) {
  if (!valid_atom_name(claim.claim_id))
    throw SchemaError("claim_id '" + claim.claim_id + "' is not a lowercase atom");
  if (claim.age_at_hospitalization < 0)
    throw SchemaError(claim.claim_id + ": age_at_hospitalization is negative");
  if (claim.hospitalization_month < Rational(0))
    throw SchemaError(claim.claim_id + ": hospitalization_month is negative");
  if (claim.wellness_proof_month && *claim.wellness_proof_month < Rational(0))
    throw SchemaError(claim.claim_id + ": wellness_proof_month is negative");
  if (claim.wellness_visit_month && *claim.wellness_visit_month < Rational(0))
    throw SchemaError(claim.claim_id + ": wellness_visit_month is negative");
}

std::optional<Rational> effective_wellness_visit_month(const ChubbClaim& claim) {
  if (claim.wellness_visit_month) return claim.wellness_visit_month;
  if (!claim.wellness_proof_month) return std::nullopt;
  const Rational six(6);
  return *claim.wellness_proof_month < six ? *claim.wellness_proof_month : six;
}

namespace {

// A JSON number is read through its shortest round-trip decimal form so the
// stored rational matches the decimal the author wrote (0.1 becomes 1/10,
// not the nearest binary double).
Rational month_from_json(const json& v, const std::string& key) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    return Rational(v.get<long long>());
  } else if (v.is_number_float()) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    if (ec != std::errc{}) throw SchemaError(key + ": unrepresentable number");
    text.assign(buf, end);
  } else {
    throw SchemaError(key + ": expected a number or decimal string");
  }
  auto r = logic::parse_decimal(text);
  if (!r) throw SchemaError(key + ": '" + text + "' is not a decimal number");
  return *r;
}

ChubbClaim claim_from_json(const json& record) {
  ChubbClaim claim;
  claim.claim_id = record.at("claim_id").get<std::string>();

  auto reason = reason_from_atom(record.at("hospitalization_reason").get<std::string>());
  if (!reason)
    throw SchemaError(claim.claim_id + ": unknown hospitalization_reason '" +
                      record.at("hospitalization_reason").get<std::string>() + "'");
  claim.hospitalization_reason = *reason;

  auto activity = activity_from_atom(record.at("cause_activity").get<std::string>());
  if (!activity)
    throw SchemaError(claim.claim_id + ": unknown cause_activity '" +
                      record.at("cause_activity").get<std::string>() + "'");
  claim.cause_activity = *activity;

  claim.age_at_hospitalization = record.at("age_at_hospitalization").get<int>();
  claim.hospitalization_month = month_from_json(record.at("hospitalization_month"),
                                                "hospitalization_month");
  if (record.contains("wellness_proof_month") && !record["wellness_proof_month"].is_null())
    claim.wellness_proof_month =
        month_from_json(record["wellness_proof_month"], "wellness_proof_month");
  if (record.contains("wellness_visit_month") && !record["wellness_visit_month"].is_null())
    claim.wellness_visit_month =
        month_from_json(record["wellness_visit_month"], "wellness_visit_month");
  claim.misrepresentation_occurred = record.value("misrepresentation_occurred", false);
  claim.fraud_occurred = record.value("fraud_occurred", false);

  validate(claim);
  return claim;
}

json month_to_json(const Rational& r) {
  if (r.denominator() == 1) return json(r.numerator());
  return json(logic::decimal_string(r));
}

}  // namespace

std::vector<ChubbClaim> parse_claims_jsonl(std::string_view text) {
  std::vector<ChubbClaim> claims;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
      claims.push_back(claim_from_json(record));
    } catch (const json::exception& e) {
      throw SchemaError("claim file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return claims;
}

std::vector<ChubbClaim> load_claims_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open claim file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_claims_jsonl(buffer.str());
}

std::string to_jsonl(const ChubbClaim& claim) {
  json record;
  record["claim_id"] = claim.claim_id;
  record["hospitalization_reason"] = std::string(to_atom(claim.hospitalization_reason));
  record["cause_activity"] = std::string(to_atom(claim.cause_activity));
  record["age_at_hospitalization"] = claim.age_at_hospitalization;
  record["hospitalization_month"] = month_to_json(claim.hospitalization_month);
  if (claim.wellness_proof_month)
    record["wellness_proof_month"] = month_to_json(*claim.wellness_proof_month);
  if (claim.wellness_visit_month)
    record["wellness_visit_month"] = month_to_json(*claim.wellness_visit_month);
  record["misrepresentation_occurred"] = claim.misrepresentation_occurred;
  record["fraud_occurred"] = claim.fraud_occurred;
  return record.dump();
}

}  // namespace claimlogic::chubb
