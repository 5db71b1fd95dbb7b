#include "claimlogic/art/fsh.hpp"

#include "claimlogic/logic/parser.hpp"
#include "claimlogic/logic/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace claimlogic::art {

using logic::Body;
using logic::Clause;
using logic::Program;
using logic::SolveOutcome;
using logic::Term;
using nlohmann::json;

namespace {

constexpr std::string_view kHelperRules = R"PROLOG(% Supporting predicates available to coverage rules, defined over the
% ground claim facts claim_patient_age/2, claim_service_month/2,
% claim_patient_has_premature_ovarian_failure/2, claim_fsh_history/2 and
% claim_tests_since_age_40/2.

patient_age_at_time_of_service(C, Age) :-
    claim_patient_age(C, Age).

claim_date_service_received(C, Date) :-
    claim_service_month(C, Date).

day_3_fsh_tests_since_age_40_in_claim(C, Tests) :-
    claim_tests_since_age_40(C, Tests).

most_recent_day_3_fsh_test(C, Test) :-
    claim_fsh_history(C, Tests),
    latest_fsh_test(Tests, Test).

latest_fsh_test(Tests, Test) :-
    member(Test, Tests),
    \+ fsh_test_after(Tests, Test).

fsh_test_after(Tests, fsh_test(_, Month, _)) :-
    member(fsh_test(_, Later, _), Tests),
    Later > Month.

exists_test_with_level_at_least_19(Tests) :-
    member(fsh_test(Level, _, _), Tests),
    Level >= 19.

leq_n_months_diff(M1, M2, N) :-
    ( M1 =< M2 -> Diff is M2 - M1 ; Diff is M1 - M2 ),
    Diff =< N.
)PROLOG";

constexpr std::string_view kO1Encoding = R"PROLOG(meets_fsh_criteria(C) :-
    patient_age_at_time_of_service(C, Age),
    (
        ( Age < 39 ) ->
            most_recent_day_3_fsh_test(C, fsh_test(Level, _, _)),
            Level < 19
        ;
        ( Age = 39 ) ->
            claim_date_service_received(C, ServiceDate),
            most_recent_day_3_fsh_test(C, fsh_test(Level, TestDate, _)),
            leq_n_months_diff(TestDate, ServiceDate, 6),
            Level < 19
        ;
        ( Age >= 40 ) ->
            claim_date_service_received(C, ServiceDate),
            (
                claim_patient_has_premature_ovarian_failure(C, yes) ->
                    most_recent_day_3_fsh_test(C, fsh_test(Level, TestDate, _)),
                    leq_n_months_diff(TestDate, ServiceDate, 6),
                    Level < 19
                ;
                    day_3_fsh_tests_since_age_40_in_claim(C, Tests),
                    \+ exists_test_with_level_at_least_19(Tests),
                    most_recent_day_3_fsh_test(C, fsh_test(_, TestDate, _)),
                    leq_n_months_diff(TestDate, ServiceDate, 6)
            )
    ).
)PROLOG";

constexpr std::string_view kGpt4oEncoding = R"PROLOG(validate_day_3_fsh(C) :-
    patient_age_at_time_of_service(C, Age),
    (Age < 40 ->
        most_recent_day_3_fsh_test(C, fsh_test(FSHLevel, _, _)),
        FSHLevel < 19
    ; Age >= 40 ->
        day_3_fsh_tests_since_age_40_in_claim(C, FSHTests),
        \+ exists_test_with_level_at_least_19(FSHTests)).
)PROLOG";

// Like the strict rule, except the 40+ branch always takes the
// ovarian-failure path: only the most recent test is inspected, so a stale
// high test since age 40 no longer disqualifies the patient.
constexpr std::string_view kOverbroadPofEncoding = R"PROLOG(meets_fsh_criteria_overbroad(C) :-
    patient_age_at_time_of_service(C, Age),
    (
        ( Age < 39 ) ->
            most_recent_day_3_fsh_test(C, fsh_test(Level, _, _)),
            Level < 19
        ;
        ( Age = 39 ) ->
            claim_date_service_received(C, ServiceDate),
            most_recent_day_3_fsh_test(C, fsh_test(Level, TestDate, _)),
            leq_n_months_diff(TestDate, ServiceDate, 6),
            Level < 19
        ;
        ( Age >= 40 ) ->
            claim_date_service_received(C, ServiceDate),
            most_recent_day_3_fsh_test(C, fsh_test(Level, TestDate, _)),
            leq_n_months_diff(TestDate, ServiceDate, 6),
            Level < 19
    ).
)PROLOG";

Term medication_atom(Medication m) {
  return Term::make_atom(m == Medication::medicated ? "medicated" : "unmedicated");
}

Term fsh_test_term(const FshTest& t) {
  return Term::make_compound(
      "fsh_test", {Term::make_number(t.level), Term::make_number(t.test_month),
                   medication_atom(t.medication)});
}

Term fsh_list_term(const std::vector<FshTest>& tests) {
  std::vector<Term> elements;
  elements.reserve(tests.size());
  for (const FshTest& t : tests) elements.push_back(fsh_test_term(t));
  return Term::make_list(std::move(elements));
}

Clause fact(std::string functor, Term id, Term value) {
  return Clause{Term::make_compound(std::move(functor), {std::move(id), std::move(value)}),
                Body::truth()};
}

const FshTest& most_recent(const std::vector<FshTest>& history) {
  return history.back();  // history is sorted by month ascending
}

CriteriaResult evaluate_rule(const ArtClaim& claim, const Program& rule_with_helpers,
                             const std::string& rule_name) {
  if (claim.fsh_history.empty()) return CriteriaResult::unknown;
  validate(claim);
  Program program = rule_with_helpers.extended_with(claim_to_facts(claim));
  Term goal = Term::make_compound(rule_name, {Term::make_atom(claim.claim_id)});
  SolveOutcome outcome = logic::solve(program, goal);
  if (outcome.proved()) return CriteriaResult::met;
  if (outcome.failed()) return CriteriaResult::not_met;
  return CriteriaResult::unknown;
}

const Program& rule_program(std::string_view rule_text) {
  static const Program helpers = logic::parse_program(kHelperRules);
  static const Program o1 = logic::parse_program(kO1Encoding).extended_with(helpers);
  static const Program gpt4o = logic::parse_program(kGpt4oEncoding).extended_with(helpers);
  static const Program overbroad =
      logic::parse_program(kOverbroadPofEncoding).extended_with(helpers);
  if (rule_text.data() == kO1Encoding.data()) return o1;
  if (rule_text.data() == kGpt4oEncoding.data()) return gpt4o;
  return overbroad;
}

}  // namespace

void validate(const ArtClaim& claim) {
  if (claim.age_at_service < 0)
    throw SchemaError(claim.claim_id + ": age_at_service is negative");
  for (const FshTest& t : claim.fsh_history)
    if (t.level < Rational(0))
      throw SchemaError(claim.claim_id + ": FSH level is negative");
  for (std::size_t i = 1; i < claim.fsh_history.size(); ++i)
    if (!(claim.fsh_history[i - 1].test_month < claim.fsh_history[i].test_month))
      throw SchemaError(claim.claim_id + ": fsh_history months not strictly increasing");
  for (const FshTest& t : claim.tests_since_age_40)
    if (std::find(claim.fsh_history.begin(), claim.fsh_history.end(), t) ==
        claim.fsh_history.end())
      throw SchemaError(claim.claim_id + ": tests_since_age_40 not drawn from fsh_history");
  if (claim.age_at_service < 40 && !claim.tests_since_age_40.empty())
    throw SchemaError(claim.claim_id + ": tests_since_age_40 nonempty under age 40");
}

logic::Program helper_rules() {
  static const Program program = logic::parse_program(kHelperRules);
  return program;
}

std::string_view helper_rules_text() { return kHelperRules; }
std::string_view o1_encoding_text() { return kO1Encoding; }
std::string_view gpt4o_encoding_text() { return kGpt4oEncoding; }
std::string_view overbroad_pof_encoding_text() { return kOverbroadPofEncoding; }

std::vector<Clause> claim_to_facts(const ArtClaim& claim) {
  Term id = Term::make_atom(claim.claim_id);
  std::vector<Clause> facts;
  facts.push_back(fact("claim_patient_age", id, Term::make_number(claim.age_at_service)));
  facts.push_back(fact("claim_service_month", id, Term::make_number(claim.service_month)));
  facts.push_back(fact("claim_patient_has_premature_ovarian_failure", id,
                       Term::make_atom(claim.has_premature_ovarian_failure ? "yes" : "no")));
  facts.push_back(fact("claim_fsh_history", id, fsh_list_term(claim.fsh_history)));
  facts.push_back(fact("claim_tests_since_age_40", id, fsh_list_term(claim.tests_since_age_40)));
  return facts;
}

std::string to_string(CriteriaResult r) {
  switch (r) {
    case CriteriaResult::met: return "met";
    case CriteriaResult::not_met: return "not_met";
    case CriteriaResult::unknown: return "unknown";
  }
  return "unknown";
}

CriteriaResult meets_fsh_criteria_o1(const ArtClaim& claim) {
  return evaluate_rule(claim, rule_program(kO1Encoding), "meets_fsh_criteria");
}

CriteriaResult validate_day_3_fsh_4o(const ArtClaim& claim) {
  return evaluate_rule(claim, rule_program(kGpt4oEncoding), "validate_day_3_fsh");
}

bool fsh_oracle(const ArtClaim& claim) {
  validate(claim);
  const FshTest& recent = most_recent(claim.fsh_history);
  Rational gap = claim.service_month - recent.test_month;
  if (gap < Rational(0)) gap = -gap;
  bool recent_within_6_months = gap <= Rational(6);
  bool recent_below_19 = recent.level < Rational(19);

  if (claim.age_at_service < 39) return recent_below_19;
  if (claim.age_at_service == 39) return recent_below_19 && recent_within_6_months;

  if (claim.has_premature_ovarian_failure)
    return recent_below_19 && recent_within_6_months;

  for (const FshTest& t : claim.tests_since_age_40) {
    if (t.medication != Medication::unmedicated) continue;
    if (t.level >= Rational(19)) return false;
  }
  return recent_within_6_months;
}

PofProbe pof_misapplication_probe() {
  ArtClaim claim;
  claim.claim_id = "pof_probe";
  claim.age_at_service = 42;
  claim.service_month = 30;
  claim.has_premature_ovarian_failure = false;
  // A stale high test since age 40 plus a fresh low one: the strict rule
  // rejects on the high test, the overbroad rule looks only at the fresh one.
  claim.fsh_history = {{Rational(25), Rational(20), Medication::unmedicated},
                       {Rational(18), Rational(28), Medication::unmedicated}};
  claim.tests_since_age_40 = claim.fsh_history;

  PofProbe probe;
  probe.claim = claim;
  probe.overbroad_result = evaluate_rule(claim, rule_program(kOverbroadPofEncoding),
                                         "meets_fsh_criteria_overbroad");
  probe.strict_result = meets_fsh_criteria_o1(claim);
  return probe;
}

namespace {

Rational rational_from_json(const json& v, const std::string& key) {
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

std::vector<FshTest> tests_from_json(const json& list, const std::string& key) {
  std::vector<FshTest> tests;
  for (const json& item : list) {
    if (!item.is_array() || item.size() != 3)
      throw SchemaError(key + ": each test is a [level, month, medication] triple");
    FshTest t;
    t.level = rational_from_json(item[0], key + ".level");
    t.test_month = rational_from_json(item[1], key + ".month");
    std::string med = item[2].get<std::string>();
    if (med == "medicated") t.medication = Medication::medicated;
    else if (med == "unmedicated") t.medication = Medication::unmedicated;
    else throw SchemaError(key + ": unknown medication '" + med + "'");
    tests.push_back(t);
  }
  return tests;
}

json tests_to_json(const std::vector<FshTest>& tests) {
  json list = json::array();
  for (const FshTest& t : tests) {
    json triple = json::array();
    triple.push_back(t.level.denominator() == 1 ? json(t.level.numerator())
                                                : json(logic::decimal_string(t.level)));
    triple.push_back(t.test_month.denominator() == 1
                         ? json(t.test_month.numerator())
                         : json(logic::decimal_string(t.test_month)));
    triple.push_back(t.medication == Medication::medicated ? "medicated" : "unmedicated");
    list.push_back(triple);
  }
  return list;
}

}  // namespace

std::vector<ArtClaim> parse_art_claims_jsonl(std::string_view text) {
  std::vector<ArtClaim> claims;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json record = json::parse(line);
      ArtClaim claim;
      claim.claim_id = record.at("claim_id").get<std::string>();
      claim.age_at_service = record.at("age_at_service").get<int>();
      claim.service_month = rational_from_json(record.at("service_month"), "service_month");
      std::string pof = record.at("has_premature_ovarian_failure").get<std::string>();
      if (pof != "yes" && pof != "no")
        throw SchemaError("has_premature_ovarian_failure must be yes or no");
      claim.has_premature_ovarian_failure = pof == "yes";
      claim.fsh_history = tests_from_json(record.at("fsh_history"), "fsh_history");
      if (record.contains("tests_since_age_40"))
        claim.tests_since_age_40 =
            tests_from_json(record["tests_since_age_40"], "tests_since_age_40");
      validate(claim);
      claims.push_back(std::move(claim));
    } catch (const json::exception& e) {
      throw SchemaError("ART claim file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return claims;
}

std::vector<ArtClaim> load_art_claims_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open ART claim file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_art_claims_jsonl(buffer.str());
}

std::string to_jsonl(const ArtClaim& claim) {
  json record;
  record["claim_id"] = claim.claim_id;
  record["age_at_service"] = claim.age_at_service;
  record["service_month"] = claim.service_month.denominator() == 1
                                ? json(claim.service_month.numerator())
                                : json(logic::decimal_string(claim.service_month));
  record["has_premature_ovarian_failure"] = claim.has_premature_ovarian_failure ? "yes" : "no";
  record["fsh_history"] = tests_to_json(claim.fsh_history);
  record["tests_since_age_40"] = tests_to_json(claim.tests_since_age_40);
  return record.dump();
}

}  // namespace claimlogic::art
