#include "claimlogic/chubb/policy.hpp"

#include "claimlogic/logic/parser.hpp"
#include "claimlogic/logic/solver.hpp"

#include <array>

namespace claimlogic::chubb {

using logic::Body;
using logic::Clause;
using logic::Literal;
using logic::Program;
using logic::SolveOutcome;
using logic::Term;

namespace {

constexpr std::string_view kReferenceRules = R"PROLOG(% Hospital cash benefit policy, reference encoding.
% Claims supply ground facts of the form claim_<field>(ClaimId, Value).
% The signed-agreement and premium-paid conditions are assumed satisfied.

covered(C) :-
    in_effect(C),
    valid_reason(C),
    \+ excluded(C).

in_effect(C) :-
    within_policy_term(C),
    wellness_condition_met(C),
    not_canceled(C).

% The one-year term starts at the effective date; cancellation at midnight
% on the last day makes month 12 itself out of term.
within_policy_term(C) :-
    claim_hospitalization_month(C, M),
    M >= 0,
    M < 12.

% Written confirmation, supplied no later than the 7th month anniversary,
% of a wellness visit that occurred no later than the 6th month anniversary.
wellness_condition_met(C) :-
    claim_wellness_visit_month(C, V),
    V \= none,
    V =< 6,
    claim_wellness_proof_month(C, P),
    P \= none,
    P =< 7.

not_canceled(C) :-
    claim_misrepresentation_occurred(C, false),
    claim_fraud_occurred(C, false).

valid_reason(C) :-
    claim_hospitalization_reason(C, R),
    valid_hospitalization_reason(R).

valid_hospitalization_reason(sickness).
valid_hospitalization_reason(accidental_injury).

% Exclusions combine with OR: a listed cause activity alone, or age 80+
% alone, is enough to deny the claim.
excluded(C) :- excluded_activity(C).
excluded(C) :- excluded_age(C).

excluded_activity(C) :-
    claim_cause_activity(C, A),
    member(A, [skydiving, military_service, firefighter_service, police_service]).

excluded_age(C) :-
    claim_age_at_hospitalization(C, Age),
    Age >= 80.
)PROLOG";

constexpr std::string_view kPolicyText = R"TEXT(Between:
CODEX INSURANCE LIMITED ("us")
and
________________ ("You")

This policy is provided on the following terms and conditions:

POLICY IN EFFECT AND CONDITIONS

1.1 The payment of any benefit under this policy is conditioned on the
policy being in effect at the time of the hospitalization for sickness or
accidental injury on which the claim for such benefit is premised. The
policy will be in effect if:
  1. This agreement is signed,
  2. The applicable premium for the policy period has been paid, and
  3. The condition set out in Section 1.3 is still pending or has been
     satisfied in a timely fashion, and
  4. The policy has not been canceled.

1.2 Cancelation will be deemed to have occurred if there is fraud, or any
misrepresentation or material withholding of any information provided by
you to the Company in connection with any communication or information
relating to this policy, or if the condition set out in Section 1.3 has not
been satisfied in a timely fashion. It will also be automatically canceled
at midnight, US Eastern time then in effect, on the last day of the policy
term described in Section 5 below.

1.3 No later than the 7th month anniversary of the effective date of this
policy, you will supply us with written confirmation from the medical
provider in question of a wellness visit for yourself with a qualified
medical provider occurring no later than the 6th month anniversary of the
effective date of this policy.

GENERAL EXCLUSIONS

2.1 Your policy will not apply to, and no benefit will be paid with respect
to, any event causing sickness or accidental injury arising directly or
indirectly out of:
  1. Skydiving; or
  2. Service in the military; or
  3. Service as a fire fighter; or
  4. Service in the police; or
  5. If your age at the time of the hospitalization is equal to or greater
     than 80 years of age.

GENERAL CONDITIONS

3.1 Where does Your Policy apply?

3.1.1 Your Policy insures You twenty-four (24) hours a day anywhere in the
world.

3.2 Arbitration

3.2.1 If any dispute or disagreement arises regarding any matter pertaining
to or concerning this Policy, the dispute or disagreement must be referred
to arbitration in accordance with the provisions of the Arbitration Act
(Cap. 10) and any statutory modification or re-enactment thereof then in
force, such arbitration to be commenced within three (3) months from the
day such parties are unable to settle the dispute or difference. If You
fail to commence arbitration in accordance with this clause, it is agreed
that any cause of action and any right to make a claim that You have or may
have against Us shall be extinguished completely. Where there is a dispute
or disagreement, the issuance of a valid arbitration award shall also be a
condition precedent to our liability under this Policy. In no case shall
You seek to recover on this Policy before the expiration of sixty (60) days
after written proof of claim has been submitted to Us in accordance with
the provisions of this Policy.

3.3 Laws of New York

3.3.1 Your Policy is governed by the laws of New York.

3.4 US Currency

3.4.1 All payments by You to Us and by Us to You or someone else under your
policy must be in United States currency.

3.5 Premium

3.5.1 The premium described in Section 5 below shall be paid in one lump
sum at the signing of the policy.

3.6 Policy Term

The term of this policy will begin on the date accepted by Us as signified
by our signature of the policy (the effective date) and will last for a
period of one year from that date, unless previously canceled pursuant to
Section 1 above.
)TEXT";

Term month_term(const std::optional<Rational>& month) {
  if (month) return Term::make_number(*month);
  return Term::make_atom("none");
}

Term bool_atom(bool value) {
  return Term::make_atom(value ? "true" : "false");
}

Clause fact(std::string functor, Term id, Term value) {
  return Clause{Term::make_compound(std::move(functor), {std::move(id), std::move(value)}),
                Body::truth()};
}

const char* kDisclaimer =
    "Assuming all other conditions are met and no other exclusions apply "
    "(where by 'other', I mean anything not referenced in the query that "
    "follows), ";

}  // namespace

logic::Program reference_policy() {
  static const Program program = logic::parse_program(kReferenceRules);
  return program;
}

std::string_view reference_policy_text() {
  return kReferenceRules;
}

std::string_view policy_text() {
  return kPolicyText;
}

std::vector<Clause> claim_to_facts(const ChubbClaim& claim) {
  validate(claim);
  Term id = Term::make_atom(claim.claim_id);
  std::vector<Clause> facts;
  facts.push_back(fact("claim_hospitalization_reason", id,
                       Term::make_atom(std::string(to_atom(claim.hospitalization_reason)))));
  facts.push_back(fact("claim_cause_activity", id,
                       Term::make_atom(std::string(to_atom(claim.cause_activity)))));
  facts.push_back(fact("claim_age_at_hospitalization", id,
                       Term::make_number(claim.age_at_hospitalization)));
  facts.push_back(fact("claim_hospitalization_month", id,
                       Term::make_number(claim.hospitalization_month)));
  facts.push_back(fact("claim_wellness_proof_month", id, month_term(claim.wellness_proof_month)));
  facts.push_back(fact("claim_wellness_visit_month", id,
                       month_term(effective_wellness_visit_month(claim))));
  facts.push_back(fact("claim_misrepresentation_occurred", id,
                       bool_atom(claim.misrepresentation_occurred)));
  facts.push_back(fact("claim_fraud_occurred", id, bool_atom(claim.fraud_occurred)));
  return facts;
}

std::string to_string(const CoverageDecision& decision) {
  switch (decision.kind) {
    case CoverageDecision::Kind::covered:
      return "Covered";
    case CoverageDecision::Kind::not_covered: {
      std::string out = "NotCovered[";
      for (std::size_t i = 0; i < decision.failed_conditions.size(); ++i) {
        if (i) out += ", ";
        out += decision.failed_conditions[i];
      }
      return out + "]";
    }
    case CoverageDecision::Kind::unknown:
      return "Unknown(" + decision.reason + ")";
  }
  return "Unknown()";
}

CoverageDecision decide_coverage(const Program& policy, const ChubbClaim& claim) {
  Program combined = policy.extended_with(claim_to_facts(claim));
  Term id = Term::make_atom(claim.claim_id);
  SolveOutcome outcome = logic::solve(combined, Term::make_compound("covered", {id}));

  CoverageDecision decision;
  switch (outcome.kind) {
    case SolveOutcome::Kind::proved:
      decision.kind = CoverageDecision::Kind::covered;
      return decision;
    case SolveOutcome::Kind::ambiguous:
      decision.kind = CoverageDecision::Kind::unknown;
      decision.reason = logic::to_string(outcome.ambiguity) + ": " + outcome.detail;
      return decision;
    case SolveOutcome::Kind::resource_exhausted:
      decision.kind = CoverageDecision::Kind::unknown;
      decision.reason = outcome.limit == logic::LimitKind::depth ? "depth limit exceeded"
                                                                 : "step limit exceeded";
      return decision;
    case SolveOutcome::Kind::failed:
      break;
  }

  // Recover which conditions broke by probing each named sub-rule the
  // policy actually defines. Conditions must prove; exclusions must fail.
  decision.kind = CoverageDecision::Kind::not_covered;
  struct Probe {
    const char* id;
    const char* predicate;
    bool expect_proved;
  };
  static constexpr std::array<Probe, 6> kProbes = {{
      {"policy_term", "within_policy_term", true},
      {"wellness_condition", "wellness_condition_met", true},
      {"not_canceled", "not_canceled", true},
      {"valid_reason", "valid_reason", true},
      {"exclusion_activity", "excluded_activity", false},
      {"exclusion_age", "excluded_age", false},
  }};
  for (const Probe& probe : kProbes) {
    if (!policy.defines({probe.predicate, 1})) continue;
    SolveOutcome r = logic::solve(combined, Term::make_compound(probe.predicate, {id}));
    if (probe.expect_proved ? r.failed() : r.proved())
      decision.failed_conditions.push_back(probe.id);
  }
  if (decision.failed_conditions.empty()) decision.failed_conditions.push_back("covered");
  return decision;
}

const std::vector<GoldEntry>& gold_suite() {
  static const std::vector<GoldEntry> suite = [] {
    auto base = [](std::string id) {
      ChubbClaim c;
      c.claim_id = std::move(id);
      c.hospitalization_reason = HospitalizationReason::sickness;
      c.cause_activity = CauseActivity::none_listed;
      c.age_at_hospitalization = 45;
      c.hospitalization_month = Rational(1);
      c.wellness_proof_month = Rational(2);
      return c;
    };
    std::vector<GoldEntry> entries;

    ChubbClaim q1 = base("q1");
    q1.hospitalization_reason = HospitalizationReason::accidental_injury;
    q1.cause_activity = CauseActivity::firefighter_service;
    entries.push_back({"q1",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized by burns suffered "
                           "while doing my duty as a firefighter?",
                       q1, false});

    ChubbClaim q2 = base("q2");
    q2.age_at_hospitalization = 78;
    entries.push_back({"q2",
                       std::string(kDisclaimer) +
                           "will my policy apply if I am 78 years old at the time of "
                           "hospitalization?",
                       q2, true});

    ChubbClaim q3 = base("q3");
    q3.hospitalization_reason = HospitalizationReason::sickness;
    q3.hospitalization_month = Rational(5);
    q3.age_at_hospitalization = 65;
    entries.push_back({"q3",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized for pneumonia 5 "
                           "months after the policy's effective date, and my age at the "
                           "time of hospitalization is 65?",
                       q3, true});

    ChubbClaim q4 = base("q4");
    q4.hospitalization_reason = HospitalizationReason::accidental_injury;
    q4.wellness_proof_month = Rational(8);
    entries.push_back({"q4",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized due to a fall while "
                           "traveling abroad and I had given confirmation of my wellness "
                           "visit 8 months after the policy's effective date?",
                       q4, false});

    ChubbClaim q5 = base("q5");
    q5.hospitalization_reason = HospitalizationReason::other;  // intentional self-injury
    q5.misrepresentation_occurred = false;
    q5.fraud_occurred = false;
    entries.push_back({"q5",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized for punching my own "
                           "face to show off for my friends and I did not commit fraud or "
                           "misrepresentation?",
                       q5, false});

    ChubbClaim q6 = base("q6");
    q6.hospitalization_reason = HospitalizationReason::accidental_injury;
    q6.cause_activity = CauseActivity::skydiving;
    q6.age_at_hospitalization = 79;
    q6.wellness_proof_month = Rational(13, 2);
    entries.push_back({"q6",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized due to an injury "
                           "sustained while skydiving, my age at the time of "
                           "hospitalization was 79, and proof of my wellness visit was "
                           "provided 6.5 months after the policy's effective date?",
                       q6, false});

    ChubbClaim q7 = base("q7");
    q7.hospitalization_reason = HospitalizationReason::sickness;
    q7.wellness_proof_month = Rational(2);
    q7.age_at_hospitalization = 75;
    entries.push_back({"q7",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized for a heart attack, "
                           "proof of the wellness visit was submitted 2 months after the "
                           "policy's effective date, and my age at the time of "
                           "hospitalization was 75?",
                       q7, true});

    ChubbClaim q8 = base("q8");
    q8.hospitalization_reason = HospitalizationReason::accidental_injury;
    q8.cause_activity = CauseActivity::military_service;
    q8.fraud_occurred = false;
    entries.push_back({"q8",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized after being injured "
                           "in a military training exercise, the hospitalization occurred "
                           "within the policy term, and I did not commit fraud?",
                       q8, false});

    ChubbClaim q9 = base("q9");
    q9.hospitalization_reason = HospitalizationReason::accidental_injury;
    q9.cause_activity = CauseActivity::none_listed;  // cause is the bite, not the job
    q9.wellness_proof_month = Rational(6);
    entries.push_back({"q9",
                       std::string(kDisclaimer) +
                           "will my policy apply if I was hospitalized due to my son "
                           "biting me in the ankle, proof of my wellness visit was "
                           "provided 6 months after the effective date, and I was serving "
                           "as a police officer at the time of hospitalization?",
                       q9, true});

    return entries;
  }();
  return suite;
}

}  // namespace claimlogic::chubb
