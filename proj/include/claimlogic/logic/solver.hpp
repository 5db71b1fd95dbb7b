#pragma once

#include "claimlogic/logic/ast.hpp"
#include "claimlogic/logic/unify.hpp"

#include <string>
#include <vector>

namespace claimlogic::logic {

struct SolveLimits {
  int max_depth = 10'000;
  long long max_steps = 1'000'000;
};

/// Why a query could not be decided. Mirrors the failure modes generated
/// encodings actually exhibit: negation or arithmetic over unbound values,
/// and calls to rules that do not exist.
enum class AmbiguityKind { nonground_negation, nonground_arith, undefined_predicate };

std::string to_string(AmbiguityKind k);

enum class LimitKind { depth, steps };

/// Result of solve(). `proved` carries every answer substitution in
/// discovery order (projected onto the query's variables). `ambiguous`
/// means the truth of the query could not be established either way; it is
/// an outcome, not an error, and always names the offending goal.
struct SolveOutcome {
  enum class Kind { proved, failed, ambiguous, resource_exhausted };

  Kind kind = Kind::failed;
  std::vector<Substitution> answers;  // proved
  AmbiguityKind ambiguity = AmbiguityKind::undefined_predicate;
  Term offending_goal;                // ambiguous
  std::string detail;                 // ambiguous
  LimitKind limit = LimitKind::depth; // resource_exhausted

  bool proved() const { return kind == Kind::proved; }
  bool failed() const { return kind == Kind::failed; }
  bool is_ambiguous() const { return kind == Kind::ambiguous; }
  bool exhausted() const { return kind == Kind::resource_exhausted; }

  static SolveOutcome make_proved(std::vector<Substitution> answers);
  static SolveOutcome make_failed();
  static SolveOutcome make_ambiguous(AmbiguityKind k, Term offending, std::string detail);
  static SolveOutcome make_exhausted(LimitKind limit);
};

/// SLD resolution over `p`: clauses are tried in source order with leftmost
/// goal selection. Negation-as-failure succeeds only when the negated goal
/// is ground at call time and finitely fails; if-then-else commits to the
/// first solution of its condition; arithmetic comparisons require both
/// sides ground and numeric. Unification applies the occurs check.
///
/// Two runs over the same program and goal produce identical outcomes,
/// including answer order. The program is not mutated; concurrent solves
/// over one program need no coordination.
SolveOutcome solve(const Program& p, const Body& query, SolveLimits limits = {});
SolveOutcome solve(const Program& p, const Term& goal, SolveLimits limits = {});

/// Evaluation of a single builtin goal under a substitution, exposed for
/// direct testing. `solutions` lists each success in enumeration order
/// (member/2 yields one per matching element).
struct BuiltinOutcome {
  enum class Kind { success, failure, ambiguous };

  Kind kind = Kind::failure;
  std::vector<Substitution> solutions;
  AmbiguityKind ambiguity = AmbiguityKind::nonground_arith;
  Term offending_goal;
  std::string detail;
};

BuiltinOutcome eval_builtin(const Term& goal, const Substitution& s);

}  // namespace claimlogic::logic
