#include "claimlogic/logic/solver.hpp"

#include "claimlogic/logic/builtins.hpp"
#include "claimlogic/logic/pretty.hpp"

#include <cassert>
#include <functional>
#include <pthread.h>
#include <optional>
#include <set>
#include <variant>

namespace claimlogic::logic {

std::string to_string(AmbiguityKind k) {
  switch (k) {
    case AmbiguityKind::nonground_negation: return "nonground_negation";
    case AmbiguityKind::nonground_arith: return "nonground_arith";
    case AmbiguityKind::undefined_predicate: return "undefined_predicate";
  }
  return "?";
}

SolveOutcome SolveOutcome::make_proved(std::vector<Substitution> answers) {
  SolveOutcome o;
  o.kind = Kind::proved;
  o.answers = std::move(answers);
  return o;
}

SolveOutcome SolveOutcome::make_failed() {
  return SolveOutcome{};
}

SolveOutcome SolveOutcome::make_ambiguous(AmbiguityKind k, Term offending, std::string detail) {
  SolveOutcome o;
  o.kind = Kind::ambiguous;
  o.ambiguity = k;
  o.offending_goal = std::move(offending);
  o.detail = std::move(detail);
  return o;
}

SolveOutcome SolveOutcome::make_exhausted(LimitKind limit) {
  SolveOutcome o;
  o.kind = Kind::resource_exhausted;
  o.limit = limit;
  return o;
}

namespace {

struct AmbiguityEvent {
  AmbiguityKind kind;
  Term goal;
  std::string detail;
};

using ArithValue = std::variant<Rational, AmbiguityEvent>;

ArithValue eval_arith(const Term& t, const Substitution& s) {
  Term r = s.walk(t);
  switch (r.kind()) {
    case TermKind::number:
      return r.number_value();
    case TermKind::variable:
      return AmbiguityEvent{AmbiguityKind::nonground_arith, r,
                            "unbound variable in arithmetic"};
    case TermKind::compound: {
      const std::string& f = r.name();
      if (r.args().size() == 1 && f == "-") {
        ArithValue v = eval_arith(r.args()[0], s);
        if (std::holds_alternative<AmbiguityEvent>(v)) return v;
        return -std::get<Rational>(v);
      }
      if (r.args().size() == 2 && (f == "+" || f == "-" || f == "*" || f == "/")) {
        ArithValue lv = eval_arith(r.args()[0], s);
        if (std::holds_alternative<AmbiguityEvent>(lv)) return lv;
        ArithValue rv = eval_arith(r.args()[1], s);
        if (std::holds_alternative<AmbiguityEvent>(rv)) return rv;
        const Rational& a = std::get<Rational>(lv);
        const Rational& b = std::get<Rational>(rv);
        if (f == "+") return a + b;
        if (f == "-") return a - b;
        if (f == "*") return a * b;
        if (b == Rational(0))
          return AmbiguityEvent{AmbiguityKind::nonground_arith, r, "division by zero"};
        return a / b;
      }
      return AmbiguityEvent{AmbiguityKind::nonground_arith, r,
                            "non-arithmetic term in arithmetic context"};
    }
    default:
      return AmbiguityEvent{AmbiguityKind::nonground_arith, r,
                            "non-numeric term in arithmetic context"};
  }
}

BuiltinOutcome builtin_success(Substitution s) {
  BuiltinOutcome o;
  o.kind = BuiltinOutcome::Kind::success;
  o.solutions.push_back(std::move(s));
  return o;
}

BuiltinOutcome builtin_failure() {
  return BuiltinOutcome{};
}

BuiltinOutcome builtin_ambiguous(const AmbiguityEvent& e) {
  BuiltinOutcome o;
  o.kind = BuiltinOutcome::Kind::ambiguous;
  o.ambiguity = e.kind;
  o.offending_goal = e.goal;
  o.detail = e.detail;
  return o;
}

}  // namespace

BuiltinOutcome eval_builtin(const Term& goal, const Substitution& s) {
  assert(goal.callable());
  Functor f = goal.functor();
  assert(is_builtin(f));

  if (f.arity == 0) {
    if (f.name == "true") return builtin_success(s);
    return builtin_failure();  // fail, false
  }

  const Term& lhs = goal.args()[0];
  const Term& rhs = goal.args()[1];

  if (f.name == "=") {
    auto unified = unify(lhs, rhs, s);
    if (!unified) return builtin_failure();
    return builtin_success(std::move(*unified));
  }

  if (f.name == "\\=") {
    auto unified = unify(lhs, rhs, s);
    if (!unified) return builtin_success(s);
    Term a = s.apply(lhs);
    Term b = s.apply(rhs);
    if (a == b) return builtin_failure();
    if (a.ground() && b.ground()) return builtin_failure();
    // Unifiable, not identical, not ground: truth depends on unbound values.
    return builtin_ambiguous({AmbiguityKind::nonground_negation, s.apply(goal),
                              "\\= over unbound variables"});
  }

  if (f.name == "is") {
    ArithValue v = eval_arith(rhs, s);
    if (std::holds_alternative<AmbiguityEvent>(v)) {
      auto e = std::get<AmbiguityEvent>(v);
      e.goal = s.apply(goal);
      return builtin_ambiguous(e);
    }
    auto unified = unify(lhs, Term::make_number(std::get<Rational>(v)), s);
    if (!unified) return builtin_failure();
    return builtin_success(std::move(*unified));
  }

  if (f.name == "member") {
    Term list = s.walk(rhs);
    if (list.is_variable())
      return builtin_ambiguous({AmbiguityKind::nonground_arith, s.apply(goal),
                                "second argument of member/2 is unbound"});
    if (!list.is_list()) return builtin_failure();
    BuiltinOutcome o;
    for (const Term& element : list.args()) {
      auto unified = unify(lhs, element, s);
      if (unified) o.solutions.push_back(std::move(*unified));
    }
    o.kind = o.solutions.empty() ? BuiltinOutcome::Kind::failure
                                 : BuiltinOutcome::Kind::success;
    return o;
  }

  // Arithmetic comparison: both sides must evaluate to numbers.
  ArithValue lv = eval_arith(lhs, s);
  if (std::holds_alternative<AmbiguityEvent>(lv)) {
    auto e = std::get<AmbiguityEvent>(lv);
    e.goal = s.apply(goal);
    return builtin_ambiguous(e);
  }
  ArithValue rv = eval_arith(rhs, s);
  if (std::holds_alternative<AmbiguityEvent>(rv)) {
    auto e = std::get<AmbiguityEvent>(rv);
    e.goal = s.apply(goal);
    return builtin_ambiguous(e);
  }
  const Rational& a = std::get<Rational>(lv);
  const Rational& b = std::get<Rational>(rv);
  bool holds = false;
  if (f.name == "<") holds = a < b;
  else if (f.name == ">") holds = a > b;
  else if (f.name == "=<") holds = a <= b;
  else if (f.name == ">=") holds = a >= b;
  else if (f.name == "=:=") holds = a == b;
  else assert(false && "unhandled builtin");
  return holds ? builtin_success(s) : builtin_failure();
}

namespace {

// Signal for limit overruns; aborts the whole search.
struct ExhaustedSignal {
  LimitKind which;
};

// Raised when a derivation outgrows the caller's native stack budget; the
// search is restarted from scratch on a thread with a large stack.
struct NeedsDeepStackSignal {};

// Logical depth that is safe on a default 8 MB thread stack at any
// optimization level. Corpus queries stay far below this.
constexpr int kInlineDepthCap = 256;

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.ground()) return;
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_term_vars(a, out);
}

Term rename_term(const Term& t, const std::string& suffix) {
  switch (t.kind()) {
    case TermKind::variable:
      return Term::make_variable(t.name() + suffix);
    case TermKind::compound: {
      if (t.ground()) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(rename_term(a, suffix));
      return Term::make_compound(t.name(), std::move(args));
    }
    case TermKind::list: {
      if (t.ground()) return t;
      std::vector<Term> elements;
      elements.reserve(t.args().size());
      for (const Term& e : t.args()) elements.push_back(rename_term(e, suffix));
      return Term::make_list(std::move(elements));
    }
    default:
      return t;
  }
}

Body rename_body(const Body& b, const std::string& suffix) {
  switch (b.kind()) {
    case BodyKind::truth:
      return b;
    case BodyKind::literal: {
      const Literal& l = b.literal();
      return Body::lit(Literal{l.negated, rename_term(l.goal, suffix)});
    }
    case BodyKind::conjunction:
      return Body::conj(rename_body(b.left(), suffix), rename_body(b.right(), suffix));
    case BodyKind::disjunction:
      return Body::disj(rename_body(b.left(), suffix), rename_body(b.right(), suffix));
    case BodyKind::if_then_else:
      return Body::ite(rename_body(b.cond(), suffix), rename_body(b.then_branch(), suffix),
                       rename_body(b.else_branch(), suffix));
  }
  return b;
}

class Engine {
 public:
  Engine(const Program& program, SolveLimits limits, int depth_cap)
      : program_(program), limits_(limits), depth_cap_(depth_cap) {}

  SolveOutcome run(const Body& query) {
    std::set<std::string> query_vars;
    std::vector<Literal> goals;
    query.collect_goals(goals);
    for (const Literal& l : goals) collect_term_vars(l.goal, query_vars);

    std::vector<Substitution> answers;
    try {
      solve_body(query, Substitution{}, 0, [&](const Substitution& s) {
        answers.push_back(s.projected(query_vars));
        return false;  // enumerate every answer
      });
    } catch (const ExhaustedSignal& signal) {
      return SolveOutcome::make_exhausted(signal.which);
    }
    if (!answers.empty()) return SolveOutcome::make_proved(std::move(answers));
    if (first_ambiguity_)
      return SolveOutcome::make_ambiguous(first_ambiguity_->kind, first_ambiguity_->goal,
                                          first_ambiguity_->detail);
    return SolveOutcome::make_failed();
  }

 private:
  using Cont = std::function<bool(const Substitution&)>;

  void note_ambiguity(AmbiguityKind kind, Term goal, std::string detail) {
    if (!first_ambiguity_) first_ambiguity_ = AmbiguityEvent{kind, std::move(goal), std::move(detail)};
  }

  void charge_step(int depth) {
    if (depth > limits_.max_depth) throw ExhaustedSignal{LimitKind::depth};
    if (depth > depth_cap_) throw NeedsDeepStackSignal{};
    if (++steps_ > limits_.max_steps) throw ExhaustedSignal{LimitKind::steps};
  }

  // All solve_* functions return true when the continuation asked the
  // search to stop (first-solution queries); false means "keep going".
  bool solve_body(const Body& b, const Substitution& s, int depth, const Cont& k) {
    switch (b.kind()) {
      case BodyKind::truth:
        return k(s);
      case BodyKind::literal:
        return solve_literal(b.literal(), s, depth, k);
      case BodyKind::conjunction: {
        const Body& rest = b.right();
        return solve_body(b.left(), s, depth, [&](const Substitution& s2) {
          return solve_body(rest, s2, depth, k);
        });
      }
      case BodyKind::disjunction:
        if (solve_body(b.left(), s, depth, k)) return true;
        return solve_body(b.right(), s, depth, k);
      case BodyKind::if_then_else: {
        auto saved = first_ambiguity_;
        first_ambiguity_.reset();
        std::optional<Substitution> committed;
        solve_body(b.cond(), s, depth, [&](const Substitution& cs) {
          committed = cs;
          return true;  // commit to the first solution of the condition
        });
        auto cond_event = first_ambiguity_;
        first_ambiguity_ = saved ? saved : cond_event;
        if (cond_event) return false;  // condition undecidable: branch is dead
        if (committed) return solve_body(b.then_branch(), *committed, depth, k);
        return solve_body(b.else_branch(), s, depth, k);
      }
    }
    return false;
  }

  bool solve_literal(const Literal& l, const Substitution& s, int depth, const Cont& k) {
    if (!l.negated) return solve_call(l.goal, s, depth, k);

    Term goal = s.apply(l.goal);
    if (!goal.ground()) {
      note_ambiguity(AmbiguityKind::nonground_negation, goal,
                     "negated goal is not ground at call time");
      return false;
    }
    auto saved = first_ambiguity_;
    first_ambiguity_.reset();
    bool provable = false;
    solve_call(goal, s, depth, [&](const Substitution&) {
      provable = true;
      return true;
    });
    auto inner_event = first_ambiguity_;
    first_ambiguity_ = saved;
    if (provable) return false;  // a proof exists, so the negation fails
    if (inner_event) {
      // The inner search neither proved nor finitely failed.
      if (!saved) first_ambiguity_ = inner_event;
      return false;
    }
    return k(s);  // finite failure
  }

  bool solve_call(const Term& goal, const Substitution& s, int depth, const Cont& k) {
    charge_step(depth);
    Functor f = goal.functor();

    if (is_builtin(f)) {
      BuiltinOutcome r = eval_builtin(goal, s);
      switch (r.kind) {
        case BuiltinOutcome::Kind::ambiguous:
          note_ambiguity(r.ambiguity, r.offending_goal, r.detail);
          return false;
        case BuiltinOutcome::Kind::failure:
          return false;
        case BuiltinOutcome::Kind::success:
          for (const Substitution& solution : r.solutions)
            if (k(solution)) return true;
          return false;
      }
      return false;
    }

    const std::vector<std::size_t>* positions = program_.clause_positions(f);
    if (!positions) {
      note_ambiguity(AmbiguityKind::undefined_predicate, s.apply(goal),
                     "no clauses for " + to_string(f));
      return false;
    }
    for (std::size_t position : *positions) {
      const Clause& clause = program_.clauses()[position];
      std::string suffix = "_R" + std::to_string(++rename_counter_);
      Term head = rename_term(clause.head, suffix);
      auto unified = unify(goal, head, s);
      if (!unified) continue;
      Body body = rename_body(clause.body, suffix);
      if (solve_body(body, *unified, depth + 1, k)) return true;
    }
    return false;
  }

  const Program& program_;
  SolveLimits limits_;
  int depth_cap_;
  long long steps_ = 0;
  long long rename_counter_ = 0;
  std::optional<AmbiguityEvent> first_ambiguity_;
};

struct EngineRun {
  const Program* program;
  const Body* query;
  SolveLimits limits;
  SolveOutcome outcome;
  std::exception_ptr error;
};

void* engine_thread_main(void* arg) {
  auto* run = static_cast<EngineRun*>(arg);
  try {
    run->outcome =
        Engine(*run->program, run->limits, run->limits.max_depth).run(*run->query);
  } catch (...) {
    run->error = std::current_exception();
  }
  return nullptr;
}

// Restart of the search on a thread with enough native stack for a
// derivation that reaches max_depth. Only pathologically deep programs
// (runaway recursion in generated code) take this path.
SolveOutcome solve_on_deep_stack(const Program& p, const Body& query, SolveLimits limits) {
  EngineRun run{&p, &query, limits, {}, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{512} << 20);
  pthread_t tid;
  int rc = pthread_create(&tid, &attr, engine_thread_main, &run);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::runtime_error("solver: failed to start deep-stack thread");
  pthread_join(tid, nullptr);
  if (run.error) std::rethrow_exception(run.error);
  return run.outcome;
}

}  // namespace

SolveOutcome solve(const Program& p, const Body& query, SolveLimits limits) {
  // Each call owns its private search state; concurrent solves over one
  // program need no coordination. The search runs on the caller's stack
  // until the derivation depth outgrows it, then restarts on a dedicated
  // thread with a large stack (the search has no side effects, so the
  // restart recomputes the identical outcome).
  try {
    int cap = limits.max_depth < kInlineDepthCap ? limits.max_depth : kInlineDepthCap;
    return Engine(p, limits, cap).run(query);
  } catch (const NeedsDeepStackSignal&) {
    return solve_on_deep_stack(p, query, limits);
  }
}

SolveOutcome solve(const Program& p, const Term& goal, SolveLimits limits) {
  return solve(p, Body::lit(Literal{false, goal}), limits);
}

}  // namespace claimlogic::logic
