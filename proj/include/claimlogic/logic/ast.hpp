#pragma once

#include "claimlogic/logic/term.hpp"

#include <map>
#include <memory>
#include <set>
#include <vector>

namespace claimlogic::logic {

/// One body goal: a positive or negated call. The goal term is always an
/// atom or a compound. Negation never nests (rejected at parse time).
struct Literal {
  bool negated = false;
  Term goal;

  bool operator==(const Literal&) const = default;
};

enum class BodyKind { truth, literal, conjunction, disjunction, if_then_else };

/// Clause body: a tree of conjunctions, disjunctions, if-then-else nodes and
/// literals. `truth` is the empty conjunction (the body of a fact).
class Body {
 public:
  Body() : Body(truth()) {}

  static Body truth();
  static Body lit(Literal literal);
  static Body conj(Body left, Body right);
  static Body disj(Body left, Body right);
  static Body ite(Body cond, Body then_branch, Body else_branch);

  BodyKind kind() const;
  const Literal& literal() const;             // literal
  const Body& left() const;                   // conjunction/disjunction
  const Body& right() const;                  // conjunction/disjunction
  const Body& cond() const;                   // if_then_else
  const Body& then_branch() const;            // if_then_else
  const Body& else_branch() const;            // if_then_else

  bool operator==(const Body& other) const;

  /// Every goal term in the tree, left to right.
  void collect_goals(std::vector<Literal>& out) const;

 private:
  struct Node;
  explicit Body(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Clause {
  Term head;
  Body body;

  bool is_fact() const { return body.kind() == BodyKind::truth; }
  bool operator==(const Clause&) const = default;
};

/// An ordered rule base. Clause order is preserved exactly as parsed;
/// resolution tries clauses in source order. Immutable after construction.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }

  /// Positions of the clauses whose head matches, in source order.
  const std::vector<std::size_t>* clause_positions(const Functor& f) const;
  bool defines(const Functor& f) const { return clause_positions(f) != nullptr; }

  std::set<Functor> defined_predicates() const;
  /// Functors of every goal position in every clause body.
  std::set<Functor> referenced_predicates() const;

  /// New program with `other`'s clauses appended after this program's.
  Program extended_with(const Program& other) const;
  Program extended_with(const std::vector<Clause>& more) const;

  bool operator==(const Program& other) const { return clauses_ == other.clauses_; }

 private:
  std::vector<Clause> clauses_;
  std::map<Functor, std::vector<std::size_t>> index_;
};

}  // namespace claimlogic::logic
