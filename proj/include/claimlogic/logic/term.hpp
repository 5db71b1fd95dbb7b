#pragma once

#include "claimlogic/logic/rational.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace claimlogic::logic {

enum class TermKind { atom, number, variable, compound, list };

/// Predicate indicator: functor name plus arity.
struct Functor {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const Functor&) const = default;
};

std::string to_string(const Functor& f);

/// An immutable Prolog term. Copies are cheap handle copies; the underlying
/// node graph is shared and never mutated after construction, so terms may be
/// shared freely across threads.
///
/// Invariants (enforced by the parser, assumed here):
///   - atom names match [a-z][a-zA-Z0-9_]*
///   - variable names match [A-Z_][a-zA-Z0-9_]*
///   - compounds have arity >= 1 (arity 0 is an atom)
class Term {
 public:
  Term() = default;  // empty handle; only valid as a target of assignment

  static Term make_atom(std::string name);
  static Term make_number(Rational value);
  static Term make_number(long long value) { return make_number(Rational(value)); }
  static Term make_variable(std::string name);
  static Term make_compound(std::string functor, std::vector<Term> args);
  static Term make_list(std::vector<Term> elements);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const;
  bool is_atom() const { return kind() == TermKind::atom; }
  bool is_number() const { return kind() == TermKind::number; }
  bool is_variable() const { return kind() == TermKind::variable; }
  bool is_compound() const { return kind() == TermKind::compound; }
  bool is_list() const { return kind() == TermKind::list; }

  /// Atom name, variable name, or compound functor.
  const std::string& name() const;
  const Rational& number_value() const;
  /// Compound arguments or list elements.
  const std::vector<Term>& args() const;

  /// Callable terms (atoms and compounds) have a functor; others do not.
  bool callable() const { return is_atom() || is_compound(); }
  Functor functor() const;

  /// True when no variable occurs anywhere in the term. Computed once at
  /// construction.
  bool ground() const;

  bool contains_variable(const std::string& var_name) const;

  /// Deep structural equality (variable names compared verbatim).
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace claimlogic::logic
