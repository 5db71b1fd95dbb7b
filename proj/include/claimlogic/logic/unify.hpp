#pragma once

#include "claimlogic/logic/term.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace claimlogic::logic {

/// A variable binding set. Bindings may chain (X -> Y, Y -> t); apply()
/// resolves chains fully, so applying a substitution twice equals applying
/// it once. The occurs check is enforced on every new binding: no variable
/// is ever bound to a term containing that variable.
class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  const Term* lookup(const std::string& var_name) const;

  /// Fully resolves t under this substitution: every bound variable is
  /// replaced by its (recursively resolved) binding.
  Term apply(const Term& t) const;

  /// Resolves only a top-level variable chain; compound structure is left
  /// intact. Used by unification.
  Term walk(Term t) const;

  /// Binds var_name to t. Precondition: var_name is unbound and t has been
  /// walked. Returns false (and leaves *this unchanged) when the occurs
  /// check fails.
  bool bind(const std::string& var_name, Term t);

  /// Ordered iteration, for deterministic answer rendering.
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  /// Restriction to the given variables, with every retained binding fully
  /// resolved. Variables that resolve to themselves are dropped.
  Substitution projected(const std::set<std::string>& vars) const;

 private:
  std::map<std::string, Term> bindings_;
};

/// Most general unifier of a and b extending s, or nullopt if none exists.
/// On success, applying the result to a and to b yields identical terms.
/// Occurs-check violations are failures, not errors.
std::optional<Substitution> unify(const Term& a, const Term& b, Substitution s);

}  // namespace claimlogic::logic
