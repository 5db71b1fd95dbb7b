#include "claimlogic/logic/unify.hpp"

#include <cassert>

namespace claimlogic::logic {

const Term* Substitution::lookup(const std::string& var_name) const {
  auto it = bindings_.find(var_name);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::walk(Term t) const {
  while (t.is_variable()) {
    const Term* bound = lookup(t.name());
    if (!bound) return t;
    t = *bound;
  }
  return t;
}

Term Substitution::apply(const Term& t) const {
  if (t.ground()) return t;
  switch (t.kind()) {
    case TermKind::variable: {
      const Term* bound = lookup(t.name());
      return bound ? apply(*bound) : t;
    }
    case TermKind::compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply(a));
      return Term::make_compound(t.name(), std::move(args));
    }
    case TermKind::list: {
      std::vector<Term> elements;
      elements.reserve(t.args().size());
      for (const Term& e : t.args()) elements.push_back(apply(e));
      return Term::make_list(std::move(elements));
    }
    default:
      return t;
  }
}

bool Substitution::bind(const std::string& var_name, Term t) {
  Term resolved = apply(t);
  if (resolved.is_variable() && resolved.name() == var_name) return true;  // X = X
  if (resolved.contains_variable(var_name)) return false;                 // occurs check
  bindings_.emplace(var_name, std::move(resolved));
  return true;
}

Substitution Substitution::projected(const std::set<std::string>& vars) const {
  Substitution out;
  for (const std::string& v : vars) {
    Term resolved = apply(Term::make_variable(v));
    if (resolved.is_variable() && resolved.name() == v) continue;
    out.bindings_.emplace(v, std::move(resolved));
  }
  return out;
}

namespace {

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Term x = s.walk(a);
  Term y = s.walk(b);
  if (x.is_variable()) {
    if (y.is_variable() && y.name() == x.name()) return true;
    return s.bind(x.name(), y);
  }
  if (y.is_variable()) return s.bind(y.name(), x);
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case TermKind::atom:
      return x.name() == y.name();
    case TermKind::number:
      return x.number_value() == y.number_value();
    case TermKind::compound:
      if (x.name() != y.name()) return false;
      [[fallthrough]];
    case TermKind::list: {
      if (x.args().size() != y.args().size()) return false;
      for (std::size_t i = 0; i < x.args().size(); ++i)
        if (!unify_into(x.args()[i], y.args()[i], s)) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, Substitution s) {
  if (unify_into(a, b, s)) return s;
  return std::nullopt;
}

}  // namespace claimlogic::logic
