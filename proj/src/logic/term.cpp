#include "claimlogic/logic/term.hpp"

#include <cassert>
#include <utility>

namespace claimlogic::logic {

struct Term::Node {
  TermKind kind;
  std::string text;        // atom/variable name or compound functor
  Rational number{0};      // numbers only
  std::vector<Term> args;  // compound args or list elements
  bool ground = true;
};

namespace {

bool all_ground(const std::vector<Term>& ts) {
  for (const Term& t : ts)
    if (!t.ground()) return false;
  return true;
}

}  // namespace

std::string to_string(const Functor& f) {
  return f.name + "/" + std::to_string(f.arity);
}

Term Term::make_atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::atom;
  node->text = std::move(name);
  return Term(std::move(node));
}

Term Term::make_number(Rational value) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::number;
  node->number = std::move(value);
  return Term(std::move(node));
}

Term Term::make_variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::variable;
  node->text = std::move(name);
  node->ground = false;
  return Term(std::move(node));
}

Term Term::make_compound(std::string functor, std::vector<Term> args) {
  assert(!args.empty() && "arity-0 terms are atoms");
  auto node = std::make_shared<Node>();
  node->kind = TermKind::compound;
  node->text = std::move(functor);
  node->ground = all_ground(args);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::make_list(std::vector<Term> elements) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::list;
  node->ground = all_ground(elements);
  node->args = std::move(elements);
  return Term(std::move(node));
}

TermKind Term::kind() const {
  assert(node_);
  return node_->kind;
}

const std::string& Term::name() const {
  assert(node_ && node_->kind != TermKind::number && node_->kind != TermKind::list);
  return node_->text;
}

const Rational& Term::number_value() const {
  assert(node_ && node_->kind == TermKind::number);
  return node_->number;
}

const std::vector<Term>& Term::args() const {
  assert(node_);
  return node_->args;
}

Functor Term::functor() const {
  assert(callable());
  return Functor{node_->text, node_->args.size()};
}

bool Term::ground() const {
  assert(node_);
  return node_->ground;
}

bool Term::contains_variable(const std::string& var_name) const {
  assert(node_);
  if (node_->ground) return false;
  if (node_->kind == TermKind::variable) return node_->text == var_name;
  for (const Term& arg : node_->args)
    if (arg.contains_variable(var_name)) return true;
  return false;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case TermKind::atom:
    case TermKind::variable:
      return node_->text == other.node_->text;
    case TermKind::number:
      return node_->number == other.node_->number;
    case TermKind::compound:
      if (node_->text != other.node_->text) return false;
      [[fallthrough]];
    case TermKind::list: {
      const auto& a = node_->args;
      const auto& b = other.node_->args;
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace claimlogic::logic
