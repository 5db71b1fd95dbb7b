#include "claimlogic/logic/ast.hpp"

#include <cassert>

namespace claimlogic::logic {

struct Body::Node {
  BodyKind kind;
  Literal literal;           // literal
  std::vector<Body> parts;   // conj/disj: {left,right}; ite: {cond,then,else}
};

Body Body::truth() {
  static const Body instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = BodyKind::truth;
    return Body(std::move(node));
  }();
  return instance;
}

Body Body::lit(Literal literal) {
  auto node = std::make_shared<Node>();
  node->kind = BodyKind::literal;
  node->literal = std::move(literal);
  return Body(std::move(node));
}

Body Body::conj(Body left, Body right) {
  auto node = std::make_shared<Node>();
  node->kind = BodyKind::conjunction;
  node->parts = {std::move(left), std::move(right)};
  return Body(std::move(node));
}

Body Body::disj(Body left, Body right) {
  auto node = std::make_shared<Node>();
  node->kind = BodyKind::disjunction;
  node->parts = {std::move(left), std::move(right)};
  return Body(std::move(node));
}

Body Body::ite(Body cond, Body then_branch, Body else_branch) {
  auto node = std::make_shared<Node>();
  node->kind = BodyKind::if_then_else;
  node->parts = {std::move(cond), std::move(then_branch), std::move(else_branch)};
  return Body(std::move(node));
}

BodyKind Body::kind() const {
  assert(node_);
  return node_->kind;
}

const Literal& Body::literal() const {
  assert(kind() == BodyKind::literal);
  return node_->literal;
}

const Body& Body::left() const {
  assert(kind() == BodyKind::conjunction || kind() == BodyKind::disjunction);
  return node_->parts[0];
}

const Body& Body::right() const {
  assert(kind() == BodyKind::conjunction || kind() == BodyKind::disjunction);
  return node_->parts[1];
}

const Body& Body::cond() const {
  assert(kind() == BodyKind::if_then_else);
  return node_->parts[0];
}

const Body& Body::then_branch() const {
  assert(kind() == BodyKind::if_then_else);
  return node_->parts[1];
}

const Body& Body::else_branch() const {
  assert(kind() == BodyKind::if_then_else);
  return node_->parts[2];
}

bool Body::operator==(const Body& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  if (node_->kind == BodyKind::truth) return true;
  if (node_->kind == BodyKind::literal) return node_->literal == other.node_->literal;
  const auto& a = node_->parts;
  const auto& b = other.node_->parts;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

void Body::collect_goals(std::vector<Literal>& out) const {
  switch (kind()) {
    case BodyKind::truth:
      return;
    case BodyKind::literal:
      out.push_back(node_->literal);
      return;
    default:
      for (const Body& part : node_->parts) part.collect_goals(out);
      return;
  }
}

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    index_[clauses_[i].head.functor()].push_back(i);
}

const std::vector<std::size_t>* Program::clause_positions(const Functor& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? nullptr : &it->second;
}

std::set<Functor> Program::defined_predicates() const {
  std::set<Functor> out;
  for (const auto& [f, positions] : index_) out.insert(f);
  return out;
}

std::set<Functor> Program::referenced_predicates() const {
  std::set<Functor> out;
  std::vector<Literal> goals;
  for (const Clause& c : clauses_) c.body.collect_goals(goals);
  for (const Literal& l : goals) out.insert(l.goal.functor());
  return out;
}

Program Program::extended_with(const Program& other) const {
  return extended_with(other.clauses_);
}

Program Program::extended_with(const std::vector<Clause>& more) const {
  std::vector<Clause> all = clauses_;
  all.insert(all.end(), more.begin(), more.end());
  return Program(std::move(all));
}

}  // namespace claimlogic::logic
