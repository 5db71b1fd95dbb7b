#include "claimlogic/logic/pretty.hpp"

#include "claimlogic/logic/builtins.hpp"

#include <cassert>

namespace claimlogic::logic {

namespace {

int arith_precedence(const Term& t) {
  if (!t.is_compound()) return 0;
  const std::string& f = t.name();
  if (t.args().size() == 2) {
    if (f == "+" || f == "-") return 500;
    if (f == "*" || f == "/") return 400;
  }
  if (t.args().size() == 1 && f == "-") return 200;
  return 0;
}

// max_prec: highest operator precedence printable here without parentheses.
void print_term(const Term& t, std::string& out, int max_prec) {
  switch (t.kind()) {
    case TermKind::atom:
    case TermKind::variable:
      out += t.name();
      return;
    case TermKind::number: {
      const Rational& r = t.number_value();
      if (r < Rational(0)) {
        // A negative literal re-parses through the unary-minus rule.
        out += '-';
        out += decimal_string(-r);
      } else {
        out += decimal_string(r);
      }
      return;
    }
    case TermKind::list: {
      out += '[';
      bool first = true;
      for (const Term& e : t.args()) {
        if (!first) out += ", ";
        first = false;
        print_term(e, out, 999);
      }
      out += ']';
      return;
    }
    case TermKind::compound: {
      int prec = arith_precedence(t);
      if (prec > 0 && t.args().size() == 2) {
        bool parens = prec > max_prec;
        if (parens) out += '(';
        print_term(t.args()[0], out, prec);        // yfx: left may be equal
        out += t.name();
        print_term(t.args()[1], out, prec - 1);    // right must bind tighter
        if (parens) out += ')';
        return;
      }
      if (prec > 0 && t.args().size() == 1) {
        bool parens = prec > max_prec;
        if (parens) out += '(';
        out += '-';
        print_term(t.args()[0], out, prec - 1);
        if (parens) out += ')';
        return;
      }
      out += t.name();
      out += '(';
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) out += ", ";
        first = false;
        print_term(a, out, 999);
      }
      out += ')';
      return;
    }
  }
}

bool is_infix_goal(const Term& goal) {
  if (!goal.is_compound() || goal.args().size() != 2) return false;
  const std::string& f = goal.name();
  return f == "<" || f == ">" || f == "=<" || f == ">=" || f == "=:=" || f == "=" ||
         f == "\\=" || f == "is";
}

void print_literal(const Literal& l, std::string& out) {
  if (l.negated) out += "\\+ ";
  if (is_infix_goal(l.goal)) {
    print_term(l.goal.args()[0], out, 999);
    out += ' ';
    out += l.goal.name();
    out += ' ';
    print_term(l.goal.args()[1], out, 999);
    return;
  }
  print_term(l.goal, out, 999);
}

void print_body(const Body& b, std::string& out) {
  switch (b.kind()) {
    case BodyKind::truth:
      out += "true";
      return;
    case BodyKind::literal:
      print_literal(b.literal(), out);
      return;
    case BodyKind::conjunction:
      print_body(b.left(), out);
      out += ", ";
      print_body(b.right(), out);
      return;
    case BodyKind::disjunction:
      out += "( ";
      print_body(b.left(), out);
      out += " ; ";
      print_body(b.right(), out);
      out += " )";
      return;
    case BodyKind::if_then_else:
      out += "( ";
      print_body(b.cond(), out);
      out += " -> ";
      print_body(b.then_branch(), out);
      out += " ; ";
      print_body(b.else_branch(), out);
      out += " )";
      return;
  }
}

}  // namespace

std::string pretty(const Term& t) {
  std::string out;
  print_term(t, out, 999);
  return out;
}

std::string pretty(const Literal& l) {
  std::string out;
  print_literal(l, out);
  return out;
}

std::string pretty(const Body& b) {
  std::string out;
  print_body(b, out);
  return out;
}

std::string pretty(const Clause& c) {
  std::string out;
  print_term(c.head, out, 999);
  if (!c.is_fact()) {
    out += " :- ";
    print_body(c.body, out);
  }
  out += '.';
  return out;
}

std::string pretty(const Program& p) {
  std::string out;
  for (const Clause& c : p.clauses()) {
    out += pretty(c);
    out += '\n';
  }
  return out;
}

}  // namespace claimlogic::logic
