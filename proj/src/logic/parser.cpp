#include "claimlogic/logic/parser.hpp"

#include "claimlogic/logic/builtins.hpp"

#include <functional>
#include <set>
#include <utility>

namespace claimlogic::logic {

namespace {

bool is_comparison_token(TokenKind k) {
  switch (k) {
    case TokenKind::lt:
    case TokenKind::gt:
    case TokenKind::le:
    case TokenKind::ge:
    case TokenKind::arith_eq:
    case TokenKind::unify:
    case TokenKind::not_unify:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Program parse_program() {
    std::vector<Clause> clauses;
    while (peek().kind != TokenKind::end_of_input) {
      if (peek().kind == TokenKind::query_neck)
        throw err("'?-' directives are not allowed inside a rule base");
      clauses.push_back(parse_clause());
    }
    return Program(std::move(clauses));
  }

  Body parse_query() {
    if (peek().kind == TokenKind::query_neck) next();
    Body body = parse_body();
    expect_dot();
    if (peek().kind != TokenKind::end_of_input)
      throw err("a query is a single goal conjunction terminated by '.'");
    return freshen(body);
  }

 private:
  // ---- token plumbing ------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  ParseError err(const std::string& message, ParseErrorKind kind = ParseErrorKind::syntax) const {
    return ParseError(kind, message, peek().pos);
  }

  void reject_unsupported() const {
    if (peek().kind != TokenKind::unsupported) return;
    const std::string& t = peek().text;
    if (t == "<=")
      throw err("'<=' is not an operator here; use '=<' for less-or-equal");
    throw err("operator '" + t + "' is outside the supported subset");
  }

  void expect_dot() {
    if (peek().kind == TokenKind::dot) {
      next();
      return;
    }
    if (peek().kind == TokenKind::end_of_input)
      throw err("expected '.' at end of clause, found end of input");
    reject_unsupported();
    throw err("expected '.' at end of clause, found '" + peek().text + "'");
  }

  // Delimiter bookkeeping so unclosed parentheses are reported as their own
  // error kind (generated encodings fail this way often enough to matter).
  void open_delim(char c) { delims_.push_back({c, peek().pos}); }

  void close_delim(TokenKind closer, const char* what) {
    if (peek().kind == closer) {
      delims_.pop_back();
      next();
      return;
    }
    if (peek().kind == TokenKind::end_of_input) {
      auto open = delims_.back();
      throw ParseError(ParseErrorKind::unbalanced_delimiter,
                       std::string("unclosed '") + open.first + "' (expected " + what + ")",
                       open.second);
    }
    reject_unsupported();
    throw err(std::string("expected ") + what + ", found '" + peek().text + "'",
              ParseErrorKind::unbalanced_delimiter);
  }

  // ---- clauses -------------------------------------------------------

  Clause parse_clause() {
    Term head = parse_head();
    Body body = Body::truth();
    if (peek().kind == TokenKind::neck) {
      next();
      body = parse_body();
    }
    expect_dot();
    Clause clause{std::move(head), std::move(body)};
    return freshen(clause);
  }

  Term parse_head() {
    reject_unsupported();
    if (peek().kind != TokenKind::atom) {
      if (peek().kind == TokenKind::variable)
        throw err("clause head must be an atom or compound, not a variable");
      throw err("expected a clause head, found '" + peek().text + "'");
    }
    Term head = parse_primary();
    Functor f = head.functor();
    if (is_builtin(f))
      throw err("cannot redefine builtin " + to_string(f));
    if (f.arity == 0 && !head.is_atom())
      throw err("clause head must be an atom or compound");
    return head;
  }

  // ---- bodies: ';' > '->' > ',' > goal -------------------------------

  Body parse_body() { return parse_disjunction(); }

  struct Disjunct {
    Body body;
    bool is_if_then = false;
    Body cond, then_branch;  // set when is_if_then
  };

  Body parse_disjunction() {
    Disjunct left = parse_arrow();
    if (peek().kind == TokenKind::semicolon) {
      next();
      Body right = parse_disjunction();
      if (left.is_if_then) return Body::ite(left.cond, left.then_branch, right);
      return Body::disj(left.body, right);
    }
    if (left.is_if_then)
      return Body::ite(left.cond, left.then_branch, fail_body());
    return left.body;
  }

  Disjunct parse_arrow() {
    Body cond = parse_conjunction();
    if (peek().kind == TokenKind::arrow) {
      next();
      Disjunct rhs = parse_arrow();
      Body then_branch = rhs.is_if_then
                             ? Body::ite(rhs.cond, rhs.then_branch, fail_body())
                             : rhs.body;
      return {Body(), true, std::move(cond), std::move(then_branch)};
    }
    return {std::move(cond), false, Body(), Body()};
  }

  Body parse_conjunction() {
    Body left = parse_goal();
    if (peek().kind == TokenKind::comma) {
      next();
      return Body::conj(std::move(left), parse_conjunction());
    }
    return left;
  }

  Body parse_goal() {
    reject_unsupported();
    if (peek().kind == TokenKind::lparen) {
      open_delim('(');
      next();
      Body inner = parse_body();
      close_delim(TokenKind::rparen, "')'");
      return inner;
    }
    if (peek().kind == TokenKind::naf) {
      next();
      if (peek().kind == TokenKind::naf)
        throw err("negation cannot be nested");
      if (peek().kind == TokenKind::lparen)
        throw err("negation applies to a single goal, not a parenthesized group");
      Literal lit = parse_literal();
      lit.negated = true;
      return Body::lit(std::move(lit));
    }
    return Body::lit(parse_literal());
  }

  Literal parse_literal() {
    reject_unsupported();
    Term lhs = parse_arith_expr();
    reject_unsupported();  // e.g. '<=' directly after a term
    TokenKind k = peek().kind;
    if (is_comparison_token(k) || (k == TokenKind::atom && peek().text == "is")) {
      std::string op = next().text;
      Term rhs = parse_arith_expr();
      return Literal{false, Term::make_compound(std::move(op), {std::move(lhs), std::move(rhs)})};
    }
    if (!lhs.callable())
      throw err("expected a callable goal");
    return Literal{false, std::move(lhs)};
  }

  // ---- terms ----------------------------------------------------------

  Term parse_arith_expr() {
    Term t = parse_mul_expr();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      std::string op = next().text;
      Term rhs = parse_mul_expr();
      t = Term::make_compound(std::move(op), {std::move(t), std::move(rhs)});
    }
    return t;
  }

  Term parse_mul_expr() {
    Term t = parse_primary();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
      std::string op = next().text;
      Term rhs = parse_primary();
      t = Term::make_compound(std::move(op), {std::move(t), std::move(rhs)});
    }
    return t;
  }

  Term parse_primary() {
    reject_unsupported();
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::number:
        return Term::make_number(next().number);
      case TokenKind::minus: {
        next();
        Term operand = parse_primary();
        if (operand.is_number()) return Term::make_number(-operand.number_value());
        return Term::make_compound("-", {std::move(operand)});
      }
      case TokenKind::variable:
        return Term::make_variable(next().text);
      case TokenKind::atom: {
        std::string name = next().text;
        if (peek().kind == TokenKind::lparen) {
          open_delim('(');
          next();
          std::vector<Term> args;
          args.push_back(parse_arith_expr());
          while (peek().kind == TokenKind::comma) {
            next();
            args.push_back(parse_arith_expr());
          }
          close_delim(TokenKind::rparen, "')' or ','");
          return Term::make_compound(std::move(name), std::move(args));
        }
        return Term::make_atom(std::move(name));
      }
      case TokenKind::lbracket: {
        open_delim('[');
        next();
        std::vector<Term> elements;
        if (peek().kind != TokenKind::rbracket) {
          elements.push_back(parse_arith_expr());
          while (peek().kind == TokenKind::comma) {
            next();
            elements.push_back(parse_arith_expr());
          }
          if (peek().kind == TokenKind::bar)
            throw err("partial lists ([Head|Tail]) are not supported");
        }
        close_delim(TokenKind::rbracket, "']' or ','");
        return Term::make_list(std::move(elements));
      }
      case TokenKind::lparen: {
        open_delim('(');
        next();
        Term inner = parse_arith_expr();
        close_delim(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::rparen:
      case TokenKind::rbracket:
        if (delims_.empty())
          throw err("unexpected '" + tok.text + "'", ParseErrorKind::unbalanced_delimiter);
        throw err("expected a term, found '" + tok.text + "'");
      case TokenKind::end_of_input:
        if (!delims_.empty()) {
          auto open = delims_.back();
          throw ParseError(ParseErrorKind::unbalanced_delimiter,
                           std::string("unclosed '") + open.first + "'", open.second);
        }
        throw err("unexpected end of input");
      default:
        throw err("expected a term, found '" + tok.text + "'");
    }
  }

  // ---- anonymous variables --------------------------------------------

  // Every `_` occurrence becomes a distinct fresh variable, scoped to its
  // clause. Names are chosen to avoid the clause's own variables, so the
  // printed form re-parses to the same structure.
  struct Freshener {
    std::set<std::string> used;
    int counter = 0;

    std::string fresh() {
      std::string name;
      do {
        name = "_G" + std::to_string(++counter);
      } while (used.count(name));
      used.insert(name);
      return name;
    }

    void collect(const Term& t) {
      if (t.is_variable()) {
        used.insert(t.name());
        return;
      }
      if (t.is_compound() || t.is_list())
        for (const Term& a : t.args()) collect(a);
    }

    Term rewrite(const Term& t) {
      switch (t.kind()) {
        case TermKind::variable:
          return t.name() == "_" ? Term::make_variable(fresh()) : t;
        case TermKind::compound: {
          std::vector<Term> args;
          args.reserve(t.args().size());
          for (const Term& a : t.args()) args.push_back(rewrite(a));
          return Term::make_compound(t.name(), std::move(args));
        }
        case TermKind::list: {
          std::vector<Term> elements;
          elements.reserve(t.args().size());
          for (const Term& a : t.args()) elements.push_back(rewrite(a));
          return Term::make_list(std::move(elements));
        }
        default:
          return t;
      }
    }

    Body rewrite(const Body& b) {
      switch (b.kind()) {
        case BodyKind::truth:
          return b;
        case BodyKind::literal: {
          const Literal& l = b.literal();
          return Body::lit(Literal{l.negated, rewrite(l.goal)});
        }
        case BodyKind::conjunction:
          return Body::conj(rewrite(b.left()), rewrite(b.right()));
        case BodyKind::disjunction:
          return Body::disj(rewrite(b.left()), rewrite(b.right()));
        case BodyKind::if_then_else:
          return Body::ite(rewrite(b.cond()), rewrite(b.then_branch()),
                           rewrite(b.else_branch()));
      }
      return b;
    }

    void collect(const Body& b) {
      std::vector<Literal> goals;
      b.collect_goals(goals);
      for (const Literal& l : goals) collect(l.goal);
    }
  };

  Clause freshen(Clause clause) {
    Freshener f;
    f.collect(clause.head);
    f.collect(clause.body);
    if (!f.used.count("_")) return clause;
    f.used.erase("_");
    return Clause{f.rewrite(clause.head), f.rewrite(clause.body)};
  }

  Body freshen(Body body) {
    Freshener f;
    f.collect(body);
    if (!f.used.count("_")) return body;
    f.used.erase("_");
    return f.rewrite(body);
  }

  static Body fail_body() {
    return Body::lit(Literal{false, Term::make_atom("fail")});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::pair<char, SourcePos>> delims_;
};

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(text).parse_program();
}

Body parse_query(std::string_view text) {
  return Parser(text).parse_query();
}

}  // namespace claimlogic::logic
