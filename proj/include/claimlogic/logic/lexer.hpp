#pragma once

#include "claimlogic/logic/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace claimlogic::logic {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class ParseErrorKind {
  lex,                    // character outside the grammar
  syntax,                 // unexpected token
  unbalanced_delimiter,   // unclosed or stray ( ) [ ]
};

/// Raised by tokenize / parse_program / parse_query. Carries the source
/// position of the offending character or token.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& message, SourcePos pos);

  ParseErrorKind error_kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  ParseErrorKind kind_;
  SourcePos pos_;
};

enum class TokenKind {
  atom,
  variable,
  number,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  bar,
  semicolon,
  dot,          // clause terminator
  neck,         // :-
  query_neck,   // ?-
  arrow,        // ->
  naf,          // \+
  lt,           // <
  gt,           // >
  le,           // =<
  ge,           // >=
  arith_eq,     // =:=
  unify,        // =
  not_unify,    // \=
  plus,
  minus,
  star,
  slash,
  unsupported,  // recognized but outside the subset: <=, ==, \==, =\=, ...
  end_of_input,
};

struct Token {
  TokenKind kind;
  std::string text;     // verbatim source spelling
  Rational number{0};   // numbers only
  SourcePos pos;
};

/// Splits source text into tokens. Discards `%` line comments and `/* */`
/// block comments. Throws ParseError(lex) for characters outside the grammar.
/// The returned list always ends with an end_of_input token.
std::vector<Token> tokenize(std::string_view text);

}  // namespace claimlogic::logic
