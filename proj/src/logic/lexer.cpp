#include "claimlogic/logic/lexer.hpp"

#include <cctype>

namespace claimlogic::logic {

ParseError::ParseError(ParseErrorKind kind, const std::string& message, SourcePos pos)
    : std::runtime_error(message + " (line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ")"),
      kind_(kind),
      pos_(pos) {}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_layout();
      if (eof()) {
        out.push_back({TokenKind::end_of_input, "", Rational(0), pos_});
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  bool eof() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_layout() {
    for (;;) {
      if (eof()) return;
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start = pos_;
        advance();
        advance();
        for (;;) {
          if (eof())
            throw ParseError(ParseErrorKind::lex, "unterminated block comment", start);
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        return;
      }
    }
  }

  bool match(std::string_view s) {
    if (text_.substr(i_).substr(0, s.size()) != s) return false;
    for (std::size_t k = 0; k < s.size(); ++k) advance();
    return true;
  }

  Token next_token() {
    SourcePos start = pos_;
    char c = peek();

    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(start);
    if (std::islower(static_cast<unsigned char>(c))) return lex_ident(start, TokenKind::atom);
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
      return lex_ident(start, TokenKind::variable);

    // Multi-character operators, longest first. Operators the grammar
    // recognizes but the subset deliberately excludes lex as `unsupported`
    // so the parser can name them in its diagnostic.
    static constexpr struct {
      std::string_view spelling;
      TokenKind kind;
    } kOperators[] = {
        {"=:=", TokenKind::arith_eq}, {"=\\=", TokenKind::unsupported},
        {"=..", TokenKind::unsupported}, {"==", TokenKind::unsupported},
        {"=<", TokenKind::le},        {"=", TokenKind::unify},
        {"\\==", TokenKind::unsupported}, {"\\=", TokenKind::not_unify},
        {"\\+", TokenKind::naf},      {"<=", TokenKind::unsupported},
        {"<", TokenKind::lt},         {">=", TokenKind::ge},
        {">", TokenKind::gt},         {":-", TokenKind::neck},
        {"?-", TokenKind::query_neck}, {"->", TokenKind::arrow},
        {"@<", TokenKind::unsupported}, {"@>", TokenKind::unsupported},
        {"(", TokenKind::lparen},     {")", TokenKind::rparen},
        {"[", TokenKind::lbracket},   {"]", TokenKind::rbracket},
        {",", TokenKind::comma},      {"|", TokenKind::bar},
        {";", TokenKind::semicolon},  {".", TokenKind::dot},
        {"+", TokenKind::plus},       {"-", TokenKind::minus},
        {"*", TokenKind::star},       {"/", TokenKind::slash},
    };
    for (const auto& op : kOperators)
      if (match(op.spelling)) return {op.kind, std::string(op.spelling), Rational(0), start};

    if (c == '`')
      throw ParseError(ParseErrorKind::lex,
                       "unexpected character '`' (markdown fence residue?)", start);
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw ParseError(ParseErrorKind::lex, "unexpected character '" + shown + "'", start);
  }

  Token lex_ident(SourcePos start, TokenKind kind) {
    std::string text;
    while (!eof() && ident_char(peek())) text.push_back(advance());
    return {kind, std::move(text), Rational(0), start};
  }

  Token lex_number(SourcePos start) {
    std::string text;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) text.push_back(advance());
    // A '.' continues the number only when a digit follows; otherwise it is
    // the clause terminator.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      text.push_back(advance());
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) text.push_back(advance());
    }
    auto value = parse_decimal(text);
    if (!value)
      throw ParseError(ParseErrorKind::lex, "malformed number '" + text + "'", start);
    return {TokenKind::number, std::move(text), *value, start};
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  return Lexer(text).run();
}

}  // namespace claimlogic::logic
