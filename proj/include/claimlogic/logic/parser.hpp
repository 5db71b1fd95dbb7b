#pragma once

#include "claimlogic/logic/ast.hpp"
#include "claimlogic/logic/lexer.hpp"

#include <string_view>

namespace claimlogic::logic {

/// Parses a full rule base. The pretty-printed form of the result re-parses
/// to a structurally identical Program.
///
/// Grammar (ASCII source): clauses end with `.`; `:-` separates head and
/// body; `,` conjunction; `;` disjunction; `->` if-then; `\+` negation of a
/// single goal; `%` line comments and `/* */` block comments. `=<` is the
/// less-or-equal operator; `<=` is rejected with a targeted diagnostic.
///
/// Throws ParseError. Unclosed or stray delimiters throw with kind
/// unbalanced_delimiter so callers can classify that failure mode.
Program parse_program(std::string_view text);

/// Parses a single goal conjunction terminated by `.`. A leading `?-` is
/// accepted and ignored.
Body parse_query(std::string_view text);

}  // namespace claimlogic::logic
