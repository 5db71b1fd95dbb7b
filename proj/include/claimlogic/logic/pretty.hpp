#pragma once

#include "claimlogic/logic/ast.hpp"

#include <string>

namespace claimlogic::logic {

/// Canonical source rendering. For any parsed or engine-built program P,
/// parse_program(pretty(P)) is structurally identical to P.
std::string pretty(const Term& t);
std::string pretty(const Literal& l);
std::string pretty(const Body& b);
std::string pretty(const Clause& c);
std::string pretty(const Program& p);

}  // namespace claimlogic::logic
