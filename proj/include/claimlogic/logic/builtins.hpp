#pragma once

#include "claimlogic/logic/term.hpp"

#include <set>

namespace claimlogic::logic {

/// Goal functors evaluated by the engine rather than by clause resolution:
/// comparisons, unification, member/2, is/2 and the truth constants.
const std::set<Functor>& builtin_functors();

bool is_builtin(const Functor& f);

/// Comparison and is/2 functors (the goals whose arguments are evaluated
/// arithmetically).
bool is_arith_builtin(const Functor& f);

}  // namespace claimlogic::logic
