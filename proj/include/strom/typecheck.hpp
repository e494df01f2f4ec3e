#pragma once

#include "strom/ast.hpp"

namespace strom {

/// Function/non-function discipline over a parsed program. Bindings may only
/// reference previously defined names (which rules out recursion), functions
/// may not be stored in data or used where a value is required, and arities
/// must match. Throws TypeError.
void typecheck(const Program& program);

}  // namespace strom
