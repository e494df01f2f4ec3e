#pragma once

#include <span>

#include "strom/formula.hpp"
#include "strom/progression.hpp"
#include "strom/state.hpp"
#include "strom/verdict.hpp"

namespace strom::oracle {

/// Brute-force reference semantics: evaluates a formula at a trace position
/// by direct structural recursion, expanding each temporal operator one step
/// through its defining identity and recursing. Deliberately exponential and
/// structurally unrelated to the progression engine (no guarded form, no
/// simplification), so agreement between the two is meaningful evidence.
/// Testing only; never on the production path.
///
/// index must be < trace.size(). Throws the same atom-evaluation errors as
/// unroll.
ExtVerdict eval_direct(const FormulaPtr& f, std::span<const State> trace, std::size_t index);

}  // namespace strom::oracle
