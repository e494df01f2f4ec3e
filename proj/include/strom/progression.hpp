#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "strom/formula.hpp"
#include "strom/state.hpp"
#include "strom/verdict.hpp"

namespace strom {

class GuardedFormula;
using GuardedPtr = std::shared_ptr<const GuardedFormula>;

/// Residue of one progression step: a conjunction/disjunction tree whose
/// leaves are all next-guarded formulas. No atoms, constants, or negations
/// survive at this level.
class GuardedFormula {
public:
  enum class Kind { g_and, g_or, g_next_required, g_next_weak, g_next_strong };

  Kind kind;
  GuardedPtr lhs, rhs;  // g_and / g_or
  FormulaPtr body;      // next-guarded payload

  std::string to_string() const;
};

namespace guarded {
GuardedPtr g_and(GuardedPtr a, GuardedPtr b);
GuardedPtr g_or(GuardedPtr a, GuardedPtr b);
GuardedPtr g_next_required(FormulaPtr body);
GuardedPtr g_next_weak(FormulaPtr body);
GuardedPtr g_next_strong(FormulaPtr body);
}  // namespace guarded

bool guarded_equal(const GuardedPtr& a, const GuardedPtr& b);
bool has_required_next(const GuardedFormula& f);
std::size_t guard_count(const GuardedFormula& f);

/// Re-embeds a guarded formula into the plain formula syntax.
FormulaPtr guarded_to_formula(const GuardedFormula& f);

struct ProgressionLimits {
  /// Simplification raises FormulaBlowupError when the formula exceeds this
  /// many nodes, turning pathological growth into an error instead of a hang.
  std::size_t max_nodes = 100000;
};

/// Unrolls a formula one step against a state: atoms are evaluated to
/// constants, freezes at the current level are eliminated by capturing their
/// expression's current value, temporal operators are expanded one step
/// (subscript n+1 spends a required next; subscript 0 switches to weak next
/// for always/release and strong next for eventually/until), and anything
/// already guarded by a next is left untouched.
///
/// Throws AtomNotBooleanError, UnknownFieldError, or EvalError.
FormulaPtr unroll(const FormulaPtr& f, const State& state,
                  const FieldReadObserver* observer = nullptr);

/// Result of simplification: either a definitive constant or a guarded form.
struct Simplified {
  std::optional<Verdict> definitive;  // definitely_true / definitely_false
  GuardedPtr guarded;                 // set iff !definitive

  bool is_definitive() const { return definitive.has_value(); }
};

/// Simplifies an unrolled formula to a constant or to guarded form: constant
/// folding, double-negation elimination, De Morgan, and negation pushed
/// through next guards (weak and strong next are dual, required next is
/// self-dual). Negations pushed under a guard keep normalizing inside it, so
/// guard payloads never start with a negated temporal operator.
Simplified simplify(const FormulaPtr& f, const ProgressionLimits& limits = {});

struct PresumptiveResult {
  bool demands = false;               // a required next needs another state
  Verdict verdict = Verdict::presumably_true;  // set iff !demands
};

/// End-of-trace answer for a guarded form: weak-next leaves default to true,
/// strong-next leaves to false, the verdict lattice folds the tree, and the
/// result is weakened to a presumptive value — defaults are not evidence.
/// Any required-next leaf makes the result a demand for more states instead.
PresumptiveResult presumptive(const GuardedFormula& f);

/// Strips one layer of next guards, homomorphically over and/or.
FormulaPtr step_forward(const GuardedFormula& f);

struct Outcome {
  ExtVerdict verdict;
  std::size_t states_consumed = 0;
  std::optional<std::size_t> definitive_at;

  friend bool operator==(const Outcome& a, const Outcome& b) {
    return a.verdict == b.verdict && a.states_consumed == b.states_consumed &&
           a.definitive_at == b.definitive_at;
  }
};

/// Runs unroll/simplify state by state. Returns at the first state where
/// simplification reaches a constant; if the trace runs out first, returns
/// the presumptive answer of the last guarded form (or a demand for more
/// states when a required next is still pending).
///
/// Evaluation errors are rethrown as TraceEvalError carrying the index of the
/// offending state.
Outcome evaluate_trace(const FormulaPtr& f, std::span<const State> trace,
                       const ProgressionLimits& limits = {},
                       const FieldReadObserver* observer = nullptr);

}  // namespace strom
