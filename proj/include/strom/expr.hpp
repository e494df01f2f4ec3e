#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "strom/state.hpp"
#include "strom/value.hpp"

namespace strom {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { eq, ne, lt, le, gt, ge, add, sub, mul, div, in };

const char* to_string(BinOp op);

/// State-dependent, non-temporal expression: the payload of formula atoms,
/// action guards, and model effects. Fully elaborated — function applications
/// have been inlined away; the only variables left are `happened` and
/// freeze binders, which are substituted before evaluation.
class Expr {
public:
  enum class Kind { literal, selector_field, variable, builtin_call, binary, if_expr };

  Kind kind;
  Value literal;                 // literal
  std::string selector;          // selector_field
  std::string field;             // selector_field
  std::string name;              // variable, builtin_call
  std::vector<ExprPtr> args;     // builtin_call
  BinOp op = BinOp::eq;          // binary
  ExprPtr lhs, rhs;              // binary
  ExprPtr cond, then_branch, else_branch;  // if_expr

  /// Key this expression reads from the state, e.g. "#toggle.text".
  std::string field_key() const { return selector + "." + field; }

  std::string to_string() const;
};

namespace expr {
ExprPtr literal(Value v);
ExprPtr selector_field(std::string selector, std::string field);
ExprPtr variable(std::string name);
ExprPtr builtin_call(std::string name, std::vector<ExprPtr> args);
ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr if_expr(ExprPtr cond, ExprPtr then_branch, ExprPtr else_branch);
}  // namespace expr

/// Called for every state field an evaluation reads; used by tests to verify
/// that runs stay inside the statically computed dependency set.
using FieldReadObserver = std::function<void(const std::string& field)>;

struct EvalContext {
  const State* state = nullptr;
  const FieldReadObserver* observer = nullptr;
};

/// Evaluates against a state. Throws UnknownFieldError for absent fields and
/// EvalError for arithmetic/type errors (including unbound variables).
Value eval_expr(const Expr& e, const EvalContext& ctx);
Value eval_expr(const Expr& e, const State& state);

/// Substitutes a constant for every free occurrence of `name`.
ExprPtr substitute_var(const ExprPtr& e, const std::string& name, const Value& v);

/// True if the expression reads any state (a selector field or `happened`).
bool touches_state(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

/// Collects the field keys of all selector projections, left to right.
void collect_fields(const Expr& e, std::vector<std::string>& out);

}  // namespace strom
