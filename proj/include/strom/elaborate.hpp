#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strom/ast.hpp"
#include "strom/descriptor.hpp"
#include "strom/formula.hpp"

namespace strom {

struct ElaboratedAction {
  std::string name;  // spec-side name, with its ! / ? suffix
  bool is_event = false;
  Descriptor primitive;  // id without suffix, constant args
  ExprPtr guard;         // null means always enabled
  std::optional<std::int64_t> timeout_ms;
};

struct CheckConfig {
  std::vector<std::string> properties;
  std::optional<std::vector<std::string>> with;  // allowed action/event names
  std::uint32_t default_subscript = 0;
};

struct ElaboratedSpec {
  std::map<std::string, FormulaPtr> properties;  // the ones referenced by checks
  std::map<std::string, ElaboratedAction> actions;
  std::map<std::string, ElaboratedAction> events;
  std::vector<CheckConfig> checks;
};

/// Inlines every binding and application into closed property formulas and
/// resolved action tables.
///
/// Lazy (~) bindings and parameters substitute their defining expression
/// syntactically. Eager bindings and parameters are evaluated where they are
/// bound: at elaboration time when their expression is state-independent,
/// and otherwise as a freeze node capturing the value at unroll time —
/// which is only meaningful under a temporal operator, so a state-dependent
/// eager binding anywhere else is rejected. Temporal operators without an
/// explicit subscript receive default_subscript.
ElaboratedSpec elaborate(const Program& program, std::uint32_t default_subscript);

/// Elaborates one named binding as a property formula (tooling entry point;
/// the binding does not have to appear in a check).
FormulaPtr elaborate_property(const Program& program, const std::string& name,
                              std::uint32_t default_subscript);

/// Every state field syntactically reachable from the checked properties and
/// from the guards and primitives of the actions/events the check allows,
/// including both branches of every conditional.
std::set<std::string> analyze_deps(const ElaboratedSpec& spec, const CheckConfig& check);

/// Elaborates a standalone surface expression that may not reference any
/// bindings (used for expression strings in model documents). Temporal
/// operators and free names are rejected.
ExprPtr elaborate_pure_expr(const SExpr& e);

}  // namespace strom
