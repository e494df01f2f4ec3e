#pragma once

// Surface syntax tree for .strom files, produced by the parser and consumed
// by the type checker and elaborator. Source locations are kept on every
// node for error reporting; they are ignored by structural equality.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "strom/errors.hpp"
#include "strom/expr.hpp"

namespace strom {

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

struct SExpr {
  enum class Kind {
    lit_number,
    lit_string,
    lit_bool,
    lit_null,
    selector,         // `#toggle` as a value
    selector_field,   // `#toggle`.text
    action_name,      // start! / tick?
    var,
    call,             // f(a, b) — user function or builtin
    array,            // [a, b, c]
    binop,
    and_op,
    or_op,
    implies,
    not_op,
    if_expr,
    let_in,           // let [~]x = e; body   (inside a block)
    t_always,
    t_eventually,
    t_until,
    t_release,
    t_next,           // required
    t_next_weak,
    t_next_strong,
  };

  Kind kind;
  SourceLoc loc;

  double number = 0;               // lit_number
  std::string str;                 // lit_string
  bool boolean = false;            // lit_bool
  std::string name;                // selector(s), action_name, var, call, let_in binder
  std::string field;               // selector_field projection
  std::vector<SExprPtr> args;      // call, array
  BinOp op = BinOp::eq;            // binop
  SExprPtr lhs, rhs;               // binop/and/or/implies/until/release; let_in: rhs=bound, lhs=body
  SExprPtr cond, then_e, else_e;   // if_expr
  SExprPtr operand;                // unary: not, temporal prefixes
  bool lazy = false;               // let_in
  std::optional<std::uint32_t> subscript;  // t_always/t_eventually/t_until/t_release
};

struct Param {
  std::string name;
  bool lazy = false;
  SourceLoc loc;
};

struct LetDecl {
  std::string name;
  bool lazy = false;
  bool has_params = false;
  std::vector<Param> params;
  SExprPtr body;
  SourceLoc loc;
};

enum class ActionKind { user_action, event };

struct ActionDecl {
  std::string name;  // includes the ! / ? suffix
  ActionKind kind = ActionKind::user_action;
  std::string primitive;           // includes its own ! / ? suffix
  std::vector<SExprPtr> primitive_args;
  std::optional<std::int64_t> timeout_ms;
  SExprPtr guard;  // may be null
  SourceLoc loc;
};

struct CheckDecl {
  std::vector<std::string> properties;
  std::optional<std::vector<std::string>> with_actions;
  SourceLoc loc;
};

using TopLevel = std::variant<LetDecl, ActionDecl, CheckDecl>;
using Program = std::vector<TopLevel>;

/// Renders a program back to concrete syntax; parsing the result yields a
/// structurally equal program (locations aside).
std::string print_program(const Program& p);
std::string print_sexpr(const SExpr& e);

bool sexpr_equal(const SExpr& a, const SExpr& b);
bool program_equal(const Program& a, const Program& b);

/// Stable machine-readable dump, used by the parse subcommand.
nlohmann::ordered_json program_to_json(const Program& p);

}  // namespace strom
