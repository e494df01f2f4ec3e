#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace strom {

/// Position inside a source file (1-based line and column, 0 = unknown).
struct SourceLoc {
  int line = 0;
  int col = 0;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(col);
  }
};

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic or type error while evaluating an expression.
class EvalError : public Error {
public:
  explicit EvalError(const std::string& msg) : Error("eval error: " + msg) {}
};

/// An atom referenced a state field that the state does not carry.
class UnknownFieldError : public Error {
public:
  explicit UnknownFieldError(const std::string& field)
      : Error("unknown field: " + field), field(field) {}
  std::string field;
};

/// An atom in formula position evaluated to a non-boolean value.
class AtomNotBooleanError : public Error {
public:
  explicit AtomNotBooleanError(const std::string& what_value)
      : Error("atom evaluated to non-boolean: " + what_value) {}
};

/// Simplification exceeded the configured node budget.
class FormulaBlowupError : public Error {
public:
  FormulaBlowupError(std::size_t nodes, std::size_t limit)
      : Error("formula grew to " + std::to_string(nodes) +
              " nodes (limit " + std::to_string(limit) + ")"),
        nodes(nodes), limit(limit) {}
  std::size_t nodes;
  std::size_t limit;
};

/// Error raised while progressing a formula over a trace; carries the index
/// of the state being consumed when the underlying error occurred.
class TraceEvalError : public Error {
public:
  TraceEvalError(std::size_t state_index, const std::string& cause)
      : Error("at trace state " + std::to_string(state_index) + ": " + cause),
        state_index(state_index) {}
  std::size_t state_index;
};

class SyntaxError : public Error {
public:
  SyntaxError(SourceLoc loc, const std::string& msg, std::string expected = "")
      : Error("syntax error at " + loc.to_string() + ": " + msg +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        loc(loc), expected(std::move(expected)) {}
  SourceLoc loc;
  std::string expected;
};

enum class TypeErrorKind {
  recursion_forbidden,
  function_in_data,
  arity_mismatch,
  unbound_name,
};

class TypeError : public Error {
public:
  TypeError(TypeErrorKind kind, SourceLoc loc, const std::string& msg)
      : Error("type error at " + loc.to_string() + ": " + msg),
        kind(kind), loc(loc) {}
  TypeErrorKind kind;
  SourceLoc loc;
};

enum class ElaborationErrorKind {
  state_access_outside_temporal_context,
  unknown_check_target,
  temporal_in_expr_position,
};

class ElaborationError : public Error {
public:
  ElaborationError(ElaborationErrorKind kind, SourceLoc loc, const std::string& msg)
      : Error("elaboration error at " + loc.to_string() + ": " + msg),
        kind(kind), loc(loc) {}
  ElaborationErrorKind kind;
  SourceLoc loc;
};

/// Malformed wire message.
class DecodeError : public Error {
public:
  DecodeError(std::size_t offset, const std::string& reason)
      : Error("decode error at offset " + std::to_string(offset) + ": " + reason),
        offset(offset), reason(reason) {}
  std::size_t offset;
  std::string reason;
};

/// Invalid model document; `path` points into the document ("actions.click(#x).effects[0]").
class ModelError : public Error {
public:
  ModelError(const std::string& path, const std::string& reason)
      : Error("model error at " + path + ": " + reason), path(path), reason(reason) {}
  std::string path;
  std::string reason;
};

class ProtocolViolationError : public Error {
public:
  explicit ProtocolViolationError(const std::string& msg)
      : Error("protocol violation: " + msg) {}
};

class ExecutorDiedError : public Error {
public:
  explicit ExecutorDiedError(const std::string& msg)
      : Error("executor died: " + msg) {}
};

class GuardEvalError : public Error {
public:
  GuardEvalError(const std::string& action, const std::string& cause)
      : Error("guard of action " + action + " failed to evaluate: " + cause),
        action(action) {}
  std::string action;
};

class StuckError : public Error {
public:
  explicit StuckError(int waits)
      : Error("no enabled actions after " + std::to_string(waits) + " waits") {}
};

/// A session requested a snapshot field the model does not declare.
class UnknownDependencyError : public Error {
public:
  explicit UnknownDependencyError(const std::string& name)
      : Error("unknown dependency: " + name), name(name) {}
  std::string name;
};

}  // namespace strom
