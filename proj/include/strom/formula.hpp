#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "strom/expr.hpp"

namespace strom {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Temporal formula over finite partial traces.
///
/// The three next modalities differ only in their behaviour at the end of a
/// trace: weak next defaults to true, strong next to false, and required next
/// demands that another state be produced. Subscripts on the four temporal
/// operators give the minimum number of further states that must be examined
/// before a presumptive answer may be given; each unrolling of a subscript
/// n+1 spends one required next.
class Formula {
public:
  enum class Kind {
    top,
    bottom,
    atom,
    negation,
    conjunction,
    disjunction,
    next_required,
    next_weak,
    next_strong,
    always,
    eventually,
    until,
    release,
    freeze,
  };

  Kind kind;
  ExprPtr atom_expr;          // atom; freeze bound expression
  FormulaPtr lhs;             // unary operand / left / freeze body
  FormulaPtr rhs;             // right operand of and/or/until/release
  std::uint32_t subscript = 0;  // always/eventually/until/release
  std::string binder;         // freeze

  bool is_constant() const { return kind == Kind::top || kind == Kind::bottom; }
  bool is_temporal_kind() const {
    return kind >= Kind::next_required && kind <= Kind::release;
  }

  std::string to_string() const;
};

namespace formula {

FormulaPtr top();
FormulaPtr bottom();
FormulaPtr constant(bool b);
FormulaPtr atom(ExprPtr e);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr next_required(FormulaPtr f);
FormulaPtr next_weak(FormulaPtr f);
FormulaPtr next_strong(FormulaPtr f);
FormulaPtr always(std::uint32_t n, FormulaPtr f);
FormulaPtr eventually(std::uint32_t n, FormulaPtr f);
FormulaPtr until(std::uint32_t n, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr release(std::uint32_t n, FormulaPtr lhs, FormulaPtr rhs);

/// Builds a freeze node: `bound` is evaluated in the state where this node is
/// unrolled and the result replaces `binder` throughout the body. The binder
/// is renamed if the body already freezes the same name, so binders stay
/// unique along every root-to-leaf path.
FormulaPtr freeze(std::string binder, ExprPtr bound, FormulaPtr body);

}  // namespace formula

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Tree size. Shared subtrees are counted once per occurrence but computed
/// in DAG time via memoization.
std::size_t node_count(const FormulaPtr& f);

/// Substitutes a constant for a freeze binder's occurrences in atom
/// expressions and freeze bounds. Stops at an inner freeze that rebinds the
/// same name (which construction rules out, but cheap to honor).
FormulaPtr substitute_binder(const FormulaPtr& f, const std::string& name, const Value& v);

}  // namespace strom
