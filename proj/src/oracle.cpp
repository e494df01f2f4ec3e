#include "strom/oracle.hpp"

#include <stdexcept>

#include "strom/errors.hpp"

namespace strom::oracle {

namespace {

enum class NextKind { required, weak, strong };

// Value of one "next f" at position index: the modality's default at the end
// of the trace, otherwise f at index+1.
ExtVerdict at_next(NextKind kind, const FormulaPtr& f, std::span<const State> trace,
                   std::size_t index) {
  if (index + 1 >= trace.size()) {
    switch (kind) {
      case NextKind::required: return ExtVerdict::demands();
      case NextKind::weak: return ExtVerdict(Verdict::presumably_true);
      default: return ExtVerdict(Verdict::presumably_false);
    }
  }
  return eval_direct(f, trace, index + 1);
}

NextKind spend(std::uint32_t subscript, NextKind at_zero) {
  return subscript > 0 ? NextKind::required : at_zero;
}

}  // namespace

ExtVerdict eval_direct(const FormulaPtr& f, std::span<const State> trace, std::size_t index) {
  if (index >= trace.size()) throw Error("eval_direct: index past end of trace");
  using K = Formula::Kind;
  namespace fm = formula;
  switch (f->kind) {
    case K::top: return ExtVerdict(Verdict::definitely_true);
    case K::bottom: return ExtVerdict(Verdict::definitely_false);
    case K::atom: {
      Value v = eval_expr(*f->atom_expr, trace[index]);
      if (!v.is_bool()) throw AtomNotBooleanError(v.to_display());
      return ExtVerdict(v.as_bool() ? Verdict::definitely_true : Verdict::definitely_false);
    }
    case K::negation: return ext_negate(eval_direct(f->lhs, trace, index));
    case K::conjunction:
      return ext_and(eval_direct(f->lhs, trace, index), eval_direct(f->rhs, trace, index));
    case K::disjunction:
      return ext_or(eval_direct(f->lhs, trace, index), eval_direct(f->rhs, trace, index));
    case K::next_required: return at_next(NextKind::required, f->lhs, trace, index);
    case K::next_weak: return at_next(NextKind::weak, f->lhs, trace, index);
    case K::next_strong: return at_next(NextKind::strong, f->lhs, trace, index);
    case K::always: {
      std::uint32_t n = f->subscript;
      FormulaPtr rest = fm::always(n > 0 ? n - 1 : 0, f->lhs);
      return ext_and(eval_direct(f->lhs, trace, index),
                     at_next(spend(n, NextKind::weak), rest, trace, index));
    }
    case K::eventually: {
      std::uint32_t n = f->subscript;
      FormulaPtr rest = fm::eventually(n > 0 ? n - 1 : 0, f->lhs);
      return ext_or(eval_direct(f->lhs, trace, index),
                    at_next(spend(n, NextKind::strong), rest, trace, index));
    }
    case K::until: {
      std::uint32_t n = f->subscript;
      FormulaPtr rest = fm::until(n > 0 ? n - 1 : 0, f->lhs, f->rhs);
      return ext_or(eval_direct(f->rhs, trace, index),
                    ext_and(eval_direct(f->lhs, trace, index),
                            at_next(spend(n, NextKind::strong), rest, trace, index)));
    }
    case K::release: {
      std::uint32_t n = f->subscript;
      FormulaPtr rest = fm::release(n > 0 ? n - 1 : 0, f->lhs, f->rhs);
      return ext_and(eval_direct(f->rhs, trace, index),
                     ext_or(eval_direct(f->lhs, trace, index),
                            at_next(spend(n, NextKind::weak), rest, trace, index)));
    }
    case K::freeze: {
      Value v = eval_expr(*f->atom_expr, trace[index]);
      return eval_direct(substitute_binder(f->lhs, f->binder, v), trace, index);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace strom::oracle
