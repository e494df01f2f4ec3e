#include "strom/progression.hpp"

#include <stdexcept>

#include "strom/errors.hpp"

namespace strom {

namespace guarded {

namespace {
GuardedPtr combine(GuardedFormula::Kind k, GuardedPtr a, GuardedPtr b) {
  auto g = std::make_shared<GuardedFormula>();
  g->kind = k;
  g->lhs = std::move(a);
  g->rhs = std::move(b);
  return g;
}

GuardedPtr leaf(GuardedFormula::Kind k, FormulaPtr body) {
  auto g = std::make_shared<GuardedFormula>();
  g->kind = k;
  g->body = std::move(body);
  return g;
}
}  // namespace

GuardedPtr g_and(GuardedPtr a, GuardedPtr b) {
  return combine(GuardedFormula::Kind::g_and, std::move(a), std::move(b));
}
GuardedPtr g_or(GuardedPtr a, GuardedPtr b) {
  return combine(GuardedFormula::Kind::g_or, std::move(a), std::move(b));
}
GuardedPtr g_next_required(FormulaPtr body) {
  return leaf(GuardedFormula::Kind::g_next_required, std::move(body));
}
GuardedPtr g_next_weak(FormulaPtr body) {
  return leaf(GuardedFormula::Kind::g_next_weak, std::move(body));
}
GuardedPtr g_next_strong(FormulaPtr body) {
  return leaf(GuardedFormula::Kind::g_next_strong, std::move(body));
}

}  // namespace guarded

bool guarded_equal(const GuardedPtr& a, const GuardedPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->body || b->body) return formula_equal(a->body, b->body);
  return guarded_equal(a->lhs, b->lhs) && guarded_equal(a->rhs, b->rhs);
}

bool has_required_next(const GuardedFormula& f) {
  switch (f.kind) {
    case GuardedFormula::Kind::g_next_required: return true;
    case GuardedFormula::Kind::g_next_weak:
    case GuardedFormula::Kind::g_next_strong: return false;
    default: return has_required_next(*f.lhs) || has_required_next(*f.rhs);
  }
}

std::size_t guard_count(const GuardedFormula& f) {
  switch (f.kind) {
    case GuardedFormula::Kind::g_and:
    case GuardedFormula::Kind::g_or:
      return guard_count(*f.lhs) + guard_count(*f.rhs);
    default:
      return 1;
  }
}

FormulaPtr guarded_to_formula(const GuardedFormula& f) {
  switch (f.kind) {
    case GuardedFormula::Kind::g_and:
      return formula::conjunction(guarded_to_formula(*f.lhs), guarded_to_formula(*f.rhs));
    case GuardedFormula::Kind::g_or:
      return formula::disjunction(guarded_to_formula(*f.lhs), guarded_to_formula(*f.rhs));
    case GuardedFormula::Kind::g_next_required:
      return formula::next_required(f.body);
    case GuardedFormula::Kind::g_next_weak:
      return formula::next_weak(f.body);
    default:
      return formula::next_strong(f.body);
  }
}

std::string GuardedFormula::to_string() const {
  switch (kind) {
    case Kind::g_and: return "(" + lhs->to_string() + " && " + rhs->to_string() + ")";
    case Kind::g_or: return "(" + lhs->to_string() + " || " + rhs->to_string() + ")";
    case Kind::g_next_required: return "next " + body->to_string();
    case Kind::g_next_weak: return "nextW " + body->to_string();
    default: return "nextS " + body->to_string();
  }
}

// ---------------------------------------------------------------------------
// Unrolling

FormulaPtr unroll(const FormulaPtr& f, const State& state, const FieldReadObserver* observer) {
  using K = Formula::Kind;
  namespace fm = formula;
  switch (f->kind) {
    case K::top:
    case K::bottom:
      return f;
    case K::atom: {
      EvalContext ctx;
      ctx.state = &state;
      ctx.observer = observer;
      Value v = eval_expr(*f->atom_expr, ctx);
      if (!v.is_bool()) throw AtomNotBooleanError(v.to_display());
      return fm::constant(v.as_bool());
    }
    case K::negation:
      return fm::negation(unroll(f->lhs, state, observer));
    case K::conjunction:
      return fm::conjunction(unroll(f->lhs, state, observer), unroll(f->rhs, state, observer));
    case K::disjunction:
      return fm::disjunction(unroll(f->lhs, state, observer), unroll(f->rhs, state, observer));
    case K::next_required:
    case K::next_weak:
    case K::next_strong:
      return f;
    case K::always: {
      FormulaPtr body = unroll(f->lhs, state, observer);
      if (f->subscript > 0) {
        return fm::conjunction(body, fm::next_required(fm::always(f->subscript - 1, f->lhs)));
      }
      return fm::conjunction(body, fm::next_weak(f));
    }
    case K::eventually: {
      FormulaPtr body = unroll(f->lhs, state, observer);
      if (f->subscript > 0) {
        return fm::disjunction(body, fm::next_required(fm::eventually(f->subscript - 1, f->lhs)));
      }
      return fm::disjunction(body, fm::next_strong(f));
    }
    case K::until: {
      FormulaPtr l = unroll(f->lhs, state, observer);
      FormulaPtr r = unroll(f->rhs, state, observer);
      FormulaPtr rest = f->subscript > 0
                            ? fm::next_required(fm::until(f->subscript - 1, f->lhs, f->rhs))
                            : fm::next_strong(f);
      return fm::disjunction(r, fm::conjunction(l, rest));
    }
    case K::release: {
      FormulaPtr l = unroll(f->lhs, state, observer);
      FormulaPtr r = unroll(f->rhs, state, observer);
      FormulaPtr rest = f->subscript > 0
                            ? fm::next_required(fm::release(f->subscript - 1, f->lhs, f->rhs))
                            : fm::next_weak(f);
      return fm::conjunction(r, fm::disjunction(l, rest));
    }
    case K::freeze: {
      EvalContext ctx;
      ctx.state = &state;
      ctx.observer = observer;
      Value v = eval_expr(*f->atom_expr, ctx);
      return unroll(substitute_binder(f->lhs, f->binder, v), state, observer);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

namespace fm = formula;

FormulaPtr fold_and(FormulaPtr a, FormulaPtr b) {
  if (a->kind == Formula::Kind::bottom || b->kind == Formula::Kind::top) return a;
  if (b->kind == Formula::Kind::bottom || a->kind == Formula::Kind::top) return b;
  return fm::conjunction(std::move(a), std::move(b));
}

FormulaPtr fold_or(FormulaPtr a, FormulaPtr b) {
  if (a->kind == Formula::Kind::top || b->kind == Formula::Kind::bottom) return a;
  if (b->kind == Formula::Kind::top || a->kind == Formula::Kind::bottom) return b;
  return fm::disjunction(std::move(a), std::move(b));
}

FormulaPtr norm(const FormulaPtr& f);

// Normalized form of ¬f. Negation moves inward: De Morgan over and/or,
// duals over the temporal operators and the weak/strong nexts, required
// next is self-dual, and double negations cancel. Only atoms keep their
// negation node.
FormulaPtr push_negation(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::top: return fm::bottom();
    case K::bottom: return fm::top();
    case K::atom: return fm::negation(f);
    case K::negation: return norm(f->lhs);
    case K::conjunction: return fold_or(push_negation(f->lhs), push_negation(f->rhs));
    case K::disjunction: return fold_and(push_negation(f->lhs), push_negation(f->rhs));
    case K::next_required: return fm::next_required(push_negation(f->lhs));
    case K::next_weak: return fm::next_strong(push_negation(f->lhs));
    case K::next_strong: return fm::next_weak(push_negation(f->lhs));
    case K::always: return fm::eventually(f->subscript, push_negation(f->lhs));
    case K::eventually: return fm::always(f->subscript, push_negation(f->lhs));
    case K::until:
      return fm::release(f->subscript, push_negation(f->lhs), push_negation(f->rhs));
    case K::release:
      return fm::until(f->subscript, push_negation(f->lhs), push_negation(f->rhs));
    case K::freeze:
      return fm::freeze(f->binder, f->atom_expr, push_negation(f->lhs));
  }
  throw std::logic_error("unreachable formula kind");
}

FormulaPtr norm(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::conjunction: return fold_and(norm(f->lhs), norm(f->rhs));
    case K::disjunction: return fold_or(norm(f->lhs), norm(f->rhs));
    case K::negation: return push_negation(f->lhs);
    default: return f;  // constants, guards, and guard payloads stay put
  }
}

GuardedPtr to_guarded(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::conjunction: return guarded::g_and(to_guarded(f->lhs), to_guarded(f->rhs));
    case K::disjunction: return guarded::g_or(to_guarded(f->lhs), to_guarded(f->rhs));
    case K::next_required: return guarded::g_next_required(f->lhs);
    case K::next_weak: return guarded::g_next_weak(f->lhs);
    case K::next_strong: return guarded::g_next_strong(f->lhs);
    default:
      throw std::logic_error("simplify: input was not an unrolled formula (found " +
                             f->to_string() + " outside a next guard)");
  }
}

}  // namespace

Simplified simplify(const FormulaPtr& f, const ProgressionLimits& limits) {
  FormulaPtr n = norm(f);
  std::size_t size = node_count(n);
  if (size > limits.max_nodes) throw FormulaBlowupError(size, limits.max_nodes);
  Simplified out;
  if (n->kind == Formula::Kind::top) {
    out.definitive = Verdict::definitely_true;
  } else if (n->kind == Formula::Kind::bottom) {
    out.definitive = Verdict::definitely_false;
  } else {
    out.guarded = to_guarded(n);
  }
  return out;
}

PresumptiveResult presumptive(const GuardedFormula& f) {
  if (has_required_next(f)) return PresumptiveResult{true, Verdict::presumably_true};

  struct Fold {
    static Verdict go(const GuardedFormula& g) {
      switch (g.kind) {
        case GuardedFormula::Kind::g_and: return meet(go(*g.lhs), go(*g.rhs));
        case GuardedFormula::Kind::g_or: return join(go(*g.lhs), go(*g.rhs));
        case GuardedFormula::Kind::g_next_weak: return Verdict::definitely_true;
        default: return Verdict::definitely_false;  // strong next
      }
    }
  };
  return PresumptiveResult{false, weaken(Fold::go(f))};
}

FormulaPtr step_forward(const GuardedFormula& f) {
  switch (f.kind) {
    case GuardedFormula::Kind::g_and:
      return formula::conjunction(step_forward(*f.lhs), step_forward(*f.rhs));
    case GuardedFormula::Kind::g_or:
      return formula::disjunction(step_forward(*f.lhs), step_forward(*f.rhs));
    default:
      return f.body;
  }
}

Outcome evaluate_trace(const FormulaPtr& f, std::span<const State> trace,
                       const ProgressionLimits& limits, const FieldReadObserver* observer) {
  if (trace.empty()) throw Error("evaluate_trace: trace must be non-empty");
  FormulaPtr current = f;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    Simplified s;
    try {
      s = simplify(unroll(current, trace[i], observer), limits);
    } catch (const TraceEvalError&) {
      throw;
    } catch (const Error& e) {
      throw TraceEvalError(i, e.what());
    }
    if (s.is_definitive()) {
      return Outcome{ExtVerdict(*s.definitive), i + 1, i};
    }
    if (i + 1 == trace.size()) {
      PresumptiveResult p = presumptive(*s.guarded);
      return Outcome{p.demands ? ExtVerdict::demands() : ExtVerdict(p.verdict), trace.size(),
                     std::nullopt};
    }
    current = step_forward(*s.guarded);
  }
  throw std::logic_error("unreachable");
}

}  // namespace strom
