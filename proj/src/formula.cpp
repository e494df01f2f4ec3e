#include "strom/formula.hpp"

namespace strom {
namespace formula {

namespace {

FormulaPtr make(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

FormulaPtr unary(Formula::Kind k, FormulaPtr operand) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(operand);
  return f;
}

FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr subscripted(Formula::Kind k, std::uint32_t n, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->subscript = n;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

bool binds(const FormulaPtr& f, const std::string& name) {
  if (!f) return false;
  if (f->kind == Formula::Kind::freeze && f->binder == name) return true;
  return binds(f->lhs, name) || binds(f->rhs, name);
}

}  // namespace

FormulaPtr top() {
  static const FormulaPtr t = make(Formula::Kind::top);
  return t;
}

FormulaPtr bottom() {
  static const FormulaPtr b = make(Formula::Kind::bottom);
  return b;
}

FormulaPtr constant(bool b) { return b ? top() : bottom(); }

FormulaPtr atom(ExprPtr e) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::atom;
  f->atom_expr = std::move(e);
  return f;
}

FormulaPtr negation(FormulaPtr f) { return unary(Formula::Kind::negation, std::move(f)); }

FormulaPtr conjunction(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::conjunction, std::move(a), std::move(b));
}

FormulaPtr disjunction(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::disjunction, std::move(a), std::move(b));
}

FormulaPtr next_required(FormulaPtr f) {
  return unary(Formula::Kind::next_required, std::move(f));
}

FormulaPtr next_weak(FormulaPtr f) { return unary(Formula::Kind::next_weak, std::move(f)); }

FormulaPtr next_strong(FormulaPtr f) {
  return unary(Formula::Kind::next_strong, std::move(f));
}

FormulaPtr always(std::uint32_t n, FormulaPtr f) {
  return subscripted(Formula::Kind::always, n, std::move(f), nullptr);
}

FormulaPtr eventually(std::uint32_t n, FormulaPtr f) {
  return subscripted(Formula::Kind::eventually, n, std::move(f), nullptr);
}

FormulaPtr until(std::uint32_t n, FormulaPtr lhs, FormulaPtr rhs) {
  return subscripted(Formula::Kind::until, n, std::move(lhs), std::move(rhs));
}

FormulaPtr release(std::uint32_t n, FormulaPtr lhs, FormulaPtr rhs) {
  return subscripted(Formula::Kind::release, n, std::move(lhs), std::move(rhs));
}

FormulaPtr freeze(std::string binder, ExprPtr bound, FormulaPtr body) {
  std::string name = binder;
  while (binds(body, name)) name += "'";
  if (name != binder) {
    // Rename occurrences of the old name in the body to the fresh one before
    // an inner freeze of the same name can capture them. Occurrences inside
    // the inner freeze belong to it and must not be touched; substitute_binder
    // already stops there.
    struct Renamer {
      static ExprPtr rename_expr(const ExprPtr& e, const std::string& from,
                                 const std::string& to) {
        if (e->kind == Expr::Kind::variable) {
          return e->name == from ? expr::variable(to) : e;
        }
        if (e->kind == Expr::Kind::builtin_call) {
          std::vector<ExprPtr> args;
          for (const ExprPtr& a : e->args) args.push_back(rename_expr(a, from, to));
          return expr::builtin_call(e->name, std::move(args));
        }
        if (e->kind == Expr::Kind::binary) {
          return expr::binary(e->op, rename_expr(e->lhs, from, to),
                              rename_expr(e->rhs, from, to));
        }
        if (e->kind == Expr::Kind::if_expr) {
          return expr::if_expr(rename_expr(e->cond, from, to),
                               rename_expr(e->then_branch, from, to),
                               rename_expr(e->else_branch, from, to));
        }
        return e;
      }
      static FormulaPtr rename(const FormulaPtr& f, const std::string& from,
                               const std::string& to) {
        if (!f) return f;
        if (f->kind == Formula::Kind::freeze && f->binder == from) return f;
        auto g = std::make_shared<Formula>(*f);
        if (g->atom_expr) g->atom_expr = rename_expr(g->atom_expr, from, to);
        g->lhs = rename(f->lhs, from, to);
        g->rhs = rename(f->rhs, from, to);
        return g;
      }
    };
    body = Renamer::rename(body, binder, name);
  }
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::freeze;
  f->binder = std::move(name);
  f->atom_expr = std::move(bound);
  f->lhs = std::move(body);
  return f;
}

}  // namespace formula

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->subscript != b->subscript || a->binder != b->binder) {
    return false;
  }
  if ((a->atom_expr == nullptr) != (b->atom_expr == nullptr)) return false;
  if (a->atom_expr && !expr_equal(*a->atom_expr, *b->atom_expr)) return false;
  return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
}

namespace {

std::size_t node_count_memo(const Formula* f,
                            std::unordered_map<const Formula*, std::size_t>& memo) {
  if (f == nullptr) return 0;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  std::size_t n = 1 + node_count_memo(f->lhs.get(), memo) + node_count_memo(f->rhs.get(), memo);
  memo.emplace(f, n);
  return n;
}

}  // namespace

std::size_t node_count(const FormulaPtr& f) {
  std::unordered_map<const Formula*, std::size_t> memo;
  return node_count_memo(f.get(), memo);
}

FormulaPtr substitute_binder(const FormulaPtr& f, const std::string& name, const Value& v) {
  if (!f) return f;
  if (f->kind == Formula::Kind::freeze && f->binder == name) return f;
  FormulaPtr lhs = substitute_binder(f->lhs, name, v);
  FormulaPtr rhs = substitute_binder(f->rhs, name, v);
  ExprPtr e = f->atom_expr ? substitute_var(f->atom_expr, name, v) : nullptr;
  if (lhs == f->lhs && rhs == f->rhs && e == f->atom_expr) return f;
  auto g = std::make_shared<Formula>(*f);
  g->lhs = std::move(lhs);
  g->rhs = std::move(rhs);
  g->atom_expr = std::move(e);
  return g;
}

std::string Formula::to_string() const {
  switch (kind) {
    case Kind::top: return "true";
    case Kind::bottom: return "false";
    case Kind::atom: return atom_expr->to_string();
    case Kind::negation: return "not " + lhs->to_string();
    case Kind::conjunction: return "(" + lhs->to_string() + " && " + rhs->to_string() + ")";
    case Kind::disjunction: return "(" + lhs->to_string() + " || " + rhs->to_string() + ")";
    case Kind::next_required: return "next " + lhs->to_string();
    case Kind::next_weak: return "nextW " + lhs->to_string();
    case Kind::next_strong: return "nextS " + lhs->to_string();
    case Kind::always:
      return "always_" + std::to_string(subscript) + " " + lhs->to_string();
    case Kind::eventually:
      return "eventually_" + std::to_string(subscript) + " " + lhs->to_string();
    case Kind::until:
      return "(" + lhs->to_string() + " until_" + std::to_string(subscript) + " " +
             rhs->to_string() + ")";
    case Kind::release:
      return "(" + lhs->to_string() + " release_" + std::to_string(subscript) + " " +
             rhs->to_string() + ")";
    case Kind::freeze:
      return "(let " + binder + " = " + atom_expr->to_string() + "; " + lhs->to_string() + ")";
  }
  return "?";
}

}  // namespace strom
