#include "strom/expr.hpp"

#include <cmath>
#include <cstdlib>

#include "strom/errors.hpp"

namespace strom {

const char* to_string(BinOp op) {
  switch (op) {
    case BinOp::eq: return "==";
    case BinOp::ne: return "!=";
    case BinOp::lt: return "<";
    case BinOp::le: return "<=";
    case BinOp::gt: return ">";
    case BinOp::ge: return ">=";
    case BinOp::add: return "+";
    case BinOp::sub: return "-";
    case BinOp::mul: return "*";
    case BinOp::div: return "/";
    default: return "in";
  }
}

namespace expr {

ExprPtr literal(Value v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::literal;
  e->literal = std::move(v);
  return e;
}

ExprPtr selector_field(std::string selector, std::string field) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::selector_field;
  e->selector = std::move(selector);
  e->field = std::move(field);
  return e;
}

ExprPtr variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::variable;
  e->name = std::move(name);
  return e;
}

ExprPtr builtin_call(std::string name, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::builtin_call;
  e->name = std::move(name);
  e->args = std::move(args);
  return e;
}

ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr if_expr(ExprPtr cond, ExprPtr then_branch, ExprPtr else_branch) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::if_expr;
  e->cond = std::move(cond);
  e->then_branch = std::move(then_branch);
  e->else_branch = std::move(else_branch);
  return e;
}

}  // namespace expr

namespace {

double require_number(const Value& v, const char* where) {
  if (!v.is_number()) {
    throw EvalError(std::string(where) + " expects a number, got " + v.type_name());
  }
  return v.as_number();
}

Value eval_builtin(const std::string& name, const std::vector<Value>& args) {
  if (name == "not") {
    if (!args[0].is_bool()) {
      throw EvalError("not expects a boolean, got " + std::string(args[0].type_name()));
    }
    return Value(!args[0].as_bool());
  }
  if (name == "parseInt" || name == "parseFloat") {
    const Value& a = args[0];
    if (a.is_number()) {
      double n = a.as_number();
      return Value(name == "parseInt" ? std::trunc(n) : n);
    }
    if (!a.is_string()) {
      throw EvalError(name + " expects a string, got " + std::string(a.type_name()));
    }
    const std::string& s = a.as_string();
    char* end = nullptr;
    double n = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw EvalError(name + ": cannot parse \"" + s + "\"");
    return Value(name == "parseInt" ? std::trunc(n) : n);
  }
  if (name == "length") {
    const Value& a = args[0];
    if (a.is_string()) return Value(static_cast<double>(a.as_string().size()));
    if (a.is_seq()) return Value(static_cast<double>(a.as_seq().size()));
    if (a.is_map()) return Value(static_cast<double>(a.as_map().size()));
    throw EvalError("length expects a string, sequence, or map");
  }
  if (name == "toString") {
    const Value& a = args[0];
    if (a.is_string()) return a;
    if (a.is_number()) return Value(number_to_string(a.as_number()));
    if (a.is_bool()) return Value(std::string(a.as_bool() ? "true" : "false"));
    return Value(a.to_display());
  }
  if (name == "seq") return Value(Value::Seq(args.begin(), args.end()));
  throw EvalError("unknown builtin: " + name);
}

}  // namespace

Value eval_expr(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.literal;
    case Expr::Kind::selector_field: {
      const std::string key = e.field_key();
      if (ctx.state == nullptr) throw UnknownFieldError(key);
      auto it = ctx.state->fields.find(key);
      if (it == ctx.state->fields.end()) throw UnknownFieldError(key);
      if (ctx.observer && *ctx.observer) (*ctx.observer)(key);
      return it->second;
    }
    case Expr::Kind::variable: {
      if (e.name == "happened") {
        if (ctx.state == nullptr) throw UnknownFieldError("happened");
        Value::Seq s;
        for (const std::string& h : ctx.state->happened) s.push_back(Value(h));
        return Value(std::move(s));
      }
      throw EvalError("unbound variable: " + e.name);
    }
    case Expr::Kind::builtin_call: {
      std::vector<Value> args;
      args.reserve(e.args.size());
      for (const ExprPtr& a : e.args) args.push_back(eval_expr(*a, ctx));
      return eval_builtin(e.name, args);
    }
    case Expr::Kind::binary: {
      Value l = eval_expr(*e.lhs, ctx);
      Value r = eval_expr(*e.rhs, ctx);
      switch (e.op) {
        case BinOp::eq: return Value(l == r);
        case BinOp::ne: return Value(l != r);
        case BinOp::lt: return Value(require_number(l, "<") < require_number(r, "<"));
        case BinOp::le: return Value(require_number(l, "<=") <= require_number(r, "<="));
        case BinOp::gt: return Value(require_number(l, ">") > require_number(r, ">"));
        case BinOp::ge: return Value(require_number(l, ">=") >= require_number(r, ">="));
        case BinOp::add: return Value(require_number(l, "+") + require_number(r, "+"));
        case BinOp::sub: return Value(require_number(l, "-") - require_number(r, "-"));
        case BinOp::mul: return Value(require_number(l, "*") * require_number(r, "*"));
        case BinOp::div: {
          double d = require_number(r, "/");
          if (d == 0.0) throw EvalError("division by zero");
          return Value(require_number(l, "/") / d);
        }
        case BinOp::in: {
          if (!r.is_seq()) {
            throw EvalError("in expects a sequence on the right, got " +
                            std::string(r.type_name()));
          }
          for (const Value& v : r.as_seq()) {
            if (v == l) return Value(true);
          }
          return Value(false);
        }
      }
      throw EvalError("unreachable binop");
    }
    case Expr::Kind::if_expr: {
      Value c = eval_expr(*e.cond, ctx);
      if (!c.is_bool()) {
        throw EvalError("if condition must be a boolean, got " + std::string(c.type_name()));
      }
      return eval_expr(c.as_bool() ? *e.then_branch : *e.else_branch, ctx);
    }
  }
  throw EvalError("unreachable expression kind");
}

Value eval_expr(const Expr& e, const State& state) {
  EvalContext ctx;
  ctx.state = &state;
  return eval_expr(e, ctx);
}

ExprPtr substitute_var(const ExprPtr& e, const std::string& name, const Value& v) {
  switch (e->kind) {
    case Expr::Kind::literal:
    case Expr::Kind::selector_field:
      return e;
    case Expr::Kind::variable:
      return e->name == name ? expr::literal(v) : e;
    case Expr::Kind::builtin_call: {
      std::vector<ExprPtr> args;
      args.reserve(e->args.size());
      bool changed = false;
      for (const ExprPtr& a : e->args) {
        ExprPtr s = substitute_var(a, name, v);
        changed |= (s != a);
        args.push_back(std::move(s));
      }
      return changed ? expr::builtin_call(e->name, std::move(args)) : e;
    }
    case Expr::Kind::binary: {
      ExprPtr l = substitute_var(e->lhs, name, v);
      ExprPtr r = substitute_var(e->rhs, name, v);
      return (l == e->lhs && r == e->rhs) ? e : expr::binary(e->op, std::move(l), std::move(r));
    }
    case Expr::Kind::if_expr: {
      ExprPtr c = substitute_var(e->cond, name, v);
      ExprPtr t = substitute_var(e->then_branch, name, v);
      ExprPtr f = substitute_var(e->else_branch, name, v);
      if (c == e->cond && t == e->then_branch && f == e->else_branch) return e;
      return expr::if_expr(std::move(c), std::move(t), std::move(f));
    }
  }
  return e;
}

bool touches_state(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return false;
    case Expr::Kind::selector_field:
      return true;
    case Expr::Kind::variable:
      return e.name == "happened";
    case Expr::Kind::builtin_call:
      for (const ExprPtr& a : e.args) {
        if (touches_state(*a)) return true;
      }
      return false;
    case Expr::Kind::binary:
      return touches_state(*e.lhs) || touches_state(*e.rhs);
    case Expr::Kind::if_expr:
      return touches_state(*e.cond) || touches_state(*e.then_branch) ||
             touches_state(*e.else_branch);
  }
  return false;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::literal:
      return a.literal == b.literal;
    case Expr::Kind::selector_field:
      return a.selector == b.selector && a.field == b.field;
    case Expr::Kind::variable:
      return a.name == b.name;
    case Expr::Kind::builtin_call: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
      }
      return true;
    }
    case Expr::Kind::binary:
      return a.op == b.op && expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    case Expr::Kind::if_expr:
      return expr_equal(*a.cond, *b.cond) && expr_equal(*a.then_branch, *b.then_branch) &&
             expr_equal(*a.else_branch, *b.else_branch);
  }
  return false;
}

void collect_fields(const Expr& e, std::vector<std::string>& out) {
  switch (e.kind) {
    case Expr::Kind::literal:
    case Expr::Kind::variable:
      return;
    case Expr::Kind::selector_field:
      out.push_back(e.field_key());
      return;
    case Expr::Kind::builtin_call:
      for (const ExprPtr& a : e.args) collect_fields(*a, out);
      return;
    case Expr::Kind::binary:
      collect_fields(*e.lhs, out);
      collect_fields(*e.rhs, out);
      return;
    case Expr::Kind::if_expr:
      collect_fields(*e.cond, out);
      collect_fields(*e.then_branch, out);
      collect_fields(*e.else_branch, out);
      return;
  }
}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::literal:
      return literal.to_display();
    case Kind::selector_field:
      return "`" + selector + "`." + field;
    case Kind::variable:
      return name;
    case Kind::builtin_call: {
      std::string s = name + "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ", ";
        s += args[i]->to_string();
      }
      return s + ")";
    }
    case Kind::binary:
      return "(" + lhs->to_string() + " " + strom::to_string(op) + " " + rhs->to_string() + ")";
    case Kind::if_expr:
      return "if " + cond->to_string() + " { " + then_branch->to_string() + " } else { " +
             else_branch->to_string() + " }";
  }
  return "?";
}

}  // namespace strom
