#include "strom/elaborate.hpp"

#include <stdexcept>

namespace strom {

namespace {

bool has_free_vars(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
    case Expr::Kind::selector_field:
      return false;
    case Expr::Kind::variable:
      return e.name != "happened";
    case Expr::Kind::builtin_call:
      for (const ExprPtr& a : e.args) {
        if (has_free_vars(*a)) return true;
      }
      return false;
    case Expr::Kind::binary:
      return has_free_vars(*e.lhs) || has_free_vars(*e.rhs);
    case Expr::Kind::if_expr:
      return has_free_vars(*e.cond) || has_free_vars(*e.then_branch) ||
             has_free_vars(*e.else_branch);
  }
  return false;
}

bool is_builtin(const std::string& name) {
  return name == "parseInt" || name == "parseFloat" || name == "length" ||
         name == "toString";
}

struct Scope;

struct Entry {
  enum class Kind { lazy, constant, alias, freeze_var, function };
  Kind kind;
  SExprPtr sexpr;                 // lazy
  const Scope* closure = nullptr; // lazy, function
  Value value;                    // constant
  ExprPtr core;                   // alias: already-elaborated state-free expr
  std::string binder;             // freeze_var
  const LetDecl* fn = nullptr;    // function
};

struct Scope {
  const Scope* parent = nullptr;
  std::map<std::string, Entry> entries;

  const Entry* find(const std::string& name) const {
    for (const Scope* s = this; s; s = s->parent) {
      auto it = s->entries.find(name);
      if (it != s->entries.end()) return &it->second;
    }
    return nullptr;
  }
};

class Elaborator {
public:
  Elaborator(const Program& program, std::uint32_t default_subscript)
      : program_(program), default_subscript_(default_subscript) {
    binding_budget_ = count_bindings();
  }

  ElaboratedSpec run() {
    process_toplevels();
    ElaboratedSpec out;
    out.actions = actions_;
    out.events = events_;
    for (const CheckDecl* chk : checks_) {
      CheckConfig cfg;
      cfg.properties = chk->properties;
      cfg.default_subscript = default_subscript_;
      if (chk->with_actions) {
        for (const std::string& name : *chk->with_actions) {
          if (name != "loaded?" && !actions_.count(name) && !events_.count(name)) {
            throw ElaborationError(ElaborationErrorKind::unknown_check_target, chk->loc,
                                   "'" + name + "' is not a declared action or event");
          }
        }
        cfg.with = chk->with_actions;
      }
      for (const std::string& prop : chk->properties) {
        if (!out.properties.count(prop)) {
          out.properties[prop] = property_formula(prop, chk->loc);
        }
      }
      out.checks.push_back(std::move(cfg));
    }
    return out;
  }

  FormulaPtr single_property(const std::string& name) {
    process_toplevels();
    return property_formula(name, SourceLoc{});
  }

  ExprPtr pure_expr(const SExpr& e) {
    process_toplevels();
    return elab_expr(e, top_);
  }

private:
  std::size_t count_bindings() const {
    struct Walk {
      static std::size_t lets(const SExprPtr& e) {
        if (!e) return 0;
        std::size_t n = e->kind == SExpr::Kind::let_in ? 1 : 0;
        n += lets(e->lhs) + lets(e->rhs) + lets(e->cond) + lets(e->then_e) + lets(e->else_e) +
             lets(e->operand);
        for (const SExprPtr& a : e->args) n += lets(a);
        return n;
      }
    };
    std::size_t n = 0;
    for (const TopLevel& tl : program_) {
      if (const auto* let = std::get_if<LetDecl>(&tl)) {
        n += 1 + let->params.size() + Walk::lets(let->body);
      }
    }
    return n + 1;
  }

  void process_toplevels() {
    if (processed_) return;
    processed_ = true;
    for (const TopLevel& tl : program_) {
      if (const auto* let = std::get_if<LetDecl>(&tl)) {
        Entry e;
        if (let->has_params) {
          e.kind = Entry::Kind::function;
          e.fn = let;
          e.closure = &top_;
        } else if (let->lazy) {
          e.kind = Entry::Kind::lazy;
          e.sexpr = let->body;
          e.closure = &top_;
        } else {
          ExprPtr core = elab_expr(*let->body, top_);
          if (touches_state(*core)) {
            throw ElaborationError(
                ElaborationErrorKind::state_access_outside_temporal_context, let->loc,
                "eager top-level binding '" + let->name +
                    "' reads state; mark it lazy with ~ or move it under a temporal operator");
          }
          e.kind = Entry::Kind::constant;
          e.value = eval_expr(*core, EvalContext{});
        }
        top_.entries[let->name] = std::move(e);
      } else if (const auto* act = std::get_if<ActionDecl>(&tl)) {
        ElaboratedAction a;
        a.name = act->name;
        a.is_event = act->kind == ActionKind::event;
        a.primitive.id = act->primitive.substr(0, act->primitive.size() - 1);
        for (const SExprPtr& arg : act->primitive_args) {
          ExprPtr core = elab_expr(*arg, top_);
          if (touches_state(*core) || has_free_vars(*core)) {
            throw ElaborationError(
                ElaborationErrorKind::state_access_outside_temporal_context, arg->loc,
                "primitive arguments must be constants");
          }
          a.primitive.args.push_back(eval_expr(*core, EvalContext{}));
        }
        if (act->guard) a.guard = elab_expr(*act->guard, top_);
        a.timeout_ms = act->timeout_ms;
        (a.is_event ? events_ : actions_)[a.name] = std::move(a);
      } else {
        checks_.push_back(&std::get<CheckDecl>(tl));
      }
    }
  }

  FormulaPtr property_formula(const std::string& name, SourceLoc loc) {
    const Entry* e = top_.find(name);
    if (!e || e->kind == Entry::Kind::function) {
      throw ElaborationError(ElaborationErrorKind::unknown_check_target, loc,
                             "'" + name + "' is not a checkable property");
    }
    if (e->kind == Entry::Kind::constant) {
      if (e->value.is_bool()) return formula::constant(e->value.as_bool());
      return formula::atom(expr::literal(e->value));
    }
    return elab_formula(*e->sexpr, *e->closure, false);
  }

  std::uint32_t sub_of(const SExpr& e) const {
    return e.subscript ? *e.subscript : default_subscript_;
  }

  struct DepthGuard {
    explicit DepthGuard(Elaborator& el, SourceLoc loc) : el_(el) {
      if (++el_.depth_ > el_.binding_budget_) {
        throw ElaborationError(ElaborationErrorKind::unknown_check_target, loc,
                               "inlining depth exceeded the binding count; "
                               "this should be impossible for typechecked programs");
      }
    }
    ~DepthGuard() { --el_.depth_; }
    Elaborator& el_;
  };

  // --- expression position -------------------------------------------------

  ExprPtr elab_expr(const SExpr& e, const Scope& sc) {
    switch (e.kind) {
      case SExpr::Kind::lit_number: return expr::literal(Value(e.number));
      case SExpr::Kind::lit_string: return expr::literal(Value(e.str));
      case SExpr::Kind::lit_bool: return expr::literal(Value(e.boolean));
      case SExpr::Kind::lit_null: return expr::literal(Value(nullptr));
      case SExpr::Kind::selector: return expr::literal(Value(e.name));
      case SExpr::Kind::selector_field: return expr::selector_field(e.name, e.field);
      case SExpr::Kind::action_name: return expr::literal(Value(e.name));
      case SExpr::Kind::var: {
        const Entry* entry = sc.find(e.name);
        if (!entry) {
          if (e.name == "happened") return expr::variable("happened");
          throw TypeError(TypeErrorKind::unbound_name, e.loc, "unbound name '" + e.name + "'");
        }
        switch (entry->kind) {
          case Entry::Kind::lazy: {
            DepthGuard guard(*this, e.loc);
            return elab_expr(*entry->sexpr, *entry->closure);
          }
          case Entry::Kind::constant: return expr::literal(entry->value);
          case Entry::Kind::alias: return entry->core;
          case Entry::Kind::freeze_var: return expr::variable(entry->binder);
          default:
            throw std::logic_error("elaborate: function '" + e.name + "' used as a value");
        }
      }
      case SExpr::Kind::call: {
        if (is_builtin(e.name)) {
          std::vector<ExprPtr> args;
          for (const SExprPtr& a : e.args) args.push_back(elab_expr(*a, sc));
          return expr::builtin_call(e.name, std::move(args));
        }
        const Entry* entry = sc.find(e.name);
        if (!entry || entry->kind != Entry::Kind::function) {
          throw TypeError(TypeErrorKind::unbound_name, e.loc,
                          "'" + e.name + "' is not a known function");
        }
        DepthGuard guard(*this, e.loc);
        // Inside a pure expression an eager parameter is indistinguishable
        // from a lazy one (there is no temporal boundary to cross), so all
        // parameters substitute syntactically.
        Scope body_scope;
        body_scope.parent = entry->closure;
        for (std::size_t i = 0; i < entry->fn->params.size(); ++i) {
          Entry p;
          p.kind = Entry::Kind::lazy;
          p.sexpr = e.args[i];
          p.closure = &sc;
          body_scope.entries[entry->fn->params[i].name] = std::move(p);
        }
        return elab_expr(*entry->fn->body, body_scope);
      }
      case SExpr::Kind::array: {
        std::vector<ExprPtr> elems;
        bool all_const = true;
        for (const SExprPtr& a : e.args) {
          elems.push_back(elab_expr(*a, sc));
          all_const &= elems.back()->kind == Expr::Kind::literal;
        }
        if (all_const) {
          Value::Seq s;
          for (const ExprPtr& el : elems) s.push_back(el->literal);
          return expr::literal(Value(std::move(s)));
        }
        return expr::builtin_call("seq", std::move(elems));
      }
      case SExpr::Kind::binop:
        return expr::binary(e.op, elab_expr(*e.lhs, sc), elab_expr(*e.rhs, sc));
      case SExpr::Kind::and_op:
        return expr::if_expr(elab_expr(*e.lhs, sc), elab_expr(*e.rhs, sc),
                             expr::literal(Value(false)));
      case SExpr::Kind::or_op:
        return expr::if_expr(elab_expr(*e.lhs, sc), expr::literal(Value(true)),
                             elab_expr(*e.rhs, sc));
      case SExpr::Kind::implies:
        return expr::if_expr(elab_expr(*e.lhs, sc), elab_expr(*e.rhs, sc),
                             expr::literal(Value(true)));
      case SExpr::Kind::not_op:
        return expr::builtin_call("not", {elab_expr(*e.operand, sc)});
      case SExpr::Kind::if_expr:
        return expr::if_expr(elab_expr(*e.cond, sc), elab_expr(*e.then_e, sc),
                             elab_expr(*e.else_e, sc));
      case SExpr::Kind::let_in: {
        Scope child;
        child.parent = &sc;
        child.entries[e.name] = expr_binding_entry(e, sc);
        return elab_expr(*e.lhs, child);
      }
      default:
        throw ElaborationError(ElaborationErrorKind::temporal_in_expr_position, e.loc,
                               "temporal operator in expression position");
    }
  }

  // In expression position there is no freeze to build, but state-dependent
  // eager bindings are still sound as substitutions: binding-time and
  // use-time states coincide.
  Entry expr_binding_entry(const SExpr& let, const Scope& sc) {
    if (let.lazy) {
      Entry p;
      p.kind = Entry::Kind::lazy;
      p.sexpr = let.rhs;
      p.closure = &sc;
      return p;
    }
    ExprPtr core = elab_expr(*let.rhs, sc);
    if (touches_state(*core) || has_free_vars(*core)) {
      Entry p;
      p.kind = Entry::Kind::alias;
      p.core = std::move(core);
      return p;
    }
    Entry p;
    p.kind = Entry::Kind::constant;
    p.value = eval_expr(*core, EvalContext{});
    return p;
  }

  // --- formula position ----------------------------------------------------

  FormulaPtr elab_formula(const SExpr& e, const Scope& sc, bool in_temporal) {
    namespace fm = formula;
    switch (e.kind) {
      case SExpr::Kind::lit_bool: return fm::constant(e.boolean);
      case SExpr::Kind::and_op:
        return fm::conjunction(elab_formula(*e.lhs, sc, in_temporal),
                               elab_formula(*e.rhs, sc, in_temporal));
      case SExpr::Kind::or_op:
        return fm::disjunction(elab_formula(*e.lhs, sc, in_temporal),
                               elab_formula(*e.rhs, sc, in_temporal));
      case SExpr::Kind::implies:
        return fm::disjunction(fm::negation(elab_formula(*e.lhs, sc, in_temporal)),
                               elab_formula(*e.rhs, sc, in_temporal));
      case SExpr::Kind::not_op:
        return fm::negation(elab_formula(*e.operand, sc, in_temporal));
      case SExpr::Kind::t_always:
        return fm::always(sub_of(e), elab_formula(*e.operand, sc, true));
      case SExpr::Kind::t_eventually:
        return fm::eventually(sub_of(e), elab_formula(*e.operand, sc, true));
      case SExpr::Kind::t_until:
        return fm::until(sub_of(e), elab_formula(*e.lhs, sc, true),
                         elab_formula(*e.rhs, sc, true));
      case SExpr::Kind::t_release:
        return fm::release(sub_of(e), elab_formula(*e.lhs, sc, true),
                           elab_formula(*e.rhs, sc, true));
      case SExpr::Kind::t_next:
        return fm::next_required(elab_formula(*e.operand, sc, true));
      case SExpr::Kind::t_next_weak:
        return fm::next_weak(elab_formula(*e.operand, sc, true));
      case SExpr::Kind::t_next_strong:
        return fm::next_strong(elab_formula(*e.operand, sc, true));
      case SExpr::Kind::var: {
        const Entry* entry = sc.find(e.name);
        if (!entry) return fm::atom(elab_expr(e, sc));  // happened
        switch (entry->kind) {
          case Entry::Kind::lazy: {
            DepthGuard guard(*this, e.loc);
            return elab_formula(*entry->sexpr, *entry->closure, in_temporal);
          }
          case Entry::Kind::constant:
            if (entry->value.is_bool()) return fm::constant(entry->value.as_bool());
            return fm::atom(expr::literal(entry->value));
          case Entry::Kind::alias: return fm::atom(entry->core);
          case Entry::Kind::freeze_var: return fm::atom(expr::variable(entry->binder));
          default:
            throw std::logic_error("elaborate: function '" + e.name + "' used as a formula");
        }
      }
      case SExpr::Kind::call: {
        if (is_builtin(e.name)) return fm::atom(elab_expr(e, sc));
        const Entry* entry = sc.find(e.name);
        if (!entry || entry->kind != Entry::Kind::function) {
          throw std::logic_error("elaborate: '" + e.name + "' is not a function");
        }
        DepthGuard guard(*this, e.loc);
        Scope body_scope;
        body_scope.parent = entry->closure;
        std::vector<std::pair<std::string, ExprPtr>> freezes;
        for (std::size_t i = 0; i < entry->fn->params.size(); ++i) {
          const Param& param = entry->fn->params[i];
          if (param.lazy) {
            Entry p;
            p.kind = Entry::Kind::lazy;
            p.sexpr = e.args[i];
            p.closure = &sc;
            body_scope.entries[param.name] = std::move(p);
            continue;
          }
          ExprPtr core = elab_expr(*e.args[i], sc);
          if (!touches_state(*core)) {
            body_scope.entries[param.name] =
                has_free_vars(*core) ? make_alias(std::move(core)) : make_const(*core);
            continue;
          }
          if (!in_temporal) {
            throw ElaborationError(
                ElaborationErrorKind::state_access_outside_temporal_context, e.loc,
                "eager parameter '" + param.name +
                    "' captures state outside any temporal operator");
          }
          Entry p;
          p.kind = Entry::Kind::freeze_var;
          p.binder = param.name;
          body_scope.entries[param.name] = std::move(p);
          freezes.emplace_back(param.name, std::move(core));
        }
        FormulaPtr body = elab_formula(*entry->fn->body, body_scope, in_temporal);
        for (auto it = freezes.rbegin(); it != freezes.rend(); ++it) {
          body = fm::freeze(it->first, it->second, body);
        }
        return body;
      }
      case SExpr::Kind::let_in: {
        Scope child;
        child.parent = &sc;
        if (e.lazy) {
          Entry p;
          p.kind = Entry::Kind::lazy;
          p.sexpr = e.rhs;
          p.closure = &sc;
          child.entries[e.name] = std::move(p);
          return elab_formula(*e.lhs, child, in_temporal);
        }
        ExprPtr core = elab_expr(*e.rhs, sc);
        if (!touches_state(*core)) {
          child.entries[e.name] =
              has_free_vars(*core) ? make_alias(std::move(core)) : make_const(*core);
          return elab_formula(*e.lhs, child, in_temporal);
        }
        if (!in_temporal) {
          throw ElaborationError(
              ElaborationErrorKind::state_access_outside_temporal_context, e.loc,
              "eager binding '" + e.name + "' reads state outside any temporal operator");
        }
        Entry p;
        p.kind = Entry::Kind::freeze_var;
        p.binder = e.name;
        child.entries[e.name] = std::move(p);
        FormulaPtr body = elab_formula(*e.lhs, child, in_temporal);
        return fm::freeze(e.name, core, body);
      }
      case SExpr::Kind::if_expr: {
        // A conditional with plain branches is a single atom; one whose
        // branches need formula structure splits on the condition.
        try {
          return fm::atom(elab_expr(e, sc));
        } catch (const ElaborationError& err) {
          if (err.kind != ElaborationErrorKind::temporal_in_expr_position &&
              err.kind != ElaborationErrorKind::state_access_outside_temporal_context) {
            throw;
          }
        }
        FormulaPtr cond = elab_formula(*e.cond, sc, in_temporal);
        FormulaPtr then_f = elab_formula(*e.then_e, sc, in_temporal);
        FormulaPtr else_f = elab_formula(*e.else_e, sc, in_temporal);
        return fm::disjunction(fm::conjunction(cond, then_f),
                               fm::conjunction(fm::negation(cond), else_f));
      }
      default:
        return fm::atom(elab_expr(e, sc));
    }
  }

  static Entry make_alias(ExprPtr core) {
    Entry p;
    p.kind = Entry::Kind::alias;
    p.core = std::move(core);
    return p;
  }

  static Entry make_const(const Expr& core) {
    Entry p;
    p.kind = Entry::Kind::constant;
    p.value = eval_expr(core, EvalContext{});
    return p;
  }

  const Program& program_;
  std::uint32_t default_subscript_;
  Scope top_;
  std::map<std::string, ElaboratedAction> actions_;
  std::map<std::string, ElaboratedAction> events_;
  std::vector<const CheckDecl*> checks_;
  bool processed_ = false;
  std::size_t depth_ = 0;
  std::size_t binding_budget_ = 0;
};

void collect_formula_fields(const FormulaPtr& f, std::vector<std::string>& out) {
  if (!f) return;
  if (f->atom_expr) collect_fields(*f->atom_expr, out);
  collect_formula_fields(f->lhs, out);
  collect_formula_fields(f->rhs, out);
}

}  // namespace

ElaboratedSpec elaborate(const Program& program, std::uint32_t default_subscript) {
  return Elaborator(program, default_subscript).run();
}

ExprPtr elaborate_pure_expr(const SExpr& e) {
  static const Program empty;
  return Elaborator(empty, 0).pure_expr(e);
}

FormulaPtr elaborate_property(const Program& program, const std::string& name,
                              std::uint32_t default_subscript) {
  return Elaborator(program, default_subscript).single_property(name);
}

std::set<std::string> analyze_deps(const ElaboratedSpec& spec, const CheckConfig& check) {
  std::vector<std::string> fields;
  for (const std::string& prop : check.properties) {
    auto it = spec.properties.find(prop);
    if (it != spec.properties.end()) collect_formula_fields(it->second, fields);
  }
  auto consider = [&](const ElaboratedAction& a) {
    if (a.guard) collect_fields(*a.guard, fields);
  };
  if (check.with) {
    for (const std::string& name : *check.with) {
      auto a = spec.actions.find(name);
      if (a != spec.actions.end()) consider(a->second);
      auto ev = spec.events.find(name);
      if (ev != spec.events.end()) consider(ev->second);
    }
  } else {
    for (const auto& [name, a] : spec.actions) consider(a);
    for (const auto& [name, ev] : spec.events) consider(ev);
  }
  return std::set<std::string>(fields.begin(), fields.end());
}

}  // namespace strom
