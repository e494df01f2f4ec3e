#include "strom/typecheck.hpp"

#include <map>
#include <set>

namespace strom {

namespace {

struct Type {
  bool is_function = false;
  std::size_t arity = 0;
};

const std::map<std::string, std::size_t>& builtin_arities() {
  static const std::map<std::string, std::size_t> b = {
      {"parseInt", 1}, {"parseFloat", 1}, {"length", 1}, {"toString", 1},
  };
  return b;
}

class Checker {
public:
  void run(const Program& program) {
    for (const auto& [name, arity] : builtin_arities()) {
      env_[name] = Type{true, arity};
    }
    env_["happened"] = Type{};
    action_names_.insert("loaded?");

    for (const TopLevel& tl : program) {
      if (const auto* let = std::get_if<LetDecl>(&tl)) {
        check_let(*let);
      } else if (const auto* act = std::get_if<ActionDecl>(&tl)) {
        check_action(*act);
      }
      // check statements resolve names at elaboration time
    }
  }

private:
  void check_let(const LetDecl& let) {
    std::map<std::string, Type> saved;
    std::set<std::string> shadowed;
    for (const Param& p : let.params) {
      auto it = env_.find(p.name);
      if (it != env_.end()) {
        saved[p.name] = it->second;
        shadowed.insert(p.name);
      }
      env_[p.name] = Type{};
    }
    Type body = infer(*let.body);
    if (body.is_function) {
      throw TypeError(TypeErrorKind::function_in_data, let.body->loc,
                      "a binding's result must be a value, not a function");
    }
    for (const Param& p : let.params) {
      if (shadowed.count(p.name)) {
        env_[p.name] = saved[p.name];
      } else {
        env_.erase(p.name);
      }
    }
    env_[let.name] = let.has_params ? Type{true, let.params.size()} : Type{};
  }

  void check_action(const ActionDecl& act) {
    for (const SExprPtr& a : act.primitive_args) require_value(*a);
    if (act.guard) require_value(*act.guard);
    action_names_.insert(act.name);
  }

  void require_value(const SExpr& e) {
    Type t = infer(e);
    if (t.is_function) {
      throw TypeError(TypeErrorKind::function_in_data, e.loc,
                      "a function cannot be used where a value is required");
    }
  }

  Type infer(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::lit_number:
      case SExpr::Kind::lit_string:
      case SExpr::Kind::lit_bool:
      case SExpr::Kind::lit_null:
      case SExpr::Kind::selector:
      case SExpr::Kind::selector_field:
        return Type{};
      case SExpr::Kind::action_name:
        if (!action_names_.count(e.name)) {
          throw TypeError(TypeErrorKind::unbound_name, e.loc,
                          "'" + e.name + "' is not a declared action or event");
        }
        return Type{};
      case SExpr::Kind::var: {
        auto it = env_.find(e.name);
        if (it == env_.end()) {
          throw TypeError(TypeErrorKind::unbound_name, e.loc,
                          "unbound name '" + e.name + "'" );
        }
        return it->second;
      }
      case SExpr::Kind::call: {
        auto it = env_.find(e.name);
        if (it == env_.end()) {
          throw TypeError(TypeErrorKind::unbound_name, e.loc,
                          "unbound name '" + e.name + "'" );
        }
        if (!it->second.is_function) {
          throw TypeError(TypeErrorKind::arity_mismatch, e.loc,
                          "'" + e.name + "' is not a function");
        }
        if (it->second.arity != e.args.size()) {
          throw TypeError(TypeErrorKind::arity_mismatch, e.loc,
                          "'" + e.name + "' takes " + std::to_string(it->second.arity) +
                              " argument(s), got " + std::to_string(e.args.size()));
        }
        for (const SExprPtr& a : e.args) require_value(*a);
        return Type{};
      }
      case SExpr::Kind::array:
        for (const SExprPtr& a : e.args) {
          Type t = infer(*a);
          if (t.is_function) {
            throw TypeError(TypeErrorKind::function_in_data, a->loc,
                            "functions may not be placed inside data");
          }
        }
        return Type{};
      case SExpr::Kind::binop:
      case SExpr::Kind::and_op:
      case SExpr::Kind::or_op:
      case SExpr::Kind::implies:
        require_value(*e.lhs);
        require_value(*e.rhs);
        return Type{};
      case SExpr::Kind::not_op:
        require_value(*e.operand);
        return Type{};
      case SExpr::Kind::if_expr:
        require_value(*e.cond);
        require_value(*e.then_e);
        require_value(*e.else_e);
        return Type{};
      case SExpr::Kind::let_in: {
        require_value(*e.rhs);
        auto it = env_.find(e.name);
        bool had = it != env_.end();
        Type saved = had ? it->second : Type{};
        env_[e.name] = Type{};
        Type t = infer(*e.lhs);
        if (had) {
          env_[e.name] = saved;
        } else {
          env_.erase(e.name);
        }
        if (t.is_function) {
          throw TypeError(TypeErrorKind::function_in_data, e.lhs->loc,
                          "a block's result must be a value");
        }
        return Type{};
      }
      case SExpr::Kind::t_always:
      case SExpr::Kind::t_eventually:
      case SExpr::Kind::t_next:
      case SExpr::Kind::t_next_weak:
      case SExpr::Kind::t_next_strong:
        require_value(*e.operand);
        return Type{};
      case SExpr::Kind::t_until:
      case SExpr::Kind::t_release:
        require_value(*e.lhs);
        require_value(*e.rhs);
        return Type{};
    }
    return Type{};
  }

  std::map<std::string, Type> env_;
  std::set<std::string> action_names_;
};

}  // namespace

void typecheck(const Program& program) { Checker().run(program); }

}  // namespace strom
