#include "strom/ast.hpp"

#include <sstream>

namespace strom {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string subscript_suffix(const std::optional<std::uint32_t>& s) {
  return s ? "_" + std::to_string(*s) : "";
}

}  // namespace

// Fully parenthesized; round-trips are structural, not textual.
std::string print_sexpr(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::lit_number: return number_to_string(e.number);
    case SExpr::Kind::lit_string: return quote(e.str);
    case SExpr::Kind::lit_bool: return e.boolean ? "true" : "false";
    case SExpr::Kind::lit_null: return "null";
    case SExpr::Kind::selector: return "`" + e.name + "`";
    case SExpr::Kind::selector_field: return "`" + e.name + "`." + e.field;
    case SExpr::Kind::action_name: return e.name;
    case SExpr::Kind::var: return e.name;
    case SExpr::Kind::call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += print_sexpr(*e.args[i]);
      }
      return s + ")";
    }
    case SExpr::Kind::array: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += print_sexpr(*e.args[i]);
      }
      return s + "]";
    }
    case SExpr::Kind::binop:
      return "(" + print_sexpr(*e.lhs) + " " + to_string(e.op) + " " + print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::and_op:
      return "(" + print_sexpr(*e.lhs) + " && " + print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::or_op:
      return "(" + print_sexpr(*e.lhs) + " || " + print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::implies:
      return "(" + print_sexpr(*e.lhs) + " ==> " + print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::not_op: return "not " + print_sexpr(*e.operand);
    case SExpr::Kind::if_expr:
      return "if " + print_sexpr(*e.cond) + " { " + print_sexpr(*e.then_e) + " } else { " +
             print_sexpr(*e.else_e) + " }";
    case SExpr::Kind::let_in:
      return "{ let " + std::string(e.lazy ? "~" : "") + e.name + " = " + print_sexpr(*e.rhs) +
             "; " + print_sexpr(*e.lhs) + " }";
    case SExpr::Kind::t_always:
      return "always" + subscript_suffix(e.subscript) + " " + print_sexpr(*e.operand);
    case SExpr::Kind::t_eventually:
      return "eventually" + subscript_suffix(e.subscript) + " " + print_sexpr(*e.operand);
    case SExpr::Kind::t_until:
      return "(" + print_sexpr(*e.lhs) + " until" + subscript_suffix(e.subscript) + " " +
             print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::t_release:
      return "(" + print_sexpr(*e.lhs) + " release" + subscript_suffix(e.subscript) + " " +
             print_sexpr(*e.rhs) + ")";
    case SExpr::Kind::t_next: return "next " + print_sexpr(*e.operand);
    case SExpr::Kind::t_next_weak: return "nextW " + print_sexpr(*e.operand);
    case SExpr::Kind::t_next_strong: return "nextS " + print_sexpr(*e.operand);
  }
  return "?";
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  for (const TopLevel& tl : p) {
    if (const auto* let = std::get_if<LetDecl>(&tl)) {
      os << "let " << (let->lazy ? "~" : "") << let->name;
      if (let->has_params) {
        os << "(";
        for (std::size_t i = 0; i < let->params.size(); ++i) {
          if (i) os << ", ";
          os << (let->params[i].lazy ? "~" : "") << let->params[i].name;
        }
        os << ")";
      }
      os << " = " << print_sexpr(*let->body) << ";\n";
    } else if (const auto* act = std::get_if<ActionDecl>(&tl)) {
      os << "action " << act->name << " = " << act->primitive;
      if (!act->primitive_args.empty()) {
        os << "(";
        for (std::size_t i = 0; i < act->primitive_args.size(); ++i) {
          if (i) os << ", ";
          os << print_sexpr(*act->primitive_args[i]);
        }
        os << ")";
      }
      if (act->timeout_ms) os << " timeout " << *act->timeout_ms;
      if (act->guard) os << " when " << print_sexpr(*act->guard);
      os << ";\n";
    } else {
      const auto& chk = std::get<CheckDecl>(tl);
      os << "check";
      for (const std::string& p2 : chk.properties) os << " " << p2;
      if (chk.with_actions) {
        os << " with";
        for (const std::string& a : *chk.with_actions) os << " " << a;
      }
      os << ";\n";
    }
  }
  return os.str();
}

bool sexpr_equal(const SExpr& a, const SExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.number != b.number || a.str != b.str || a.boolean != b.boolean || a.name != b.name ||
      a.field != b.field || a.op != b.op || a.lazy != b.lazy || a.subscript != b.subscript) {
    return false;
  }
  auto eq = [](const SExprPtr& x, const SExprPtr& y) {
    if (!x || !y) return !x && !y;
    return sexpr_equal(*x, *y);
  };
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!eq(a.args[i], b.args[i])) return false;
  }
  return eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs) && eq(a.cond, b.cond) &&
         eq(a.then_e, b.then_e) && eq(a.else_e, b.else_e) && eq(a.operand, b.operand);
}

bool program_equal(const Program& a, const Program& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) return false;
    if (const auto* la = std::get_if<LetDecl>(&a[i])) {
      const auto& lb = std::get<LetDecl>(b[i]);
      if (la->name != lb.name || la->lazy != lb.lazy || la->has_params != lb.has_params) {
        return false;
      }
      if (la->params.size() != lb.params.size()) return false;
      for (std::size_t j = 0; j < la->params.size(); ++j) {
        if (la->params[j].name != lb.params[j].name || la->params[j].lazy != lb.params[j].lazy) {
          return false;
        }
      }
      if (!sexpr_equal(*la->body, *lb.body)) return false;
    } else if (const auto* aa = std::get_if<ActionDecl>(&a[i])) {
      const auto& ab = std::get<ActionDecl>(b[i]);
      if (aa->name != ab.name || aa->kind != ab.kind || aa->primitive != ab.primitive ||
          aa->timeout_ms != ab.timeout_ms) {
        return false;
      }
      if (aa->primitive_args.size() != ab.primitive_args.size()) return false;
      for (std::size_t j = 0; j < aa->primitive_args.size(); ++j) {
        if (!sexpr_equal(*aa->primitive_args[j], *ab.primitive_args[j])) return false;
      }
      if ((aa->guard == nullptr) != (ab.guard == nullptr)) return false;
      if (aa->guard && !sexpr_equal(*aa->guard, *ab.guard)) return false;
    } else {
      const auto& ca = std::get<CheckDecl>(a[i]);
      const auto& cb = std::get<CheckDecl>(b[i]);
      if (ca.properties != cb.properties || ca.with_actions != cb.with_actions) return false;
    }
  }
  return true;
}

namespace {

using J = nlohmann::ordered_json;

const char* kind_name(SExpr::Kind k) {
  switch (k) {
    case SExpr::Kind::lit_number: return "number";
    case SExpr::Kind::lit_string: return "string";
    case SExpr::Kind::lit_bool: return "bool";
    case SExpr::Kind::lit_null: return "null";
    case SExpr::Kind::selector: return "selector";
    case SExpr::Kind::selector_field: return "selectorField";
    case SExpr::Kind::action_name: return "actionName";
    case SExpr::Kind::var: return "var";
    case SExpr::Kind::call: return "funcApply";
    case SExpr::Kind::array: return "array";
    case SExpr::Kind::binop: return "binop";
    case SExpr::Kind::and_op: return "and";
    case SExpr::Kind::or_op: return "or";
    case SExpr::Kind::implies: return "implies";
    case SExpr::Kind::not_op: return "not";
    case SExpr::Kind::if_expr: return "if";
    case SExpr::Kind::let_in: return "letIn";
    case SExpr::Kind::t_always: return "always";
    case SExpr::Kind::t_eventually: return "eventually";
    case SExpr::Kind::t_until: return "until";
    case SExpr::Kind::t_release: return "release";
    case SExpr::Kind::t_next: return "next";
    case SExpr::Kind::t_next_weak: return "nextW";
    case SExpr::Kind::t_next_strong: return "nextS";
  }
  return "?";
}

J sexpr_to_json(const SExpr& e) {
  J j;
  j["kind"] = kind_name(e.kind);
  switch (e.kind) {
    case SExpr::Kind::lit_number: j["value"] = e.number; break;
    case SExpr::Kind::lit_string: j["value"] = e.str; break;
    case SExpr::Kind::lit_bool: j["value"] = e.boolean; break;
    case SExpr::Kind::lit_null: break;
    case SExpr::Kind::selector: j["selector"] = e.name; break;
    case SExpr::Kind::selector_field:
      j["selector"] = e.name;
      j["field"] = e.field;
      break;
    case SExpr::Kind::action_name:
    case SExpr::Kind::var:
      j["name"] = e.name;
      break;
    case SExpr::Kind::call: {
      j["name"] = e.name;
      J args = J::array();
      for (const auto& a : e.args) args.push_back(sexpr_to_json(*a));
      j["args"] = args;
      break;
    }
    case SExpr::Kind::array: {
      J items = J::array();
      for (const auto& a : e.args) items.push_back(sexpr_to_json(*a));
      j["items"] = items;
      break;
    }
    case SExpr::Kind::binop:
      j["op"] = to_string(e.op);
      j["lhs"] = sexpr_to_json(*e.lhs);
      j["rhs"] = sexpr_to_json(*e.rhs);
      break;
    case SExpr::Kind::and_op:
    case SExpr::Kind::or_op:
    case SExpr::Kind::implies:
      j["lhs"] = sexpr_to_json(*e.lhs);
      j["rhs"] = sexpr_to_json(*e.rhs);
      break;
    case SExpr::Kind::not_op:
      j["operand"] = sexpr_to_json(*e.operand);
      break;
    case SExpr::Kind::if_expr:
      j["cond"] = sexpr_to_json(*e.cond);
      j["then"] = sexpr_to_json(*e.then_e);
      j["else"] = sexpr_to_json(*e.else_e);
      break;
    case SExpr::Kind::let_in:
      j["name"] = e.name;
      j["lazy"] = e.lazy;
      j["bound"] = sexpr_to_json(*e.rhs);
      j["body"] = sexpr_to_json(*e.lhs);
      break;
    case SExpr::Kind::t_always:
    case SExpr::Kind::t_eventually:
      if (e.subscript) j["subscript"] = *e.subscript;
      j["operand"] = sexpr_to_json(*e.operand);
      break;
    case SExpr::Kind::t_until:
    case SExpr::Kind::t_release:
      if (e.subscript) j["subscript"] = *e.subscript;
      j["lhs"] = sexpr_to_json(*e.lhs);
      j["rhs"] = sexpr_to_json(*e.rhs);
      break;
    case SExpr::Kind::t_next:
    case SExpr::Kind::t_next_weak:
    case SExpr::Kind::t_next_strong:
      j["operand"] = sexpr_to_json(*e.operand);
      break;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json program_to_json(const Program& p) {
  J out = J::array();
  for (const TopLevel& tl : p) {
    J j;
    if (const auto* let = std::get_if<LetDecl>(&tl)) {
      j["decl"] = "let";
      j["name"] = let->name;
      j["lazy"] = let->lazy;
      if (let->has_params) {
        J params = J::array();
        for (const Param& prm : let->params) {
          J pj;
          pj["name"] = prm.name;
          pj["lazy"] = prm.lazy;
          params.push_back(pj);
        }
        j["params"] = params;
      }
      j["body"] = sexpr_to_json(*let->body);
    } else if (const auto* act = std::get_if<ActionDecl>(&tl)) {
      j["decl"] = "action";
      j["name"] = act->name;
      j["kind"] = act->kind == ActionKind::user_action ? "userAction" : "event";
      j["primitive"] = act->primitive;
      J args = J::array();
      for (const auto& a : act->primitive_args) args.push_back(sexpr_to_json(*a));
      j["primitiveArgs"] = args;
      if (act->timeout_ms) j["timeout"] = *act->timeout_ms;
      if (act->guard) j["guard"] = sexpr_to_json(*act->guard);
    } else {
      const auto& chk = std::get<CheckDecl>(tl);
      j["decl"] = "check";
      j["properties"] = chk.properties;
      if (chk.with_actions) j["with"] = *chk.with_actions;
    }
    out.push_back(j);
  }
  return out;
}

}  // namespace strom
