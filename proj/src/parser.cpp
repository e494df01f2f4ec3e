#include "strom/parser.hpp"

#include <set>

#include "strom/lexer.hpp"

namespace strom {

namespace {

std::shared_ptr<SExpr> node(SExpr::Kind k, SourceLoc loc) {
  auto e = std::make_shared<SExpr>();
  e->kind = k;
  e->loc = loc;
  return e;
}

const std::set<std::string>& reserved_names() {
  static const std::set<std::string> names = {
      "happened", "parseInt", "parseFloat", "length", "toString", "seq",
  };
  return names;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program parse_program() {
    Program out;
    while (!at(Tok::eof)) {
      if (at(Tok::kw_let)) {
        out.push_back(parse_let());
      } else if (at(Tok::kw_action)) {
        out.push_back(parse_action());
      } else if (at(Tok::kw_check)) {
        out.push_back(parse_check());
      } else {
        throw SyntaxError(cur().loc, "expected a declaration", "'let', 'action', or 'check'");
      }
    }
    check_duplicates(out);
    return out;
  }

  SExprPtr parse_single_expression() {
    SExprPtr e = parse_expr();
    if (!at(Tok::eof)) {
      throw SyntaxError(cur().loc, "trailing input after expression", "end of input");
    }
    return e;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  const Token& advance() { return toks_[pos_++]; }

  const Token& expect(Tok k, const char* context) {
    if (!at(k)) {
      throw SyntaxError(cur().loc, std::string("unexpected ") + token_name(cur().kind) +
                                       " in " + context,
                        token_name(k));
    }
    return advance();
  }

  bool accept(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  // let [~]name [(params)] = expr ;   or   let [~]name [(params)] { ... }
  LetDecl parse_let() {
    LetDecl d;
    d.loc = expect(Tok::kw_let, "let declaration").loc;
    d.lazy = accept(Tok::tilde);
    d.name = expect(Tok::ident, "let declaration").text;
    if (accept(Tok::lparen)) {
      d.has_params = true;
      do {
        Param p;
        p.lazy = accept(Tok::tilde);
        const Token& t = expect(Tok::ident, "parameter list");
        p.name = t.text;
        p.loc = t.loc;
        d.params.push_back(std::move(p));
      } while (accept(Tok::comma));
      expect(Tok::rparen, "parameter list");
    }
    if (at(Tok::lbrace)) {
      d.body = parse_block();
    } else {
      expect(Tok::assign, "let declaration");
      d.body = parse_expr();
      expect(Tok::semi, "let declaration");
    }
    return d;
  }

  // action name! = prim[(args)] [timeout N] [when guard];
  ActionDecl parse_action() {
    ActionDecl d;
    d.loc = expect(Tok::kw_action, "action declaration").loc;
    const Token& name = expect(Tok::action_ident, "action declaration");
    d.name = name.text;
    d.kind = name.text.back() == '!' ? ActionKind::user_action : ActionKind::event;
    expect(Tok::assign, "action declaration");
    const Token& prim = expect(Tok::action_ident, "action declaration");
    d.primitive = prim.text;
    if ((d.kind == ActionKind::user_action) != (prim.text.back() == '!')) {
      throw SyntaxError(prim.loc, d.kind == ActionKind::user_action
                                      ? "a user action must be built from a '!' primitive"
                                      : "an event must be built from a '?' primitive");
    }
    if (accept(Tok::lparen)) {
      if (!at(Tok::rparen)) {
        do {
          d.primitive_args.push_back(parse_expr());
        } while (accept(Tok::comma));
      }
      expect(Tok::rparen, "primitive arguments");
    }
    if (accept(Tok::kw_timeout)) {
      const Token& t = expect(Tok::number, "timeout");
      d.timeout_ms = static_cast<std::int64_t>(t.number);
    }
    if (accept(Tok::kw_when)) d.guard = parse_expr();
    expect(Tok::semi, "action declaration");
    return d;
  }

  // check p1 p2 [with a! b! c?];
  CheckDecl parse_check() {
    CheckDecl d;
    d.loc = expect(Tok::kw_check, "check statement").loc;
    if (!at(Tok::ident)) {
      throw SyntaxError(cur().loc, "check needs at least one property name", "identifier");
    }
    while (at(Tok::ident)) d.properties.push_back(advance().text);
    if (accept(Tok::kw_with)) {
      std::vector<std::string> names;
      if (!at(Tok::action_ident)) {
        throw SyntaxError(cur().loc, "with clause needs at least one action name",
                          "action name");
      }
      while (at(Tok::action_ident)) names.push_back(advance().text);
      d.with_actions = std::move(names);
    }
    expect(Tok::semi, "check statement");
    return d;
  }

  // { let x = e; ... final-expr }
  SExprPtr parse_block() {
    SourceLoc loc = expect(Tok::lbrace, "block").loc;
    SExprPtr result = parse_block_body(loc);
    expect(Tok::rbrace, "block");
    return result;
  }

  SExprPtr parse_block_body(SourceLoc loc) {
    if (accept(Tok::kw_let)) {
      auto let = node(SExpr::Kind::let_in, loc);
      let->lazy = accept(Tok::tilde);
      let->name = expect(Tok::ident, "block binding").text;
      expect(Tok::assign, "block binding");
      let->rhs = parse_expr();
      expect(Tok::semi, "block binding");
      let->lhs = parse_block_body(cur().loc);
      return let;
    }
    return parse_expr();
  }

  SExprPtr parse_expr() { return parse_implies(); }

  SExprPtr parse_implies() {
    SExprPtr lhs = parse_until_release();
    if (at(Tok::implies)) {
      SourceLoc loc = advance().loc;
      auto e = node(SExpr::Kind::implies, loc);
      e->lhs = lhs;
      e->rhs = parse_implies();  // right-associative
      return e;
    }
    return lhs;
  }

  SExprPtr parse_until_release() {
    SExprPtr lhs = parse_or();
    if (at(Tok::kw_until) || at(Tok::kw_release)) {
      const Token& t = advance();
      auto e = node(t.kind == Tok::kw_until ? SExpr::Kind::t_until : SExpr::Kind::t_release,
                    t.loc);
      e->subscript = t.subscript;
      e->lhs = lhs;
      e->rhs = parse_or();
      return e;
    }
    return lhs;
  }

  SExprPtr parse_or() {
    SExprPtr lhs = parse_and();
    while (at(Tok::or_or)) {
      SourceLoc loc = advance().loc;
      auto e = node(SExpr::Kind::or_op, loc);
      e->lhs = lhs;
      e->rhs = parse_and();
      lhs = e;
    }
    return lhs;
  }

  SExprPtr parse_and() {
    SExprPtr lhs = parse_cmp();
    while (at(Tok::and_and)) {
      SourceLoc loc = advance().loc;
      auto e = node(SExpr::Kind::and_op, loc);
      e->lhs = lhs;
      e->rhs = parse_cmp();
      lhs = e;
    }
    return lhs;
  }

  SExprPtr parse_cmp() {
    SExprPtr lhs = parse_add();
    BinOp op;
    if (at(Tok::eq)) op = BinOp::eq;
    else if (at(Tok::ne)) op = BinOp::ne;
    else if (at(Tok::lt)) op = BinOp::lt;
    else if (at(Tok::le)) op = BinOp::le;
    else if (at(Tok::gt)) op = BinOp::gt;
    else if (at(Tok::ge)) op = BinOp::ge;
    else if (at(Tok::kw_in)) op = BinOp::in;
    else return lhs;
    SourceLoc loc = advance().loc;
    auto e = node(SExpr::Kind::binop, loc);
    e->op = op;
    e->lhs = lhs;
    e->rhs = parse_add();
    return e;
  }

  SExprPtr parse_add() {
    SExprPtr lhs = parse_mul();
    while (at(Tok::plus) || at(Tok::minus)) {
      BinOp op = at(Tok::plus) ? BinOp::add : BinOp::sub;
      SourceLoc loc = advance().loc;
      auto e = node(SExpr::Kind::binop, loc);
      e->op = op;
      e->lhs = lhs;
      e->rhs = parse_mul();
      lhs = e;
    }
    return lhs;
  }

  SExprPtr parse_mul() {
    SExprPtr lhs = parse_unary();
    while (at(Tok::star) || at(Tok::slash)) {
      BinOp op = at(Tok::star) ? BinOp::mul : BinOp::div;
      SourceLoc loc = advance().loc;
      auto e = node(SExpr::Kind::binop, loc);
      e->op = op;
      e->lhs = lhs;
      e->rhs = parse_unary();
      lhs = e;
    }
    return lhs;
  }

  SExprPtr parse_unary() {
    switch (cur().kind) {
      case Tok::kw_not: {
        SourceLoc loc = advance().loc;
        auto e = node(SExpr::Kind::not_op, loc);
        e->operand = parse_unary();
        return e;
      }
      case Tok::minus: {
        SourceLoc loc = advance().loc;
        auto zero = node(SExpr::Kind::lit_number, loc);
        zero->number = 0;
        auto e = node(SExpr::Kind::binop, loc);
        e->op = BinOp::sub;
        e->lhs = zero;
        e->rhs = parse_unary();
        return e;
      }
      case Tok::kw_always:
      case Tok::kw_eventually: {
        const Token& t = advance();
        auto e = node(t.kind == Tok::kw_always ? SExpr::Kind::t_always
                                               : SExpr::Kind::t_eventually,
                      t.loc);
        e->subscript = t.subscript;
        e->operand = parse_unary();
        return e;
      }
      case Tok::kw_next:
      case Tok::kw_next_weak:
      case Tok::kw_next_strong: {
        const Token& t = advance();
        SExpr::Kind k = t.kind == Tok::kw_next ? SExpr::Kind::t_next
                        : t.kind == Tok::kw_next_weak ? SExpr::Kind::t_next_weak
                                                      : SExpr::Kind::t_next_strong;
        auto e = node(k, t.loc);
        e->operand = parse_unary();
        return e;
      }
      default:
        return parse_primary();
    }
  }

  SExprPtr parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::number: {
        advance();
        auto e = node(SExpr::Kind::lit_number, t.loc);
        e->number = t.number;
        return e;
      }
      case Tok::string: {
        advance();
        auto e = node(SExpr::Kind::lit_string, t.loc);
        e->str = t.text;
        return e;
      }
      case Tok::kw_true:
      case Tok::kw_false: {
        advance();
        auto e = node(SExpr::Kind::lit_bool, t.loc);
        e->boolean = t.kind == Tok::kw_true;
        return e;
      }
      case Tok::kw_null:
        advance();
        return node(SExpr::Kind::lit_null, t.loc);
      case Tok::selector: {
        advance();
        if (accept(Tok::dot)) {
          const Token& f = expect(Tok::ident, "selector projection");
          auto e = node(SExpr::Kind::selector_field, t.loc);
          e->name = t.text;
          e->field = f.text;
          return e;
        }
        auto e = node(SExpr::Kind::selector, t.loc);
        e->name = t.text;
        return e;
      }
      case Tok::action_ident: {
        advance();
        auto e = node(SExpr::Kind::action_name, t.loc);
        e->name = t.text;
        return e;
      }
      case Tok::ident: {
        advance();
        if (accept(Tok::lparen)) {
          auto e = node(SExpr::Kind::call, t.loc);
          e->name = t.text;
          if (!at(Tok::rparen)) {
            do {
              e->args.push_back(parse_expr());
            } while (accept(Tok::comma));
          }
          expect(Tok::rparen, "call arguments");
          return e;
        }
        auto e = node(SExpr::Kind::var, t.loc);
        e->name = t.text;
        return e;
      }
      case Tok::lparen: {
        advance();
        SExprPtr e = parse_expr();
        expect(Tok::rparen, "parenthesized expression");
        return e;
      }
      case Tok::lbracket: {
        advance();
        auto e = node(SExpr::Kind::array, t.loc);
        if (!at(Tok::rbracket)) {
          do {
            e->args.push_back(parse_expr());
          } while (accept(Tok::comma));
        }
        expect(Tok::rbracket, "array literal");
        return e;
      }
      case Tok::kw_if: {
        advance();
        auto e = node(SExpr::Kind::if_expr, t.loc);
        e->cond = parse_expr();
        e->then_e = parse_block();
        expect(Tok::kw_else, "if expression");
        e->else_e = parse_block();
        return e;
      }
      case Tok::lbrace:
        return parse_block();
      default:
        throw SyntaxError(t.loc, std::string("unexpected ") + token_name(t.kind),
                          "expression");
    }
  }

  void check_duplicates(const Program& p) {
    std::set<std::string> seen;
    auto declare = [&](const std::string& name, SourceLoc loc) {
      if (reserved_names().count(name)) {
        throw SyntaxError(loc, "'" + name + "' is a reserved name");
      }
      if (!seen.insert(name).second) {
        throw SyntaxError(loc, "duplicate definition of '" + name + "'");
      }
    };
    for (const TopLevel& tl : p) {
      if (const auto* let = std::get_if<LetDecl>(&tl)) {
        declare(let->name, let->loc);
      } else if (const auto* act = std::get_if<ActionDecl>(&tl)) {
        if (act->name == "loaded?") {
          throw SyntaxError(act->loc, "'loaded?' is built in and cannot be redeclared");
        }
        declare(act->name, act->loc);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(const std::string& source) { return Parser(lex(source)).parse_program(); }

SExprPtr parse_expression(const std::string& source) {
  return Parser(lex(source)).parse_single_expression();
}

}  // namespace strom
