#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strom/errors.hpp"

namespace strom {

enum class Tok {
  ident,
  action_ident,  // name ending in ! or ?
  number,
  string,
  selector,  // `...`
  kw_let,
  kw_action,
  kw_check,
  kw_with,
  kw_when,
  kw_timeout,
  kw_if,
  kw_else,
  kw_true,
  kw_false,
  kw_null,
  kw_in,
  kw_not,
  kw_always,
  kw_eventually,
  kw_until,
  kw_release,
  kw_next,
  kw_next_weak,
  kw_next_strong,
  lparen,
  rparen,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  comma,
  semi,
  dot,
  tilde,
  assign,  // =
  eq,
  ne,
  lt,
  le,
  gt,
  ge,
  plus,
  minus,
  star,
  slash,
  and_and,
  or_or,
  implies,  // ==>
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  double number = 0;
  std::optional<std::uint32_t> subscript;  // always_30 and friends
  SourceLoc loc;
};

const char* token_name(Tok t);

/// Tokenizes a whole source file. Comments run from // to end of line.
/// Identifiers absorb an immediately following ! or ? into an action name.
std::vector<Token> lex(const std::string& source);

}  // namespace strom
