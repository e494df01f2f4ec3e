#include "strom/lexer.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace strom {

const char* token_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::action_ident: return "action name";
    case Tok::number: return "number";
    case Tok::string: return "string";
    case Tok::selector: return "selector";
    case Tok::kw_let: return "'let'";
    case Tok::kw_action: return "'action'";
    case Tok::kw_check: return "'check'";
    case Tok::kw_with: return "'with'";
    case Tok::kw_when: return "'when'";
    case Tok::kw_timeout: return "'timeout'";
    case Tok::kw_if: return "'if'";
    case Tok::kw_else: return "'else'";
    case Tok::kw_true: return "'true'";
    case Tok::kw_false: return "'false'";
    case Tok::kw_null: return "'null'";
    case Tok::kw_in: return "'in'";
    case Tok::kw_not: return "'not'";
    case Tok::kw_always: return "'always'";
    case Tok::kw_eventually: return "'eventually'";
    case Tok::kw_until: return "'until'";
    case Tok::kw_release: return "'release'";
    case Tok::kw_next: return "'next'";
    case Tok::kw_next_weak: return "'nextW'";
    case Tok::kw_next_strong: return "'nextS'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::dot: return "'.'";
    case Tok::tilde: return "'~'";
    case Tok::assign: return "'='";
    case Tok::eq: return "'=='";
    case Tok::ne: return "'!='";
    case Tok::lt: return "'<'";
    case Tok::le: return "'<='";
    case Tok::gt: return "'>'";
    case Tok::ge: return "'>='";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::and_and: return "'&&'";
    case Tok::or_or: return "'||'";
    case Tok::implies: return "'==>'";
    default: return "end of input";
  }
}

namespace {

const std::unordered_map<std::string, Tok>& keywords() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"let", Tok::kw_let},         {"action", Tok::kw_action},
      {"check", Tok::kw_check},     {"with", Tok::kw_with},
      {"when", Tok::kw_when},       {"timeout", Tok::kw_timeout},
      {"if", Tok::kw_if},           {"else", Tok::kw_else},
      {"true", Tok::kw_true},       {"false", Tok::kw_false},
      {"null", Tok::kw_null},       {"in", Tok::kw_in},
      {"not", Tok::kw_not},         {"always", Tok::kw_always},
      {"eventually", Tok::kw_eventually}, {"until", Tok::kw_until},
      {"release", Tok::kw_release}, {"next", Tok::kw_next},
      {"nextW", Tok::kw_next_weak}, {"nextS", Tok::kw_next_strong},
  };
  return kw;
}

// always_30 / eventually_5 / until_0 / release_12
bool split_subscripted(const std::string& word, Tok& kind, std::uint32_t& subscript) {
  auto underscore = word.rfind('_');
  if (underscore == std::string::npos || underscore + 1 == word.size()) return false;
  std::string base = word.substr(0, underscore);
  Tok t;
  if (base == "always") t = Tok::kw_always;
  else if (base == "eventually") t = Tok::kw_eventually;
  else if (base == "until") t = Tok::kw_until;
  else if (base == "release") t = Tok::kw_release;
  else return false;
  std::uint64_t n = 0;
  for (std::size_t i = underscore + 1; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i]))) return false;
    n = n * 10 + static_cast<std::uint64_t>(word[i] - '0');
    if (n > 0xffffffffULL) return false;
  }
  kind = t;
  subscript = static_cast<std::uint32_t>(n);
  return true;
}

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next();
      bool done = t.kind == Tok::eof;
      out.push_back(std::move(t));
      if (done) break;
    }
    return out;
  }

private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  SourceLoc here() const { return SourceLoc{line_, col_}; }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (peek() != '\n' && peek() != '\0') advance();
      } else {
        return;
      }
    }
  }

  Token make(Tok kind, SourceLoc loc, std::string text = "") {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.loc = loc;
    return t;
  }

  Token next() {
    SourceLoc loc = here();
    char c = peek();
    if (c == '\0') return make(Tok::eof, loc);

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return word(loc);
    if (std::isdigit(static_cast<unsigned char>(c))) return number(loc);
    if (c == '"') return string_lit(loc);
    if (c == '`') return selector_lit(loc);

    advance();
    switch (c) {
      case '(': return make(Tok::lparen, loc);
      case ')': return make(Tok::rparen, loc);
      case '{': return make(Tok::lbrace, loc);
      case '}': return make(Tok::rbrace, loc);
      case '[': return make(Tok::lbracket, loc);
      case ']': return make(Tok::rbracket, loc);
      case ',': return make(Tok::comma, loc);
      case ';': return make(Tok::semi, loc);
      case '.': return make(Tok::dot, loc);
      case '~': return make(Tok::tilde, loc);
      case '+': return make(Tok::plus, loc);
      case '-': return make(Tok::minus, loc);
      case '*': return make(Tok::star, loc);
      case '/': return make(Tok::slash, loc);
      case '=':
        if (peek() == '=' && peek(1) == '>') {
          advance();
          advance();
          return make(Tok::implies, loc);
        }
        if (peek() == '=') {
          advance();
          return make(Tok::eq, loc);
        }
        return make(Tok::assign, loc);
      case '!':
        if (peek() == '=') {
          advance();
          return make(Tok::ne, loc);
        }
        throw SyntaxError(loc, "stray '!' (action suffixes attach to a name)");
      case '<':
        if (peek() == '=') {
          advance();
          return make(Tok::le, loc);
        }
        return make(Tok::lt, loc);
      case '>':
        if (peek() == '=') {
          advance();
          return make(Tok::ge, loc);
        }
        return make(Tok::gt, loc);
      case '&':
        if (peek() == '&') {
          advance();
          return make(Tok::and_and, loc);
        }
        throw SyntaxError(loc, "stray '&' (use '&&')");
      case '|':
        if (peek() == '|') {
          advance();
          return make(Tok::or_or, loc);
        }
        throw SyntaxError(loc, "stray '|' (use '||')");
      default:
        throw SyntaxError(loc, std::string("unexpected character '") + c + "'");
    }
  }

  Token word(SourceLoc loc) {
    std::string w;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') w += advance();
    if (peek() == '!' || peek() == '?') {
      w += advance();
      Token t = make(Tok::action_ident, loc, w);
      return t;
    }
    auto it = keywords().find(w);
    if (it != keywords().end()) return make(it->second, loc, w);
    Tok sub_kind;
    std::uint32_t sub = 0;
    if (split_subscripted(w, sub_kind, sub)) {
      Token t = make(sub_kind, loc, w);
      t.subscript = sub;
      return t;
    }
    return make(Tok::ident, loc, w);
  }

  Token number(SourceLoc loc) {
    std::string n;
    while (std::isdigit(static_cast<unsigned char>(peek()))) n += advance();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      n += advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) n += advance();
    }
    Token t = make(Tok::number, loc, n);
    t.number = std::strtod(n.c_str(), nullptr);
    return t;
  }

  Token string_lit(SourceLoc loc) {
    advance();  // opening quote
    std::string s;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == '\n') throw SyntaxError(loc, "unterminated string");
      advance();
      if (c == '"') break;
      if (c == '\\') {
        char e = peek();
        advance();
        switch (e) {
          case 'n': s += '\n'; break;
          case 't': s += '\t'; break;
          case '"': s += '"'; break;
          case '\\': s += '\\'; break;
          default: throw SyntaxError(here(), std::string("unknown escape '\\") + e + "'");
        }
      } else {
        s += c;
      }
    }
    return make(Tok::string, loc, s);
  }

  Token selector_lit(SourceLoc loc) {
    advance();  // opening backtick
    std::string s;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == '\n') throw SyntaxError(loc, "unterminated selector");
      advance();
      if (c == '`') break;
      s += c;
    }
    if (s.empty()) throw SyntaxError(loc, "empty selector");
    return make(Tok::selector, loc, s);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(const std::string& source) { return Lexer(source).run(); }

}  // namespace strom
