#include "krorb/realization.hpp"

#include <cctype>
#include <cstdio>

namespace krorb {

std::pair<int, int> position_of(std::string_view text, std::size_t offset) {
  int line = 1;
  std::size_t line_start = 0;
  const std::size_t end = std::min(offset, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<int>(offset - line_start) + 1};
}

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t offset, const std::string& message) {
  auto [line, col] = position_of(text, offset);
  throw ParseError(message, offset, line, col);
}

std::string describe_byte(unsigned char c) {
  if (std::isprint(c)) return std::string("'") + static_cast<char>(c) + "'";
  char buf[16];
  std::snprintf(buf, sizeof buf, "byte 0x%02X", c);
  return buf;
}

struct Token {
  enum Kind { LParen, RParen, One, Z, Times, Wr, End } kind = End;
  int arity = 0;  // Wr
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t at = i_;
    if (i_ >= s_.size()) return {Token::End, 0, at};
    const unsigned char c = static_cast<unsigned char>(s_[i_]);
    switch (c) {
      case '(':
        ++i_;
        return {Token::LParen, 0, at};
      case ')':
        ++i_;
        return {Token::RParen, 0, at};
      case '1':
        ++i_;
        return {Token::One, 0, at};
      case 'Z':
        ++i_;
        return {Token::Z, 0, at};
      case 'x':
        ++i_;
        return {Token::Times, 0, at};
      case 'w':
        return lex_ascii_wreath(at);
      case 0xC3:
        if (peek(1) == 0x97) {  // U+00D7 multiplication sign
          i_ += 2;
          return {Token::Times, 0, at};
        }
        break;
      case 0xE2:
        if (peek(1) == 0x84 && peek(2) == 0xA4) {  // U+2124 double-struck Z
          i_ += 3;
          return {Token::Z, 0, at};
        }
        if (peek(1) == 0x89 && peek(2) == 0x80) {  // U+2240 wreath product
          i_ += 3;
          return lex_wreath_arity(at);
        }
        break;
      default:
        break;
    }
    fail(s_, at, "unexpected " + describe_byte(c));
  }

 private:
  int peek(std::size_t d) const { return i_ + d < s_.size() ? static_cast<unsigned char>(s_[i_ + d]) : -1; }

  Token lex_ascii_wreath(std::size_t at) {
    if (!(peek(1) == 'r' && peek(2) == '_')) fail(s_, at, "unexpected 'w' (did you mean 'wr_<n>'?)");
    i_ += 3;
    return lex_wreath_arity(at);
  }

  // Arity digits: ASCII 0-9 or Unicode subscripts U+2080..U+2089, after an
  // optional '_'. At least one digit required.
  Token lex_wreath_arity(std::size_t at) {
    if (peek(0) == '_') ++i_;
    long long arity = 0;
    bool any = false;
    for (;;) {
      const int c = peek(0);
      int digit = -1;
      std::size_t width = 0;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
        width = 1;
      } else if (c == 0xE2 && peek(1) == 0x82 && peek(2) >= 0x80 && peek(2) <= 0x89) {
        digit = peek(2) - 0x80;
        width = 3;
      }
      if (digit < 0) break;
      any = true;
      arity = arity * 10 + digit;
      if (arity > 1000000) fail(s_, i_, "wreath arity too large");
      i_ += width;
    }
    if (!any) fail(s_, i_, "expected wreath arity digits");
    if (arity == 0) fail(s_, at, "wreath arity must be >= 1");
    return {Token::Wr, static_cast<int>(arity), at};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), lex_(text) { advance(); }

  GroupExpr parse() {
    GroupExpr e = parse_prod();
    if (cur_.kind != Token::End) fail(text_, cur_.offset, "unexpected trailing input");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  GroupExpr parse_prod() {
    GroupExpr e = parse_wr();
    while (cur_.kind == Token::Times) {
      advance();
      e = GroupExpr::product(std::move(e), parse_wr());
    }
    return e;
  }

  GroupExpr parse_wr() {
    GroupExpr e = parse_primary();
    while (cur_.kind == Token::Wr) {
      const int n = cur_.arity;
      advance();
      if (cur_.kind != Token::Z) fail(text_, cur_.offset, "expected Z after wreath operator");
      advance();
      e = GroupExpr::wreath(std::move(e), n);
    }
    return e;
  }

  GroupExpr parse_primary() {
    switch (cur_.kind) {
      case Token::One:
        advance();
        return GroupExpr::trivial();
      case Token::Z:
        advance();
        return GroupExpr::z();
      case Token::LParen: {
        advance();
        GroupExpr e = parse_prod();
        if (cur_.kind != Token::RParen) fail(text_, cur_.offset, "expected ')'");
        advance();
        return e;
      }
      default:
        fail(text_, cur_.offset, "expected '1', 'Z' or '('");
    }
  }

  std::string_view text_;
  Lexer lex_;
  Token cur_;
};

// Three precedence levels mirror the grammar; parentheses appear exactly
// where re-parsing would otherwise regroup.
void render_prod(const GroupExpr& e, std::string& out);
void render_wr(const GroupExpr& e, std::string& out);
void render_primary(const GroupExpr& e, std::string& out);

void render_prod(const GroupExpr& e, std::string& out) {
  if (e.kind() == GroupExpr::Kind::Product) {
    render_prod(e.left(), out);
    out += " x ";
    render_wr(e.right(), out);
  } else {
    render_wr(e, out);
  }
}

void render_wr(const GroupExpr& e, std::string& out) {
  if (e.kind() == GroupExpr::Kind::Wreath) {
    render_wr(e.base(), out);
    out += " wr_";
    out += std::to_string(e.arity());
    out += " Z";
  } else {
    render_primary(e, out);
  }
}

void render_primary(const GroupExpr& e, std::string& out) {
  switch (e.kind()) {
    case GroupExpr::Kind::Trivial:
      out += '1';
      return;
    case GroupExpr::Kind::Z:
      out += 'Z';
      return;
    default:
      out += '(';
      render_prod(e, out);
      out += ')';
      return;
  }
}

}  // namespace

GroupExpr parse_realization(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupExpr& expr) {
  std::string out;
  render_prod(expr, out);
  return out;
}

GroupExpr normalize(const GroupExpr& expr) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
    case GroupExpr::Kind::Z:
      return expr;
    case GroupExpr::Kind::Product: {
      GroupExpr l = normalize(expr.left());
      GroupExpr r = normalize(expr.right());
      if (l.kind() == GroupExpr::Kind::Trivial) return r;
      if (r.kind() == GroupExpr::Kind::Trivial) return l;
      if (l.kind() == GroupExpr::Kind::Product)
        return normalize(GroupExpr::product(l.left(), GroupExpr::product(l.right(), r)));
      return GroupExpr::product(std::move(l), std::move(r));
    }
    case GroupExpr::Kind::Wreath: {
      GroupExpr b = normalize(expr.base());
      if (b.kind() == GroupExpr::Kind::Trivial) return GroupExpr::z();
      if (expr.arity() == 1) return normalize(GroupExpr::product(std::move(b), GroupExpr::z()));
      return GroupExpr::wreath(std::move(b), expr.arity());
    }
  }
  return expr;
}

}  // namespace krorb
