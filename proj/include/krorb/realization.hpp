#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "krorb/group.hpp"

namespace krorb {

// Rejection of an input text, carrying the offending byte offset and the
// derived 1-based line:col position.
struct ParseError : std::runtime_error {
  std::size_t offset;
  int line;
  int col;

  ParseError(const std::string& message, std::size_t offset, int line, int col)
      : std::runtime_error(message), offset(offset), line(line), col(col) {}

  // "line:col: message", the CLI-facing form.
  std::string positioned() const {
    return std::to_string(line) + ":" + std::to_string(col) + ": " + what();
  }
};

// 1-based line/col of a byte offset in text.
std::pair<int, int> position_of(std::string_view text, std::size_t offset);

// Parses a realization word. Grammar (whitespace insignificant):
//
//   expr    := prod
//   prod    := wr ( "x" wr )*
//   wr      := primary ( "wr_" NAT "Z" )*      NAT >= 1
//   primary := "1" | "Z" | "(" expr ")"
//
// "x" associates left; a "wr_n Z" suffix wraps everything parsed so far at
// its precedence level, so "Z wr_2 Z wr_3 Z" reads ((Z wr_2 Z) wr_3 Z).
// The Unicode spellings U+00D7 for "x", U+2240 (with ASCII or subscript
// digits, underscore optional) for "wr_", and U+2124 for "Z" are accepted on
// input only. Throws ParseError on rejection.
GroupExpr parse_realization(std::string_view text);

// Canonical ASCII text; parse_realization(render(e)) == e structurally.
std::string render(const GroupExpr& expr);

// Applies, innermost first, the isomorphism rewrites
//   1 wr_n Z  ->  Z        A wr_1 Z  ->  A x Z
//   1 x A     ->  A        A x 1     ->  A
// and reassociates products to right-nested form. Idempotent; preserves
// beta1. Does not reorder product operands.
GroupExpr normalize(const GroupExpr& expr);

}  // namespace krorb
