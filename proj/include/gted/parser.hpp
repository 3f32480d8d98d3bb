#pragma once

#include <stdexcept>

#include "gted/ast.hpp"
#include "gted/lexer.hpp"

namespace gted {

struct SyntaxError : std::runtime_error {
  SyntaxError(std::string msg, Span span)
      : std::runtime_error(std::move(msg)), span(span) {}
  Span span;
};

struct UnbalancedDelimiter : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct OpInfo {
  int precedence;      // higher binds tighter
  bool right_assoc;
};

// Binary operator lookup; nullptr when `text` is not an infix operator.
const OpInfo* binop_info(const std::string& text);

// Parses a `theorem`/`example` statement. The tail from `:=` onward is
// captured verbatim as the trailer.
TheoremStmt parse_theorem(std::string_view source);

// Parses a bare expression from a token list (must consume all tokens).
ExprPtr parse_expr(const std::vector<Token>& tokens);

}  // namespace gted
