#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gted {

// Byte offsets into the source, half-open.
struct Span {
  size_t start = 0;
  size_t end = 0;
};

enum class TokenKind {
  Keyword,     // theorem, example
  Identifier,  // x, thm, Nat, ℝ, Equiv.Perm, u_1
  Numeral,     // decimal digit string, optionally with a fractional part
  Symbol,      // operators, punctuation, and any unrecognized codepoint
  OpenDelim,   // ( { [
  CloseDelim,  // ) } ]
};

struct Token {
  TokenKind kind;
  std::string text;  // exact source slice
  Span span;
};

// Total: never fails on any UTF-8 input. Unknown non-whitespace codepoints
// become single Symbol tokens.
std::vector<Token> tokenize(std::string_view source);

// Decodes one UTF-8 codepoint starting at `pos`; advances `pos` past it.
// Malformed bytes are consumed one at a time and returned as-is.
uint32_t decode_utf8(std::string_view s, size_t& pos);

bool is_unicode_whitespace(uint32_t cp);

}  // namespace gted
