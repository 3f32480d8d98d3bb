#include "gted/lexer.hpp"

namespace gted {

uint32_t decode_utf8(std::string_view s, size_t& pos) {
  unsigned char b0 = s[pos];
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  int len = 0;
  uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    pos += 1;
    return b0;  // stray continuation byte, pass through
  }
  if (pos + len > s.size()) {
    pos += 1;
    return b0;
  }
  for (int i = 1; i < len; ++i) {
    unsigned char b = s[pos + i];
    if ((b & 0xC0) != 0x80) {
      pos += 1;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

bool is_unicode_whitespace(uint32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

bool is_ident_start(uint32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || cp == '_')
    return true;
  // Greek letters, letterlike symbols (ℕ ℤ ℝ ...), subscripts, and the
  // mathematical alphanumeric block all name atoms in Lean statements.
  // λ is reserved as the lambda binder, as in Lean itself.
  if (cp >= 0x0370 && cp <= 0x03FF) return cp != 0x03BB;
  if (cp >= 0x2100 && cp <= 0x214F) return true;
  if (cp >= 0x2080 && cp <= 0x209C) return true;
  if (cp >= 0x1D400 && cp <= 0x1D7FF) return true;
  return false;
}

bool is_ident_continue(uint32_t cp) {
  return is_ident_start(cp) || (cp >= '0' && cp <= '9') || cp == '\'' ||
         cp == '.';
}

bool is_digit(uint32_t cp) { return cp >= '0' && cp <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  size_t pos = 0;
  while (pos < source.size()) {
    size_t start = pos;
    uint32_t cp = decode_utf8(source, pos);
    if (is_unicode_whitespace(cp)) continue;

    if (is_digit(cp)) {
      size_t probe = pos;
      bool seen_dot = false;
      while (probe < source.size()) {
        size_t next = probe;
        uint32_t c = decode_utf8(source, next);
        if (is_digit(c)) {
          probe = next;
        } else if (c == '.' && !seen_dot && next < source.size() &&
                   is_digit(static_cast<unsigned char>(source[next]))) {
          seen_dot = true;
          probe = next;
        } else {
          break;
        }
      }
      pos = probe;
      out.push_back({TokenKind::Numeral,
                     std::string(source.substr(start, pos - start)),
                     {start, pos}});
      continue;
    }

    if (is_ident_start(cp)) {
      size_t probe = pos;
      while (probe < source.size()) {
        size_t next = probe;
        uint32_t c = decode_utf8(source, next);
        if (!is_ident_continue(c)) break;
        probe = next;
      }
      pos = probe;
      std::string text(source.substr(start, pos - start));
      TokenKind kind = (text == "theorem" || text == "example")
                           ? TokenKind::Keyword
                           : TokenKind::Identifier;
      out.push_back({kind, std::move(text), {start, pos}});
      continue;
    }

    if (cp == '(' || cp == '{' || cp == '[') {
      out.push_back({TokenKind::OpenDelim,
                     std::string(source.substr(start, pos - start)),
                     {start, pos}});
      continue;
    }
    if (cp == ')' || cp == '}' || cp == ']') {
      out.push_back({TokenKind::CloseDelim,
                     std::string(source.substr(start, pos - start)),
                     {start, pos}});
      continue;
    }

    // Two-character ASCII symbols: := and ->
    if (cp == ':' && pos < source.size() && source[pos] == '=') {
      pos += 1;
      out.push_back({TokenKind::Symbol, ":=", {start, pos}});
      continue;
    }
    if (cp == '-' && pos < source.size() && source[pos] == '>') {
      pos += 1;
      out.push_back({TokenKind::Symbol, "->", {start, pos}});
      continue;
    }
    if (cp == '=' && pos < source.size() && source[pos] == '>') {
      pos += 1;
      out.push_back({TokenKind::Symbol, "=>", {start, pos}});
      continue;
    }

    // Everything else is a single-codepoint symbol, known or not.
    out.push_back({TokenKind::Symbol,
                   std::string(source.substr(start, pos - start)),
                   {start, pos}});
  }
  return out;
}

}  // namespace gted
