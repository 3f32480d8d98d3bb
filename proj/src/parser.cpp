#include "gted/parser.hpp"

#include <unordered_map>
#include <unordered_set>

namespace gted {

namespace {

// Binding strength, descending: application > ^ > * / % > + - >
// relational > ¬ > ∧ > ∨ > ↔ > → > quantifier bodies.
const std::unordered_map<std::string, OpInfo>& binop_table() {
  static const std::unordered_map<std::string, OpInfo> table = {
      {"^", {90, false}},
      {"*", {80, false}}, {"/", {80, false}}, {"%", {80, false}},
      {"+", {70, false}}, {"-", {70, false}},
      {"=", {60, false}}, {"≠", {60, false}}, {"<", {60, false}},
      {"≤", {60, false}}, {">", {60, false}}, {"≥", {60, false}},
      {"∈", {60, false}}, {"∣", {60, false}},
      {"∧", {40, false}},
      {"∨", {35, false}},
      {"↔", {30, true}},
      {"→", {20, true}}, {"->", {20, true}},
  };
  return table;
}

constexpr int kNotPrec = 50;       // prefix ¬
constexpr int kNegPrec = 85;       // prefix -, tighter than * but looser than ^

bool is_punctuation(const std::string& t) {
  return t == ":" || t == "," || t == ":=" || t == "=>";
}

bool is_prefix_or_quant(const std::string& t) {
  return t == "¬" || t == "-" || t == "∀" || t == "∃" || t == "λ";
}

class Parser {
 public:
  Parser(std::string_view source, std::vector<Token> tokens)
      : source_(source), tokens_(std::move(tokens)) {}

  TheoremStmt parse_statement() {
    TheoremStmt stmt;
    const Token& head = expect_kind(TokenKind::Keyword, "theorem or example");
    if (head.text == "example") {
      stmt.name = "example";
      if (peek_is(TokenKind::Identifier)) stmt.name = advance().text;
    } else {
      stmt.name = expect_kind(TokenKind::Identifier, "theorem name").text;
    }
    while (peek_is(TokenKind::OpenDelim)) stmt.binders.push_back(parse_binder_group());
    expect_symbol(":");
    stmt.goal = parse_expression(0);
    if (peek_symbol(":")) {
      advance();
      ExprPtr type = parse_expression(0);
      Span sp{stmt.goal->span.start, type->span.end};
      stmt.goal = make_expr<AscriptionExpr>(sp, stmt.goal, type);
    }
    if (peek_symbol(":=")) {
      stmt.trailer = std::string(source_.substr(tokens_[idx_].span.start));
      idx_ = tokens_.size();
    }
    if (idx_ != tokens_.size())
      throw SyntaxError("unexpected trailing tokens, expected end of statement",
                        tokens_[idx_].span);
    return stmt;
  }

  ExprPtr parse_toplevel_expr() {
    ExprPtr e = parse_expression(0);
    // Top-level ascription, as in goal position.
    if (peek_symbol(":")) {
      advance();
      ExprPtr type = parse_expression(0);
      Span sp{e->span.start, type->span.end};
      e = make_expr<AscriptionExpr>(sp, e, type);
    }
    if (idx_ != tokens_.size())
      throw SyntaxError("unexpected trailing tokens after expression",
                        tokens_[idx_].span);
    return e;
  }

 private:
  bool at_end() const { return idx_ >= tokens_.size(); }

  const Token& peek() const {
    if (at_end())
      throw SyntaxError("unexpected end of input",
                        {source_.size(), source_.size() + 1});
    return tokens_[idx_];
  }

  bool peek_is(TokenKind k) const { return !at_end() && tokens_[idx_].kind == k; }

  bool peek_symbol(const std::string& t) const {
    return peek_is(TokenKind::Symbol) && tokens_[idx_].text == t;
  }

  const Token& advance() { return tokens_[idx_++]; }

  const Token& expect_kind(TokenKind k, const char* what) {
    if (!peek_is(k))
      throw SyntaxError(std::string("expected ") + what,
                        at_end() ? Span{source_.size(), source_.size() + 1}
                                 : tokens_[idx_].span);
    return advance();
  }

  void expect_symbol(const std::string& t) {
    if (!peek_symbol(t))
      throw SyntaxError("expected `" + t + "`",
                        at_end() ? Span{source_.size(), source_.size() + 1}
                                 : tokens_[idx_].span);
    advance();
  }

  void expect_close(char open, Span open_span) {
    static const std::unordered_map<char, std::string> match = {
        {'(', ")"}, {'{', "}"}, {'[', "]"}};
    const std::string& want = match.at(open);
    if (!peek_is(TokenKind::CloseDelim))
      throw UnbalancedDelimiter("unclosed `" + std::string(1, open) + "`",
                                open_span);
    const Token& t = advance();
    if (t.text != want)
      throw UnbalancedDelimiter("mismatched delimiter, expected `" + want + "`",
                                t.span);
  }

  // True when the bracketed group starting at the current open delimiter
  // contains a top-level `:` (i.e. it is a named binder group).
  bool group_has_colon() const {
    int depth = 0;
    for (size_t i = idx_; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.kind == TokenKind::OpenDelim) depth++;
      else if (t.kind == TokenKind::CloseDelim) {
        depth--;
        if (depth == 0) return false;
      } else if (depth == 1 && t.kind == TokenKind::Symbol && t.text == ":")
        return true;
    }
    throw UnbalancedDelimiter("unclosed delimiter", tokens_[idx_].span);
  }

  Binder parse_binder_group() {
    bool named = group_has_colon();
    const Token& open = advance();
    char oc = open.text[0];
    Binder b;
    b.bracket = oc == '(' ? BracketStyle::Explicit
                : oc == '{' ? BracketStyle::Implicit
                            : BracketStyle::Instance;
    if (!named) {
      // Anonymous instance binder like [Infinite Ω]; only `[]` allows it.
      if (b.bracket != BracketStyle::Instance)
        throw SyntaxError("binder group requires `name : type`", open.span);
      b.names.push_back("_inst");
      b.type = parse_expression(0);
      expect_close(oc, open.span);
      return b;
    }
    while (peek_is(TokenKind::Identifier)) {
      const Token& n = advance();
      for (const auto& existing : b.names)
        if (existing == n.text)
          throw SyntaxError("duplicate name `" + n.text + "` in binder group",
                            n.span);
      b.names.push_back(n.text);
    }
    if (b.names.empty())
      throw SyntaxError("expected variable name in binder group", peek().span);
    expect_symbol(":");
    b.type = parse_expression(0);
    expect_close(oc, open.span);
    return b;
  }

  ExprPtr parse_quantifier() {
    const Token& q = advance();
    QuantKind kind = q.text == "∀"   ? QuantKind::Forall
                     : q.text == "∃" ? QuantKind::Exists
                                     : QuantKind::Lambda;
    std::vector<Binder> groups;
    if (peek_is(TokenKind::OpenDelim)) {
      while (peek_is(TokenKind::OpenDelim)) groups.push_back(parse_binder_group());
    } else {
      Binder b;
      while (peek_is(TokenKind::Identifier)) b.names.push_back(advance().text);
      if (b.names.empty())
        throw SyntaxError("expected bound variable after `" + q.text + "`",
                          at_end() ? q.span : peek().span);
      if (peek_symbol(":")) {
        advance();
        b.type = parse_expression(0);
      }
      groups.push_back(std::move(b));
    }
    if (peek_symbol(",") || peek_symbol("=>")) advance();
    else
      throw SyntaxError("expected `,` after quantifier binder",
                        at_end() ? q.span : peek().span);
    ExprPtr body = parse_expression(0);
    // Multiple binder groups nest right-to-left around the body.
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      Span sp{q.span.start, body->span.end};
      body = make_expr<QuantExpr>(sp, kind, std::move(*it), body);
    }
    return body;
  }

  bool starts_primary() const {
    if (at_end()) return false;
    const Token& t = tokens_[idx_];
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::Numeral:
        return true;
      case TokenKind::OpenDelim:
        return t.text == "(" || t.text == "[";
      case TokenKind::Symbol:
        // Symbols outside the operator table degrade to atoms.
        return !binop_table().count(t.text) && !is_punctuation(t.text) &&
               !is_prefix_or_quant(t.text);
      default:
        return false;
    }
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) {
      advance();
      return make_expr<AtomExpr>(t.span, t.text);
    }
    if (t.kind == TokenKind::Numeral) {
      advance();
      return make_expr<NumeralExpr>(t.span, t.text);
    }
    if (t.kind == TokenKind::OpenDelim && t.text == "(") {
      advance();
      ExprPtr inner = parse_expression(0);
      if (peek_symbol(":")) {
        advance();
        ExprPtr type = parse_expression(0);
        Span sp{inner->span.start, type->span.end};
        inner = make_expr<AscriptionExpr>(sp, inner, type);
      }
      expect_close('(', t.span);
      Span sp{t.span.start, tokens_[idx_ - 1].span.end};
      return make_expr<ParenExpr>(sp, inner);
    }
    if (t.kind == TokenKind::OpenDelim && t.text == "[") {
      advance();
      ExprPtr inner = parse_expression(0);
      expect_close('[', t.span);
      Span sp{t.span.start, tokens_[idx_ - 1].span.end};
      return make_expr<UnOpExpr>(sp, "[]", inner);
    }
    if (t.kind == TokenKind::Symbol && !binop_table().count(t.text) &&
        !is_punctuation(t.text) && !is_prefix_or_quant(t.text)) {
      advance();
      return make_expr<AtomExpr>(t.span, t.text);
    }
    throw SyntaxError("expected expression, found `" + t.text + "`", t.span);
  }

  ExprPtr parse_application() {
    ExprPtr e = parse_primary();
    while (starts_primary()) {
      ExprPtr arg = parse_primary();
      Span sp{e->span.start, arg->span.end};
      e = make_expr<AppExpr>(sp, e, arg);
    }
    return e;
  }

  ExprPtr parse_prefix() {
    const Token& t = peek();
    if (t.kind == TokenKind::Symbol) {
      if (t.text == "¬") {
        advance();
        ExprPtr operand = parse_expression(kNotPrec + 1);
        return make_expr<UnOpExpr>(Span{t.span.start, operand->span.end}, "¬",
                                   operand);
      }
      if (t.text == "-") {
        advance();
        ExprPtr operand = parse_expression(kNegPrec);
        return make_expr<UnOpExpr>(Span{t.span.start, operand->span.end}, "-",
                                   operand);
      }
      if (t.text == "∀" || t.text == "∃" || t.text == "λ")
        return parse_quantifier();
    }
    return parse_application();
  }

  ExprPtr parse_expression(int min_prec) {
    ExprPtr lhs = parse_prefix();
    while (!at_end() && peek_is(TokenKind::Symbol)) {
      const std::string& op = tokens_[idx_].text;
      if (is_punctuation(op)) break;
      auto it = binop_table().find(op);
      if (it == binop_table().end()) break;
      const OpInfo& info = it->second;
      if (info.precedence < min_prec) break;
      advance();
      ExprPtr rhs =
          parse_expression(info.right_assoc ? info.precedence
                                            : info.precedence + 1);
      Span sp{lhs->span.start, rhs->span.end};
      if (op == "→" || op == "->")
        lhs = make_expr<ArrowExpr>(sp, lhs, rhs);
      else
        lhs = make_expr<BinOpExpr>(sp, op, lhs, rhs);
    }
    return lhs;
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  size_t idx_ = 0;
};

}  // namespace

const OpInfo* binop_info(const std::string& text) {
  auto it = binop_table().find(text);
  return it == binop_table().end() ? nullptr : &it->second;
}

TheoremStmt parse_theorem(std::string_view source) {
  Parser p(source, tokenize(source));
  return p.parse_statement();
}

ExprPtr parse_expr(const std::vector<Token>& tokens) {
  if (tokens.empty())
    throw SyntaxError("empty token list", {0, 1});
  Parser p("", tokens);
  return p.parse_toplevel_expr();
}

}  // namespace gted
