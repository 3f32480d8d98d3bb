#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gted/lexer.hpp"

namespace gted {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BracketStyle { Explicit, Implicit, Instance };

enum class QuantKind { Forall, Exists, Lambda };

struct Binder {
  std::vector<std::string> names;  // length >= 1, no duplicates within group
  ExprPtr type;                    // may be null for untyped quantifier binders
  BracketStyle bracket = BracketStyle::Explicit;
};

struct AtomExpr {
  std::string name;
};
struct NumeralExpr {
  std::string value;  // decimal string, never converted to machine integers
};
struct AppExpr {
  ExprPtr head, arg;  // left-associated: f a b == App(App(f,a),b)
};
struct BinOpExpr {
  std::string op;
  ExprPtr lhs, rhs;
};
struct UnOpExpr {
  std::string op;  // "¬", "-", or "[]" for bracketed expressions
  ExprPtr operand;
};
struct QuantExpr {
  QuantKind kind;
  Binder binder;
  ExprPtr body;
};
struct ArrowExpr {
  ExprPtr lhs, rhs;  // right-associated
};
struct AscriptionExpr {
  ExprPtr expr, type;
};
struct ParenExpr {
  ExprPtr inner;  // raw parse output only; removed before OPT construction
};

struct Expr {
  std::variant<AtomExpr, NumeralExpr, AppExpr, BinOpExpr, UnOpExpr, QuantExpr,
               ArrowExpr, AscriptionExpr, ParenExpr>
      node;
  Span span;
};

struct TheoremStmt {
  std::string name;
  std::vector<Binder> binders;
  ExprPtr goal;
  std::optional<std::string> trailer;  // verbatim ":= ..." tail, ignored
};

template <class T, class... Args>
ExprPtr make_expr(Span span, Args&&... args) {
  return std::make_shared<Expr>(Expr{T{std::forward<Args>(args)...}, span});
}

// Structural equality, ignoring source spans.
bool expr_equal(const Expr& a, const Expr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool binder_equal(const Binder& a, const Binder& b);
bool stmt_equal(const TheoremStmt& a, const TheoremStmt& b);

// Deep structural copy (no sharing with the original).
ExprPtr clone_expr(const ExprPtr& e);

}  // namespace gted
