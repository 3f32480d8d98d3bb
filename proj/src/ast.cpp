#include "gted/ast.hpp"

namespace gted {

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_equal(*a, *b);
}

bool binder_equal(const Binder& a, const Binder& b) {
  return a.names == b.names && a.bracket == b.bracket &&
         expr_equal(a.type, b.type);
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, AtomExpr>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, NumeralExpr>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, AppExpr>) {
          return expr_equal(x.head, y.head) && expr_equal(x.arg, y.arg);
        } else if constexpr (std::is_same_v<T, BinOpExpr>) {
          return x.op == y.op && expr_equal(x.lhs, y.lhs) &&
                 expr_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, UnOpExpr>) {
          return x.op == y.op && expr_equal(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, QuantExpr>) {
          return x.kind == y.kind && binder_equal(x.binder, y.binder) &&
                 expr_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, ArrowExpr>) {
          return expr_equal(x.lhs, y.lhs) && expr_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, AscriptionExpr>) {
          return expr_equal(x.expr, y.expr) && expr_equal(x.type, y.type);
        } else {
          static_assert(std::is_same_v<T, ParenExpr>);
          return expr_equal(x.inner, y.inner);
        }
      },
      a.node);
}

bool stmt_equal(const TheoremStmt& a, const TheoremStmt& b) {
  if (a.name != b.name || a.binders.size() != b.binders.size()) return false;
  for (size_t i = 0; i < a.binders.size(); ++i)
    if (!binder_equal(a.binders[i], b.binders[i])) return false;
  return expr_equal(a.goal, b.goal);
}

ExprPtr clone_expr(const ExprPtr& e) {
  if (!e) return nullptr;
  Expr copy = *e;
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AppExpr>) {
          x.head = clone_expr(x.head);
          x.arg = clone_expr(x.arg);
        } else if constexpr (std::is_same_v<T, BinOpExpr>) {
          x.lhs = clone_expr(x.lhs);
          x.rhs = clone_expr(x.rhs);
        } else if constexpr (std::is_same_v<T, UnOpExpr>) {
          x.operand = clone_expr(x.operand);
        } else if constexpr (std::is_same_v<T, QuantExpr>) {
          x.binder.type = clone_expr(x.binder.type);
          x.body = clone_expr(x.body);
        } else if constexpr (std::is_same_v<T, ArrowExpr>) {
          x.lhs = clone_expr(x.lhs);
          x.rhs = clone_expr(x.rhs);
        } else if constexpr (std::is_same_v<T, AscriptionExpr>) {
          x.expr = clone_expr(x.expr);
          x.type = clone_expr(x.type);
        } else if constexpr (std::is_same_v<T, ParenExpr>) {
          x.inner = clone_expr(x.inner);
        }
      },
      copy.node);
  return std::make_shared<Expr>(std::move(copy));
}

}  // namespace gted
