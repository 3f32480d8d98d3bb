#include "gted/standardize.hpp"

namespace gted {

namespace {

// Rewrite rules applied everywhere in an expression:
//  - quantifier splitting: ∀ x y : T, p becomes nested single-variable
//    quantifiers (type duplicated, not shared)
//  - unary-minus canonicalization: -(e) loses the parenthesis node
ExprPtr rewrite_expr(const ExprPtr& e) {
  if (!e) return nullptr;
  Expr out = *e;
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AppExpr>) {
          x.head = rewrite_expr(x.head);
          x.arg = rewrite_expr(x.arg);
        } else if constexpr (std::is_same_v<T, BinOpExpr>) {
          x.lhs = rewrite_expr(x.lhs);
          x.rhs = rewrite_expr(x.rhs);
        } else if constexpr (std::is_same_v<T, UnOpExpr>) {
          x.operand = rewrite_expr(x.operand);
          if (x.op == "-") {
            if (const auto* p = std::get_if<ParenExpr>(&x.operand->node))
              x.operand = p->inner;
          }
        } else if constexpr (std::is_same_v<T, QuantExpr>) {
          x.binder.type = rewrite_expr(x.binder.type);
          x.body = rewrite_expr(x.body);
        } else if constexpr (std::is_same_v<T, ArrowExpr>) {
          x.lhs = rewrite_expr(x.lhs);
          x.rhs = rewrite_expr(x.rhs);
        } else if constexpr (std::is_same_v<T, AscriptionExpr>) {
          x.expr = rewrite_expr(x.expr);
          x.type = rewrite_expr(x.type);
        } else if constexpr (std::is_same_v<T, ParenExpr>) {
          x.inner = rewrite_expr(x.inner);
        }
      },
      out.node);

  if (auto* q = std::get_if<QuantExpr>(&out.node)) {
    if (q->binder.names.size() > 1) {
      // Innermost variable first; duplicate the shared type per variable.
      ExprPtr body = q->body;
      for (auto it = q->binder.names.rbegin(); it != q->binder.names.rend();
           ++it) {
        Binder b;
        b.names = {*it};
        b.type = clone_expr(q->binder.type);
        b.bracket = q->binder.bracket;
        body = make_expr<QuantExpr>(e->span, q->kind, std::move(b), body);
      }
      return body;
    }
  }
  return std::make_shared<Expr>(std::move(out));
}

}  // namespace

TheoremStmt expand_binders(const TheoremStmt& stmt) {
  TheoremStmt out = stmt;
  out.binders.clear();
  for (const Binder& group : stmt.binders) {
    for (const std::string& name : group.names) {
      Binder b;
      b.names = {name};
      b.type = clone_expr(group.type);
      b.bracket = group.bracket;
      out.binders.push_back(std::move(b));
    }
  }
  return out;
}

TheoremStmt normalize_name(const TheoremStmt& stmt) {
  TheoremStmt out = stmt;
  out.name = "thm";
  return out;
}

StandardizedStmt standardize(const TheoremStmt& stmt,
                             const StandardizeConfig& config) {
  StandardizedStmt out;
  TheoremStmt work = normalize_name(stmt);
  out.provenance.push_back("normalize-name");
  if (config.rewrite) {
    for (Binder& b : work.binders) b.type = rewrite_expr(b.type);
    work.goal = rewrite_expr(work.goal);
    out.provenance.push_back("rewrite");
  }
  if (config.expand) {
    work = expand_binders(work);
    out.provenance.push_back("binder-expansion");
  }
  out.name = work.name;
  out.binders = std::move(work.binders);
  out.goal = work.goal;
  return out;
}

}  // namespace gted
