#pragma once

#include "gted/ast.hpp"

namespace gted {

struct StandardizeConfig {
  bool rewrite = true;  // quantifier splitting, unary-minus canonicalization
  bool expand = true;   // binder expansion
};

// Output of the standardization pipeline. Under the default config every
// binder has exactly one name and the statement name is "thm".
struct StandardizedStmt {
  std::string name;
  std::vector<Binder> binders;
  ExprPtr goal;  // may still contain Paren nodes; removed at OPT construction
  std::vector<std::string> provenance;
};

// Splits every k-name binder group into k consecutive single-name groups,
// preserving order and bracket style. Type expressions are deep-copied.
TheoremStmt expand_binders(const TheoremStmt& stmt);

// Replaces the statement name with the canonical "thm".
TheoremStmt normalize_name(const TheoremStmt& stmt);

// Full pipeline: name normalization, rule-based rewriting, binder expansion.
StandardizedStmt standardize(const TheoremStmt& stmt,
                             const StandardizeConfig& config = {});

}  // namespace gted
