#pragma once

#include <stdexcept>

#include "gted/standardize.hpp"

namespace gted {

// Internal-node labels are operator templates whose parameter slots are
// written `_` (e.g. `_ + _`, `∀ _ : _, _`). Leaves carry atom/numeral/
// variable names. The dedicated placeholder leaf produced by quotient
// construction has the label `_` exactly.
struct OptNode {
  std::string label;
  std::vector<OptNode> children;
  int id = -1;  // preorder index, unique within its OperatorTree
};

inline const std::string kPlaceholder = "_";

class InvalidRef : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OperatorTree {
 public:
  explicit OperatorTree(OptNode root);

  const OptNode& root() const { return root_; }
  int size() const { return size_; }

  // Throws InvalidRef when no node carries `id`.
  const OptNode& find(int id) const;

 private:
  OptNode root_;
  int size_ = 0;
};

struct SubtreeRef {
  const OperatorTree* tree;
  int node_id;
};

// Number of standalone `_` slots in a label (underscores embedded in
// identifiers like `u_1` do not count).
int slot_count(const std::string& label);

// Role of a node, recovered from its label template.
enum class OptKind {
  Leaf,
  Placeholder,
  App,          // `_ _`
  BinOp,        // `_ <op> _`
  UnOp,         // `¬ _`, `- _`
  BracketList,  // `[_]`
  Arrow,        // `_ → _`
  Ascription,   // `_ : _` in expression position
  Binder,       // `_ : _`, `{_ : _}`, `[_ : _]` as a child of the root
  Quant,        // `∀ _ : _, _`, `∃ _, _`, `λ _, _`, ...
  Theorem,      // variadic root: binder children followed by the goal
};
OptKind classify(const OptNode& node);

// For Quant nodes: quantifier symbol, bracket style, and whether the label
// carries a type slot.
struct QuantLabelInfo {
  std::string symbol;  // "∀", "∃", "λ"
  BracketStyle bracket;
  bool typed;
};
QuantLabelInfo quant_label_info(const std::string& label);

BracketStyle binder_label_style(const std::string& label);

OperatorTree build_opt(const StandardizedStmt& stmt);

int tree_size(const OperatorTree& tree);

// Replaces the subtree rooted at `ref` with a placeholder leaf.
OperatorTree quotient(const OperatorTree& tree, const SubtreeRef& ref);
OperatorTree quotient(const OperatorTree& tree, int node_id);

// One reference per node, in preorder.
std::vector<SubtreeRef> enumerate_subtrees(const OperatorTree& tree);

// Structural equality, ignoring node ids.
bool tree_equal(const OptNode& a, const OptNode& b);
bool tree_equal(const OperatorTree& a, const OperatorTree& b);

struct RenderResult {
  std::string text;
  bool is_template = false;  // true when a quotient placeholder was rendered
};

// Substitutes children into label slots, inserting round brackets exactly
// where the precedence table requires them for re-parse fidelity.
RenderResult render(const OperatorTree& tree);

// `tree` CLI output helpers.
std::string to_indented(const OperatorTree& tree);
std::string to_oneline(const OperatorTree& tree);

// True when every internal node has as many `_` slots as children. The
// variadic theorem root and placeholder leaves are exempt.
bool check_slot_arity(const OperatorTree& tree);

// A full traversal finds no bracket-labeled node.
bool has_bracket_label(const OperatorTree& tree);

}  // namespace gted
