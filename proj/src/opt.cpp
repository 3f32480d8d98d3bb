#include "gted/opt.hpp"

#include "gted/parser.hpp"

namespace gted {

namespace {

int assign_ids(OptNode& n, int next) {
  n.id = next++;
  for (OptNode& c : n.children) next = assign_ids(c, next);
  return next;
}

const OptNode* find_rec(const OptNode& n, int id) {
  if (n.id == id) return &n;
  for (const OptNode& c : n.children)
    if (const OptNode* hit = find_rec(c, id)) return hit;
  return nullptr;
}

bool is_ascii_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

}  // namespace

OperatorTree::OperatorTree(OptNode root) : root_(std::move(root)) {
  size_ = assign_ids(root_, 0);
}

const OptNode& OperatorTree::find(int id) const {
  const OptNode* hit = find_rec(root_, id);
  if (!hit) throw InvalidRef("no node with id " + std::to_string(id));
  return *hit;
}

int slot_count(const std::string& label) {
  int count = 0;
  for (size_t i = 0; i < label.size(); ++i) {
    if (label[i] != '_') continue;
    bool prev_ok = i == 0 || !is_ascii_ident_char(label[i - 1]);
    bool next_ok = i + 1 == label.size() || !is_ascii_ident_char(label[i + 1]);
    if (prev_ok && next_ok) count++;
  }
  return count;
}

OptKind classify(const OptNode& node) {
  const std::string& l = node.label;
  if (node.children.empty())
    return l == kPlaceholder ? OptKind::Placeholder : OptKind::Leaf;
  if (l == "_ _") return OptKind::App;
  if (l == "_ : _") return OptKind::Ascription;
  if (l == "{_ : _}" || l == "[_ : _]") return OptKind::Binder;
  if (l == "¬ _" || l == "- _") return OptKind::UnOp;
  if (l == "[_]") return OptKind::BracketList;
  if (l == "_ → _") return OptKind::Arrow;
  if (l.rfind("∀ ", 0) == 0 || l.rfind("∃ ", 0) == 0 || l.rfind("λ ", 0) == 0)
    return OptKind::Quant;
  // `_ <op> _` with a known infix operator.
  if (slot_count(l) == 2 && l.rfind("_ ", 0) == 0 &&
      l.size() > 4 && l.compare(l.size() - 2, 2, " _") == 0) {
    std::string op = l.substr(2, l.size() - 4);
    if (binop_info(op)) return OptKind::BinOp;
  }
  return OptKind::Theorem;
}

QuantLabelInfo quant_label_info(const std::string& label) {
  QuantLabelInfo info;
  size_t sym_end = label.find(' ');
  info.symbol = label.substr(0, sym_end);
  std::string rest = label.substr(sym_end + 1);
  info.bracket = BracketStyle::Explicit;
  if (rest.rfind("{", 0) == 0) info.bracket = BracketStyle::Implicit;
  if (rest.rfind("[", 0) == 0) info.bracket = BracketStyle::Instance;
  info.typed = rest.find(':') != std::string::npos;
  return info;
}

BracketStyle binder_label_style(const std::string& label) {
  if (label == "{_ : _}") return BracketStyle::Implicit;
  if (label == "[_ : _]") return BracketStyle::Instance;
  return BracketStyle::Explicit;
}

namespace {

std::string binder_label(BracketStyle style) {
  switch (style) {
    case BracketStyle::Implicit: return "{_ : _}";
    case BracketStyle::Instance: return "[_ : _]";
    default: return "_ : _";
  }
}

std::string quant_symbol(QuantKind k) {
  switch (k) {
    case QuantKind::Forall: return "∀";
    case QuantKind::Exists: return "∃";
    default: return "λ";
  }
}

OptNode convert(const ExprPtr& e);

OptNode convert_quant(const QuantExpr& q, const Expr& e) {
  // Standardization has split multi-name quantifiers already; nest here
  // anyway so partially-standardized input still yields a well-formed tree.
  OptNode body = convert(q.body);
  for (auto it = q.binder.names.rbegin(); it != q.binder.names.rend(); ++it) {
    OptNode n;
    std::string sym = quant_symbol(q.kind);
    if (q.binder.type) {
      std::string core = binder_label(q.binder.bracket);
      if (q.binder.bracket == BracketStyle::Explicit) core = "_ : _";
      n.label = sym + " " + core + ", _";
      n.children = {OptNode{*it, {}, -1}, convert(q.binder.type),
                    std::move(body)};
    } else {
      n.label = sym + " _, _";
      n.children = {OptNode{*it, {}, -1}, std::move(body)};
    }
    body = std::move(n);
  }
  (void)e;
  return body;
}

OptNode convert(const ExprPtr& e) {
  return std::visit(
      [&](const auto& x) -> OptNode {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AtomExpr>) {
          return {x.name, {}, -1};
        } else if constexpr (std::is_same_v<T, NumeralExpr>) {
          return {x.value, {}, -1};
        } else if constexpr (std::is_same_v<T, AppExpr>) {
          return {"_ _", {convert(x.head), convert(x.arg)}, -1};
        } else if constexpr (std::is_same_v<T, BinOpExpr>) {
          return {"_ " + x.op + " _", {convert(x.lhs), convert(x.rhs)}, -1};
        } else if constexpr (std::is_same_v<T, UnOpExpr>) {
          if (x.op == "[]") return {"[_]", {convert(x.operand)}, -1};
          return {x.op + " _", {convert(x.operand)}, -1};
        } else if constexpr (std::is_same_v<T, QuantExpr>) {
          return convert_quant(x, *e);
        } else if constexpr (std::is_same_v<T, ArrowExpr>) {
          return {"_ → _", {convert(x.lhs), convert(x.rhs)}, -1};
        } else if constexpr (std::is_same_v<T, AscriptionExpr>) {
          return {"_ : _", {convert(x.expr), convert(x.type)}, -1};
        } else {
          static_assert(std::is_same_v<T, ParenExpr>);
          return convert(x.inner);  // parentheses removal
        }
      },
      e->node);
}

}  // namespace

OperatorTree build_opt(const StandardizedStmt& stmt) {
  OptNode root;
  root.label = stmt.name;
  for (const Binder& b : stmt.binders) {
    for (const std::string& name : b.names) {
      OptNode bn;
      bn.label = binder_label(b.bracket);
      bn.children = {OptNode{name, {}, -1}, convert(b.type)};
      root.children.push_back(std::move(bn));
    }
  }
  root.children.push_back(convert(stmt.goal));
  return OperatorTree(std::move(root));
}

int tree_size(const OperatorTree& tree) { return tree.size(); }

namespace {

bool replace_with_placeholder(OptNode& n, int id) {
  if (n.id == id) {
    n = OptNode{kPlaceholder, {}, -1};
    return true;
  }
  for (OptNode& c : n.children)
    if (replace_with_placeholder(c, id)) return true;
  return false;
}

}  // namespace

OperatorTree quotient(const OperatorTree& tree, int node_id) {
  OptNode copy = tree.root();
  if (!replace_with_placeholder(copy, node_id))
    throw InvalidRef("no node with id " + std::to_string(node_id));
  return OperatorTree(std::move(copy));
}

OperatorTree quotient(const OperatorTree& tree, const SubtreeRef& ref) {
  return quotient(tree, ref.node_id);
}

std::vector<SubtreeRef> enumerate_subtrees(const OperatorTree& tree) {
  std::vector<SubtreeRef> out;
  out.reserve(tree.size());
  for (int id = 0; id < tree.size(); ++id) out.push_back({&tree, id});
  return out;
}

bool tree_equal(const OptNode& a, const OptNode& b) {
  if (a.label != b.label || a.children.size() != b.children.size())
    return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!tree_equal(a.children[i], b.children[i])) return false;
  return true;
}

bool tree_equal(const OperatorTree& a, const OperatorTree& b) {
  return tree_equal(a.root(), b.root());
}

namespace {

int node_prec(const OptNode& n) {
  switch (classify(n)) {
    case OptKind::Leaf:
    case OptKind::Placeholder:
    case OptKind::BracketList:
      return 1000;
    case OptKind::App:
      return 100;
    case OptKind::BinOp: {
      std::string op = n.label.substr(2, n.label.size() - 4);
      return binop_info(op)->precedence;
    }
    case OptKind::UnOp:
      return n.label[0] == '-' ? 85 : 50;
    case OptKind::Arrow:
      return 20;
    case OptKind::Quant:
      return 10;
    case OptKind::Ascription:
      return 5;
    default:
      return 0;
  }
}

struct Renderer {
  bool is_template = false;

  std::string expr(const OptNode& n, int min_prec) {
    OptKind kind = classify(n);
    std::string s;
    switch (kind) {
      case OptKind::Leaf:
        s = n.label;
        break;
      case OptKind::Placeholder:
        is_template = true;
        s = "_";
        break;
      case OptKind::App:
        s = expr(n.children[0], 100) + " " + expr(n.children[1], 101);
        break;
      case OptKind::BinOp: {
        std::string op = n.label.substr(2, n.label.size() - 4);
        const OpInfo* info = binop_info(op);
        int p = info->precedence;
        int lmin = info->right_assoc ? p + 1 : p;
        int rmin = info->right_assoc ? p : p + 1;
        s = expr(n.children[0], lmin) + " " + op + " " +
            expr(n.children[1], rmin);
        break;
      }
      case OptKind::Arrow:
        s = expr(n.children[0], 21) + " → " + expr(n.children[1], 20);
        break;
      case OptKind::UnOp:
        if (n.label[0] == '-')
          s = "-" + expr(n.children[0], 85);
        else
          s = "¬ " + expr(n.children[0], 51);
        break;
      case OptKind::BracketList:
        s = "[" + expr(n.children[0], 0) + "]";
        break;
      case OptKind::Ascription:
        s = expr(n.children[0], 0) + " : " + expr(n.children[1], 0);
        break;
      case OptKind::Binder: {
        // Binder node outside root position: render with its brackets.
        char open = n.label[0], close = n.label[n.label.size() - 1];
        return std::string(1, open) + expr(n.children[0], 0) + " : " +
               expr(n.children[1], 0) + std::string(1, close);
      }
      case OptKind::Quant: {
        QuantLabelInfo info = quant_label_info(n.label);
        const OptNode& var = n.children[0];
        std::string head = info.symbol + " ";
        if (info.typed) {
          std::string core =
              expr(var, 0) + " : " + expr(n.children[1], 0);
          if (info.bracket == BracketStyle::Implicit)
            core = "{" + core + "}";
          else if (info.bracket == BracketStyle::Instance)
            core = "[" + core + "]";
          head += core;
        } else {
          head += expr(var, 0);
        }
        s = head + ", " + expr(n.children.back(), 0);
        break;
      }
      case OptKind::Theorem:
        // A theorem node nested in expression position cannot occur in
        // constructed trees; render its goal child as a fallback.
        s = expr(n.children.back(), min_prec);
        return s;
    }
    if (node_prec(n) < min_prec) s = "(" + s + ")";
    return s;
  }

  std::string theorem(const OptNode& root) {
    std::string out = "theorem " + root.label;
    for (size_t i = 0; i + 1 < root.children.size(); ++i) {
      const OptNode& b = root.children[i];
      OptKind k = classify(b);
      if (k == OptKind::Ascription || k == OptKind::Binder) {
        char open = '(', close = ')';
        BracketStyle style = binder_label_style(b.label);
        if (style == BracketStyle::Implicit) { open = '{'; close = '}'; }
        if (style == BracketStyle::Instance) { open = '['; close = ']'; }
        out += " " + std::string(1, open) + expr(b.children[0], 0) + " : " +
               expr(b.children[1], 0) + std::string(1, close);
      } else {
        out += " " + expr(b, 1001);
      }
    }
    out += " : " + expr(root.children.back(), 0);
    return out;
  }
};

}  // namespace

RenderResult render(const OperatorTree& tree) {
  Renderer r;
  RenderResult res;
  const OptNode& root = tree.root();
  if (classify(root) == OptKind::Theorem)
    res.text = r.theorem(root);
  else
    res.text = r.expr(root, 0);
  res.is_template = r.is_template;
  return res;
}

namespace {

void indent_rec(const OptNode& n, int depth, std::string& out) {
  out += std::to_string(depth);
  out += std::string(2 * depth + 1, ' ');
  out += n.label;
  out += "\n";
  for (const OptNode& c : n.children) indent_rec(c, depth + 1, out);
}

void oneline_rec(const OptNode& n, std::string& out) {
  out += n.label;
  if (n.children.empty()) return;
  out += "(";
  for (size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ", ";
    oneline_rec(n.children[i], out);
  }
  out += ")";
}

bool slot_arity_rec(const OptNode& n, bool is_root) {
  if (!n.children.empty()) {
    bool exempt = is_root && classify(n) == OptKind::Theorem;
    if (!exempt &&
        slot_count(n.label) != static_cast<int>(n.children.size()))
      return false;
  }
  for (const OptNode& c : n.children)
    if (!slot_arity_rec(c, false)) return false;
  return true;
}

bool bracket_rec(const OptNode& n) {
  if (n.label.find('(') != std::string::npos ||
      n.label.find(')') != std::string::npos)
    return true;
  for (const OptNode& c : n.children)
    if (bracket_rec(c)) return true;
  return false;
}

}  // namespace

std::string to_indented(const OperatorTree& tree) {
  std::string out;
  indent_rec(tree.root(), 0, out);
  return out;
}

std::string to_oneline(const OperatorTree& tree) {
  std::string out;
  oneline_rec(tree.root(), out);
  return out;
}

bool check_slot_arity(const OperatorTree& tree) {
  return slot_arity_rec(tree.root(), true);
}

bool has_bracket_label(const OperatorTree& tree) {
  return bracket_rec(tree.root());
}

}  // namespace gted
