#include "gted/gted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace gted {

namespace {

bool is_root_binder_label(const std::string& l) {
  return l == "_ : _" || l == "{_ : _}" || l == "[_ : _]";
}

// ---- rename-only canonicalization -----------------------------------------

void collect_bound_names(const OptNode& n, bool is_root,
                         std::vector<std::string>& order,
                         std::set<std::string>& seen) {
  auto note = [&](const std::string& name) {
    if (seen.insert(name).second) order.push_back(name);
  };
  if (is_root && !n.children.empty()) {
    for (size_t i = 0; i + 1 < n.children.size(); ++i) {
      const OptNode& c = n.children[i];
      if (is_root_binder_label(c.label) && !c.children.empty() &&
          c.children[0].children.empty())
        note(c.children[0].label);
    }
  }
  if (classify(n) == OptKind::Quant && !n.children.empty() &&
      n.children[0].children.empty())
    note(n.children[0].label);
  for (const OptNode& c : n.children)
    collect_bound_names(c, false, order, seen);
}

void rename_leaves(OptNode& n, const std::map<std::string, std::string>& map) {
  if (n.children.empty()) {
    auto it = map.find(n.label);
    if (it != map.end()) n.label = it->second;
    return;
  }
  for (OptNode& c : n.children) rename_leaves(c, map);
}

OperatorTree canonicalize_rename_only(const OperatorTree& tree) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  collect_bound_names(tree.root(), true, order, seen);
  std::map<std::string, std::string> map;
  for (size_t i = 0; i < order.size(); ++i)
    map[order[i]] = "#" + std::to_string(i + 1);
  OptNode copy = tree.root();
  rename_leaves(copy, map);
  return OperatorTree(std::move(copy));
}

// ---- scoped canonicalization ----------------------------------------------

struct ScopedCanon {
  int counter = 0;
  // Innermost binding wins: lookup scans from the back.
  std::vector<std::pair<std::string, std::string>> env;

  std::string fresh(const std::string& name) {
    ++counter;
    std::string id = "#" + std::to_string(counter);
    env.emplace_back(name, id);
    return id;
  }

  const std::string* lookup(const std::string& name) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  OptNode walk(const OptNode& n, bool is_root) {
    if (n.children.empty()) {
      OptNode leaf = n;
      if (const std::string* id = lookup(n.label)) leaf.label = *id;
      return leaf;
    }
    OptNode out;
    out.label = n.label;
    if (is_root && classify(n) == OptKind::Theorem) {
      size_t scope_mark = env.size();
      for (size_t i = 0; i < n.children.size(); ++i) {
        const OptNode& c = n.children[i];
        bool binder = i + 1 < n.children.size() &&
                      is_root_binder_label(c.label) && c.children.size() == 2 &&
                      c.children[0].children.empty();
        if (binder) {
          OptNode bn;
          bn.label = c.label;
          // The type is resolved in the scope of the preceding binders.
          OptNode type = walk(c.children[1], false);
          OptNode var = c.children[0];
          var.label = fresh(var.label);
          bn.children = {std::move(var), std::move(type)};
          out.children.push_back(std::move(bn));
        } else {
          out.children.push_back(walk(c, false));
        }
      }
      env.resize(scope_mark);
      return out;
    }
    if (classify(n) == OptKind::Quant && n.children[0].children.empty()) {
      QuantLabelInfo info = quant_label_info(n.label);
      OptNode type;
      bool typed = info.typed && n.children.size() == 3;
      if (typed) type = walk(n.children[1], false);
      size_t scope_mark = env.size();
      OptNode var = n.children[0];
      var.label = fresh(var.label);
      OptNode body = walk(n.children.back(), false);
      env.resize(scope_mark);
      if (typed)
        out.children = {std::move(var), std::move(type), std::move(body)};
      else
        out.children = {std::move(var), std::move(body)};
      return out;
    }
    for (const OptNode& c : n.children) out.children.push_back(walk(c, false));
    return out;
  }
};

OperatorTree canonicalize_scoped(const OperatorTree& tree) {
  ScopedCanon canon;
  return OperatorTree(canon.walk(tree.root(), true));
}

}  // namespace

OperatorTree canonicalize(const OperatorTree& tree, AlphaMode mode) {
  switch (mode) {
    case AlphaMode::RenameOnly: return canonicalize_rename_only(tree);
    case AlphaMode::Scoped: return canonicalize_scoped(tree);
    default: return tree;
  }
}

GeneralizedTransformation alpha_transformation(AlphaMode mode) {
  GeneralizedTransformation t;
  t.name = mode == AlphaMode::Scoped ? "alpha-conversion(scoped)"
                                     : "alpha-conversion(rename-only)";
  t.cost = 0.0;
  t.canonicalizer = [mode](const OperatorTree& tree) {
    return canonicalize(tree, mode);
  };
  t.matcher = [mode](const SpecialTransformation& f) {
    return tree_equal(canonicalize(f.before, mode),
                      canonicalize(f.after, mode));
  };
  return t;
}

namespace {

bool same_shape_one_label_diff(const OptNode& a, const OptNode& b, int& diffs) {
  if (a.children.size() != b.children.size()) return false;
  if (a.label != b.label && ++diffs > 1) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!same_shape_one_label_diff(a.children[i], b.children[i], diffs))
      return false;
  return true;
}

OptNode delete_node_rec(const OptNode& n, int id) {
  OptNode out;
  out.label = n.label;
  for (const OptNode& c : n.children) {
    if (c.id == id) {
      // Splice the grandchildren into this child's position.
      for (const OptNode& gc : c.children) out.children.push_back(gc);
    } else {
      out.children.push_back(delete_node_rec(c, id));
    }
  }
  return out;
}

// All trees obtainable by deleting one node (children are spliced into the
// parent's child list in place). The root may be deleted only when it has a
// single child.
void single_deletions(const OptNode& root, std::vector<OptNode>& out) {
  OperatorTree indexed{OptNode(root)};
  if (indexed.root().children.size() == 1)
    out.push_back(indexed.root().children[0]);
  for (int id = 1; id < indexed.size(); ++id)
    out.push_back(delete_node_rec(indexed.root(), id));
}

}  // namespace

GeneralizedTransformation relabel_transformation(double cost) {
  GeneralizedTransformation t;
  t.name = "relabel";
  t.cost = cost;
  t.matcher = [](const SpecialTransformation& f) {
    int diffs = 0;
    return same_shape_one_label_diff(f.before.root(), f.after.root(), diffs) &&
           diffs == 1;
  };
  return t;
}

GeneralizedTransformation delete_transformation(double cost) {
  GeneralizedTransformation t;
  t.name = "delete";
  t.cost = cost;
  t.matcher = [](const SpecialTransformation& f) {
    std::vector<OptNode> candidates;
    single_deletions(f.before.root(), candidates);
    for (const OptNode& c : candidates)
      if (tree_equal(c, f.after.root())) return true;
    return false;
  };
  return t;
}

GeneralizedTransformation insert_transformation(double cost) {
  GeneralizedTransformation t;
  t.name = "insert";
  t.cost = cost;
  t.matcher = [](const SpecialTransformation& f) {
    std::vector<OptNode> candidates;
    single_deletions(f.after.root(), candidates);
    for (const OptNode& c : candidates)
      if (tree_equal(c, f.before.root())) return true;
    return false;
  };
  return t;
}

bool is_local_depiction(const SpecialTransformation& f,
                        const SpecialTransformation& g) {
  for (const SubtreeRef& u : enumerate_subtrees(g.before)) {
    if (!tree_equal(g.before.find(u.node_id), f.before.root())) continue;
    for (const SubtreeRef& v : enumerate_subtrees(g.after)) {
      if (!tree_equal(g.after.find(v.node_id), f.after.root())) continue;
      if (tree_equal(quotient(g.before, u.node_id),
                     quotient(g.after, v.node_id)))
        return true;
    }
  }
  return false;
}

namespace {

// Preorder ids with subtree sizes, for ancestor tests on original ids.
std::vector<int> subtree_sizes(const OperatorTree& t) {
  std::vector<int> sizes(t.size(), 0);
  struct W {
    std::vector<int>& sizes;
    int walk(const OptNode& n) {
      int s = 1;
      for (const OptNode& c : n.children) s += walk(c);
      sizes[n.id] = s;
      return s;
    }
  } w{sizes};
  w.walk(t.root());
  return sizes;
}

OptNode multi_quotient_rec(const OptNode& n, const std::set<int>& ids) {
  if (ids.count(n.id)) return OptNode{kPlaceholder, {}, -1};
  OptNode out;
  out.label = n.label;
  for (const OptNode& c : n.children)
    out.children.push_back(multi_quotient_rec(c, ids));
  return out;
}

// All antichains (no node an ancestor of another) of node ids.
void antichains(const OperatorTree& t, const std::vector<int>& sizes,
                std::vector<std::set<int>>& out) {
  int n = t.size();
  std::vector<int> stack;
  // Backtracking over ids in increasing (preorder) order.
  std::function<void(int)> rec = [&](int next) {
    out.emplace_back(stack.begin(), stack.end());
    for (int id = next; id < n; ++id) {
      bool ok = true;
      for (int prev : stack)
        if (id < prev + sizes[prev]) { ok = false; break; }  // prev ancestor
      if (!ok) continue;
      stack.push_back(id);
      rec(id + 1);
      stack.pop_back();
    }
  };
  rec(0);
}

std::vector<std::string> shape_multiset(const OperatorTree& t,
                                        const std::set<int>& ids) {
  std::vector<std::string> shapes;
  for (int id : ids) {
    OperatorTree sub{OptNode(t.find(id))};
    shapes.push_back(to_oneline(sub));
  }
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

}  // namespace

bool is_colocal_depiction(const SpecialTransformation& f,
                          const SpecialTransformation& g, int size_bound) {
  if (g.before.size() > size_bound || g.after.size() > size_bound)
    throw SizeLimit("co-local depiction search exceeds the size bound");
  std::vector<int> sizes_b = subtree_sizes(g.before);
  std::vector<int> sizes_a = subtree_sizes(g.after);
  std::vector<std::set<int>> chains_b, chains_a;
  antichains(g.before, sizes_b, chains_b);
  antichains(g.after, sizes_a, chains_a);

  for (const auto& sb : chains_b) {
    OperatorTree qb(multi_quotient_rec(g.before.root(), sb));
    if (!tree_equal(qb, f.before)) continue;
    std::vector<std::string> shapes_b = shape_multiset(g.before, sb);
    for (const auto& sa : chains_a) {
      if (sa.size() != sb.size()) continue;
      if (shape_multiset(g.after, sa) != shapes_b) continue;
      OperatorTree qa(multi_quotient_rec(g.after.root(), sa));
      if (tree_equal(qa, f.after)) return true;
    }
  }
  return false;
}

void validate_disjoint(const TransformationSet& ts,
                       const std::vector<SpecialTransformation>& corpus) {
  std::vector<GeneralizedTransformation> members = ts.transformations;
  size_t custom_count = members.size();
  if (ts.include_dumb_ops) {
    members.push_back(insert_transformation(ts.dumb_costs.insert_cost));
    members.push_back(delete_transformation(ts.dumb_costs.delete_cost));
    members.push_back(relabel_transformation(ts.dumb_costs.relabel_cost));
  }
  for (const SpecialTransformation& probe : corpus) {
    std::vector<size_t> hits;
    bool zero_cost_hit = false;
    for (size_t i = 0; i < members.size(); ++i) {
      bool is_dumb = i >= custom_count;
      if (is_dumb && zero_cost_hit) continue;  // fallback suppressed
      if (members[i].matcher && members[i].matcher(probe)) {
        hits.push_back(i);
        if (members[i].cost == 0.0) zero_cost_hit = true;
      }
    }
    if (hits.size() > 1) {
      throw std::invalid_argument(
          "transformation set is not disjoint: `" + members[hits[0]].name +
          "` and `" + members[hits[1]].name + "` match the same probe");
    }
  }
}

double gted_distance(const OperatorTree& t1, const OperatorTree& t2,
                     const TransformationSet& ts) {
  // Candidate canonical views: the raw trees plus one view per zero-cost
  // canonicalizing transformation. Taking the minimum over views keeps the
  // distance monotone in the transformation set.
  std::vector<std::pair<OperatorTree, OperatorTree>> views;
  views.emplace_back(t1, t2);
  for (const GeneralizedTransformation& g : ts.transformations)
    if (g.cost == 0.0 && g.canonicalizer)
      views.emplace_back(g.canonicalizer(t1), g.canonicalizer(t2));

  if (!ts.include_dumb_ops) {
    for (const auto& [a, b] : views)
      if (tree_equal(a, b)) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : views)
    best = std::min(best, ted_distance(a, b, ts.dumb_costs));
  return best;
}

std::optional<double> similarity(const OperatorTree& t1,
                                 const OperatorTree& t2,
                                 const TransformationSet& ts,
                                 const DecisionConfig& config) {
  double d = gted_distance(t1, t2, ts);
  if (std::isinf(d)) return std::nullopt;
  double s = 1.0 - d / std::max(t1.size(), t2.size());
  if (config.clamp_negative && s < 0.0) s = 0.0;
  return s;
}

bool decide(const OperatorTree& t1, const OperatorTree& t2,
            const TransformationSet& ts, const DecisionConfig& config) {
  std::optional<double> s = similarity(t1, t2, ts, config);
  return s.has_value() && *s > config.theta;
}

TransformationSet default_transformation_set(AlphaMode alpha,
                                             bool include_dumb_ops) {
  TransformationSet ts;
  if (alpha != AlphaMode::Off)
    ts.transformations.push_back(alpha_transformation(alpha));
  ts.include_dumb_ops = include_dumb_ops;
  return ts;
}

}  // namespace gted
