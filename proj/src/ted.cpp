#include "gted/ted.hpp"

#include <algorithm>
#include <vector>

namespace gted {

namespace {

// Postorder flattening with leftmost-leaf-descendant indices (Zhang-Shasha).
struct Flat {
  std::vector<const OptNode*> nodes;  // postorder
  std::vector<int> lld;               // postorder index of leftmost leaf
  std::vector<int> keyroots;

  explicit Flat(const OptNode& root) {
    walk(root);
    std::vector<bool> seen(nodes.size(), false);
    for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
      if (!seen[lld[i]]) {
        keyroots.push_back(i);
        seen[lld[i]] = true;
      }
    }
    std::sort(keyroots.begin(), keyroots.end());
  }

 private:
  int walk(const OptNode& n) {
    int first_leaf = -1;
    for (const OptNode& c : n.children) {
      int l = walk(c);
      if (first_leaf < 0) first_leaf = l;
    }
    int idx = static_cast<int>(nodes.size());
    if (first_leaf < 0) first_leaf = idx;
    nodes.push_back(&n);
    lld.push_back(first_leaf);
    return first_leaf;
  }
};

}  // namespace

double ted_distance(const OperatorTree& t1, const OperatorTree& t2,
                    const UnitCostModel& cost, const RelabelFn& relabel) {
  Flat a(t1.root()), b(t2.root());
  int n1 = static_cast<int>(a.nodes.size());
  int n2 = static_cast<int>(b.nodes.size());
  std::vector<std::vector<double>> td(n1, std::vector<double>(n2, 0.0));

  for (int i : a.keyroots) {
    for (int j : b.keyroots) {
      int ioff = a.lld[i] - 1;
      int joff = b.lld[j] - 1;
      int m = i - a.lld[i] + 2;
      int n = j - b.lld[j] + 2;
      std::vector<std::vector<double>> fd(m, std::vector<double>(n, 0.0));
      for (int x = 1; x < m; ++x) fd[x][0] = fd[x - 1][0] + cost.delete_cost;
      for (int y = 1; y < n; ++y) fd[0][y] = fd[0][y - 1] + cost.insert_cost;
      for (int x = 1; x < m; ++x) {
        for (int y = 1; y < n; ++y) {
          int node1 = x + ioff;
          int node2 = y + joff;
          if (a.lld[node1] == a.lld[i] && b.lld[node2] == b.lld[j]) {
            double rel = relabel(a.nodes[node1]->label, b.nodes[node2]->label);
            fd[x][y] = std::min({fd[x - 1][y] + cost.delete_cost,
                                 fd[x][y - 1] + cost.insert_cost,
                                 fd[x - 1][y - 1] + rel});
            td[node1][node2] = fd[x][y];
          } else {
            int p = a.lld[node1] - 1 - ioff;
            int q = b.lld[node2] - 1 - joff;
            fd[x][y] = std::min({fd[x - 1][y] + cost.delete_cost,
                                 fd[x][y - 1] + cost.insert_cost,
                                 fd[p][q] + td[node1][node2]});
          }
        }
      }
    }
  }
  return td[n1 - 1][n2 - 1];
}

double ted_distance(const OperatorTree& t1, const OperatorTree& t2,
                    const UnitCostModel& cost) {
  return ted_distance(t1, t2, cost,
                      [&cost](const std::string& x, const std::string& y) {
                        return x == y ? 0.0 : cost.relabel_cost;
                      });
}

namespace {

// Preorder flattening with subtree sizes for ancestor tests.
struct Pre {
  std::vector<const OptNode*> nodes;
  std::vector<int> subsize;

  explicit Pre(const OptNode& root) { walk(root); }

  bool ancestor(int i, int k) const { return i < k && k < i + subsize[i]; }

 private:
  int walk(const OptNode& n) {
    int idx = static_cast<int>(nodes.size());
    nodes.push_back(&n);
    subsize.push_back(0);
    int sz = 1;
    for (const OptNode& c : n.children) sz += walk(c);
    subsize[idx] = sz;
    return sz;
  }
};

struct BruteState {
  const Pre& a;
  const Pre& b;
  const UnitCostModel& cost;
  std::vector<std::pair<int, int>> mapping;
  double best;

  // Valid Tai mapping: one-to-one, preorder-order-preserving, ancestor
  // relation preserved in both directions.
  bool compatible(int i, int j) const {
    for (auto [pi, pj] : mapping) {
      if (pj == j) return false;
      if (pj > j) return false;  // pairs added with increasing i need j order
      if (a.ancestor(pi, i) != b.ancestor(pj, j)) return false;
    }
    return true;
  }

  void search(int i, double relabel_sum, int deleted) {
    int n1 = static_cast<int>(a.nodes.size());
    int n2 = static_cast<int>(b.nodes.size());
    if (i == n1) {
      double total = relabel_sum + deleted * cost.delete_cost +
                     (n2 - static_cast<int>(mapping.size())) * cost.insert_cost;
      best = std::min(best, total);
      return;
    }
    double lower = relabel_sum + deleted * cost.delete_cost;
    if (lower >= best) return;
    // Option 1: delete node i.
    search(i + 1, relabel_sum, deleted + 1);
    // Option 2: map node i to some node j.
    for (int j = 0; j < n2; ++j) {
      if (!compatible(i, j)) continue;
      double rel = a.nodes[i]->label == b.nodes[j]->label ? 0.0
                                                          : cost.relabel_cost;
      mapping.emplace_back(i, j);
      search(i + 1, relabel_sum + rel, deleted);
      mapping.pop_back();
    }
  }
};

}  // namespace

double ted_bruteforce(const OperatorTree& t1, const OperatorTree& t2,
                      const UnitCostModel& cost) {
  if (t1.size() > 6 || t2.size() > 6)
    throw SizeLimit("ted_bruteforce is limited to trees with at most 6 nodes");
  Pre a(t1.root()), b(t2.root());
  BruteState st{a, b, cost, {},
                t1.size() * cost.delete_cost + t2.size() * cost.insert_cost};
  st.search(0, 0.0, 0);
  return st.best;
}

}  // namespace gted
