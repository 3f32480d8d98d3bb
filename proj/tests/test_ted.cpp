#include <doctest.h>

#include <random>

#include "gted/ted.hpp"
#include "test_support.hpp"

using namespace gted;
using testsupport::leaf;
using testsupport::node;
using testsupport::opt_of;

TEST_CASE("identical trees have distance zero") {
  OperatorTree t = opt_of("theorem t1 (x : Nat) : P x");
  CHECK(ted_distance(t, t) == 0.0);
  OperatorTree a(node("a", {leaf("b"), leaf("c")}));
  OperatorTree b(node("a", {leaf("b"), leaf("c")}));
  CHECK(ted_distance(a, b) == 0.0);
  CHECK(ted_bruteforce(a, b) == 0.0);
}

TEST_CASE("single relabel") {
  OperatorTree a(leaf("a"));
  OperatorTree b(leaf("b"));
  CHECK(ted_distance(a, b) == 1.0);
  CHECK(ted_bruteforce(a, b) == 1.0);
}

TEST_CASE("leaf vs 2-node chain with distinct labels") {
  OperatorTree a(leaf("a"));
  OperatorTree b(node("x", {leaf("y")}));
  CHECK(ted_bruteforce(a, b) == 2.0);  // relabel + insert
  CHECK(ted_distance(a, b) == 2.0);
}

TEST_CASE("extra child costs one insert") {
  OperatorTree a(node("+", {leaf("a"), leaf("b")}));
  OperatorTree b(node("+", {leaf("a"), leaf("c"), leaf("d")}));
  double dp = ted_distance(a, b);
  double bf = ted_bruteforce(a, b);
  CHECK(dp == bf);
  CHECK(dp == 2.0);  // relabel b->c, insert d
}

TEST_CASE("Fig 3 pair has distance 2 under unit costs") {
  OperatorTree t1 = opt_of("theorem t1 (x : Nat) : P x := by sorry");
  OperatorTree t2 = opt_of("theorem t2 (y : Nat) : P y := by sorry");
  CHECK(tree_size(t1) == 7);
  CHECK(tree_size(t2) == 7);
  CHECK(ted_distance(t1, t2) == 2.0);  // relabel x -> y twice
}

TEST_CASE("non-unit cost model is honored") {
  OperatorTree a(leaf("a"));
  OperatorTree b(leaf("b"));
  UnitCostModel cost;
  cost.relabel_cost = 0.25;
  CHECK(ted_distance(a, b, cost) == 0.25);
  // When relabel is more expensive than delete+insert, the DP takes the
  // cheaper route.
  cost.relabel_cost = 5.0;
  cost.insert_cost = 1.0;
  cost.delete_cost = 1.0;
  CHECK(ted_distance(a, b, cost) == 2.0);
  CHECK(ted_bruteforce(a, b, cost) == 2.0);
}

TEST_CASE("relabel hook overrides label comparison") {
  OperatorTree a(node("f", {leaf("x")}));
  OperatorTree b(node("f", {leaf("y")}));
  RelabelFn free_xy = [](const std::string& l, const std::string& r) {
    if (l == r) return 0.0;
    if ((l == "x" && r == "y") || (l == "y" && r == "x")) return 0.0;
    return 1.0;
  };
  CHECK(ted_distance(a, b) == 1.0);
  CHECK(ted_distance(a, b, UnitCostModel{}, free_xy) == 0.0);
}

TEST_CASE("bruteforce refuses oversized trees") {
  OperatorTree big = opt_of("theorem t1 (x : Nat) : P x");  // 7 nodes
  OperatorTree small(leaf("a"));
  CHECK_THROWS_AS(ted_bruteforce(big, small), SizeLimit);
  CHECK_THROWS_AS(ted_bruteforce(small, big), SizeLimit);
}

namespace {

// All ordered trees with exactly n nodes over the given alphabet.
std::vector<OptNode> all_trees(int n, const std::vector<std::string>& labels) {
  std::vector<OptNode> out;
  if (n <= 0) return out;
  // Shapes: root plus an ordered forest of subtree sizes summing to n-1.
  std::function<std::vector<std::vector<OptNode>>(int)> forests =
      [&](int total) -> std::vector<std::vector<OptNode>> {
    std::vector<std::vector<OptNode>> res;
    if (total == 0) {
      res.push_back({});
      return res;
    }
    for (int first = 1; first <= total; ++first) {
      for (const OptNode& head : all_trees(first, labels)) {
        for (const auto& rest : forests(total - first)) {
          std::vector<OptNode> f = {head};
          f.insert(f.end(), rest.begin(), rest.end());
          res.push_back(std::move(f));
        }
      }
    }
    return res;
  };
  for (const std::string& l : labels)
    for (auto& f : forests(n - 1)) out.push_back({l, f, -1});
  return out;
}

}  // namespace

TEST_CASE("oracle agreement, exhaustive over small trees") {
  // All pairs of trees with at most 3 nodes over {a,b}: still exhaustive
  // but cheap enough for the unit suite (the acceptance suite covers 4).
  std::vector<OptNode> trees;
  for (int n = 1; n <= 3; ++n)
    for (OptNode& t : all_trees(n, {"a", "b"})) trees.push_back(std::move(t));
  for (const OptNode& a : trees) {
    for (const OptNode& b : trees) {
      OperatorTree ta(a), tb(b);
      CHECK(ted_distance(ta, tb) == ted_bruteforce(ta, tb));
    }
  }
}

TEST_CASE("oracle agreement on random pairs") {
  std::mt19937 rng(7);
  std::vector<std::string> alphabet = {"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    OperatorTree a(testsupport::random_tree(rng, 6, alphabet));
    OperatorTree b(testsupport::random_tree(rng, 6, alphabet));
    CHECK(ted_distance(a, b) == ted_bruteforce(a, b));
  }
}

TEST_CASE("metric axioms on random small trees") {
  std::mt19937 rng(11);
  std::vector<std::string> alphabet = {"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    OperatorTree a(testsupport::random_tree(rng, 8, alphabet));
    OperatorTree b(testsupport::random_tree(rng, 8, alphabet));
    OperatorTree c(testsupport::random_tree(rng, 8, alphabet));
    double dab = ted_distance(a, b);
    double dba = ted_distance(b, a);
    double dac = ted_distance(a, c);
    double dbc = ted_distance(b, c);
    CHECK(ted_distance(a, a) == 0.0);
    CHECK(dab == dba);
    CHECK(dac <= dab + dbc + 1e-9);
    CHECK(dab <= tree_size(a) + tree_size(b));
    CHECK(dab >= 0.0);
  }
}

TEST_CASE("identity on every corpus tree") {
  for (const std::string& src : testsupport::load_corpus()) {
    OperatorTree t = opt_of(src);
    CHECK(ted_distance(t, t) == 0.0);
  }
}

TEST_CASE("symmetry on corpus pairs") {
  auto corpus = testsupport::load_corpus();
  for (size_t i = 0; i + 1 < corpus.size(); i += 2) {
    OperatorTree a = opt_of(corpus[i]);
    OperatorTree b = opt_of(corpus[i + 1]);
    CHECK(ted_distance(a, b) == ted_distance(b, a));
  }
}
