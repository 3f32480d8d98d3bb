#include <doctest.h>

#include <cmath>
#include <random>

#include "gted/gted.hpp"
#include "test_support.hpp"

using namespace gted;
using testsupport::leaf;
using testsupport::node;
using testsupport::opt_of;

namespace {

SpecialTransformation pair_of(const std::string& a, const std::string& b) {
  return {opt_of(a), opt_of(b)};
}

}  // namespace

TEST_CASE("scoped canonicalization replaces bound variables positionally") {
  OperatorTree t1 = opt_of("theorem t1 (x : Nat) : P x");
  OperatorTree t2 = opt_of("theorem t2 (y : Nat) : P y");
  OperatorTree c1 = canonicalize(t1, AlphaMode::Scoped);
  OperatorTree c2 = canonicalize(t2, AlphaMode::Scoped);
  CHECK(tree_equal(c1, c2));
  CHECK(to_oneline(c1) == "thm(_ : _(#1, Nat), _ _(P, #1))");
  // Free names are untouched.
  CHECK(to_oneline(canonicalize(opt_of("theorem thm : P x"),
                                AlphaMode::Scoped)) == "thm(_ _(P, x))");
}

TEST_CASE("scoped canonicalization respects shadowing") {
  // λx.(λx.x) y z — the inner x overwrites the outer one.
  OperatorTree t = opt_of("theorem thm : (λ x, (λ x, x) y z) = z");
  std::string canon = to_oneline(canonicalize(t, AlphaMode::Scoped));
  // Inner occurrences bind to the inner λ (#2); the outer #1 is unused.
  CHECK(canon ==
        "thm(_ = _(λ _, _(#1, _ _(_ _(λ _, _(#2, #2), y), z)), z))");
}

TEST_CASE("scoped canonicalization resolves binder types in outer scope") {
  OperatorTree a = opt_of("theorem thm (x : T) (h : P x) : Q x");
  OperatorTree b = opt_of("theorem thm (y : T) (g : P y) : Q y");
  CHECK(tree_equal(canonicalize(a, AlphaMode::Scoped),
                   canonicalize(b, AlphaMode::Scoped)));
}

TEST_CASE("alpha matcher accepts the Fig 3 pair in both modes") {
  SpecialTransformation f = pair_of("theorem t1 (x : Nat) : P x",
                                    "theorem t2 (y : Nat) : P y");
  GeneralizedTransformation scoped = alpha_transformation(AlphaMode::Scoped);
  GeneralizedTransformation rename =
      alpha_transformation(AlphaMode::RenameOnly);
  CHECK(scoped.cost == 0.0);
  CHECK(rename.cost == 0.0);
  CHECK(scoped.matcher(f));
  CHECK(rename.matcher(f));
}

TEST_CASE("alpha matcher accepts the identity renaming") {
  SpecialTransformation f = pair_of("theorem t1 (x : Nat) : P x",
                                    "theorem t1 (x : Nat) : P x");
  CHECK(alpha_transformation(AlphaMode::Scoped).matcher(f));
  CHECK(alpha_transformation(AlphaMode::RenameOnly).matcher(f));
}

TEST_CASE("scoped mode distinguishes shadowed occurrences") {
  // Renaming only the outer (unused) binder is a scope-respecting renaming.
  SpecialTransformation outer =
      pair_of("theorem thm : (λ x, (λ x, x) y z) = z",
              "theorem thm : (λ w, (λ x, x) y z) = z");
  CHECK(alpha_transformation(AlphaMode::Scoped).matcher(outer));
  // Rename-only tracks names, not scopes, so the uniform-renaming view of
  // the same pair fails (the two λs share the name x on the left only).
  CHECK(!alpha_transformation(AlphaMode::RenameOnly).matcher(outer));
  // Renaming only the inner binder also matches in scoped mode.
  SpecialTransformation inner =
      pair_of("theorem thm : (λ x, (λ x, x) y z) = z",
              "theorem thm : (λ x, (λ w, w) y z) = z");
  CHECK(alpha_transformation(AlphaMode::Scoped).matcher(inner));
  // Touching a free variable is not an α-renaming.
  SpecialTransformation touches_free =
      pair_of("theorem thm : (λ x, (λ x, x) y z) = z",
              "theorem thm : (λ x, (λ x, x) y w) = w");
  CHECK(!alpha_transformation(AlphaMode::Scoped).matcher(touches_free));
}

TEST_CASE("dumb-op matchers") {
  GeneralizedTransformation rel = relabel_transformation();
  GeneralizedTransformation ins = insert_transformation();
  GeneralizedTransformation del = delete_transformation();

  SpecialTransformation one_relabel = {OperatorTree(node("f", {leaf("x")})),
                                       OperatorTree(node("f", {leaf("y")}))};
  CHECK(rel.matcher(one_relabel));
  CHECK(!ins.matcher(one_relabel));
  CHECK(!del.matcher(one_relabel));

  SpecialTransformation two_relabels = {OperatorTree(node("f", {leaf("x")})),
                                        OperatorTree(node("g", {leaf("y")}))};
  CHECK(!rel.matcher(two_relabels));

  SpecialTransformation one_insert = {
      OperatorTree(node("f", {leaf("x")})),
      OperatorTree(node("f", {leaf("x"), leaf("y")}))};
  CHECK(ins.matcher(one_insert));
  CHECK(!del.matcher(one_insert));

  // Deleting an internal node splices its children into the parent.
  SpecialTransformation splice = {
      OperatorTree(node("f", {node("g", {leaf("a"), leaf("b")})})),
      OperatorTree(node("f", {leaf("a"), leaf("b")}))};
  CHECK(del.matcher(splice));
  CHECK(ins.matcher({splice.after, splice.before}));
}

TEST_CASE("local depiction examples") {
  SpecialTransformation xy = {OperatorTree(leaf("x")), OperatorTree(leaf("y"))};
  SpecialTransformation pxy = {OperatorTree(node("P", {leaf("x")})),
                               OperatorTree(node("P", {leaf("y")}))};
  SpecialTransformation pq = {OperatorTree(node("P", {leaf("x")})),
                              OperatorTree(node("Q", {leaf("y")}))};
  CHECK(is_local_depiction(pxy, pxy));  // f == g
  CHECK(is_local_depiction(xy, pxy));   // quotients both P(_)
  CHECK(!is_local_depiction(xy, pq));   // quotients P(_) vs Q(_)
}

TEST_CASE("local depiction is a partial order on small transformations") {
  std::vector<SpecialTransformation> fs;
  fs.push_back({OperatorTree(leaf("x")), OperatorTree(leaf("y"))});
  fs.push_back({OperatorTree(node("P", {leaf("x")})),
                OperatorTree(node("P", {leaf("y")}))});
  fs.push_back({OperatorTree(node("Q", {node("P", {leaf("x")}), leaf("c")})),
                OperatorTree(node("Q", {node("P", {leaf("y")}), leaf("c")}))});
  fs.push_back({OperatorTree(leaf("a")), OperatorTree(leaf("b"))});
  // Reflexivity.
  for (const auto& f : fs) CHECK(is_local_depiction(f, f));
  // Transitivity: fs[0] ≤ fs[1] ≤ fs[2] implies fs[0] ≤ fs[2].
  CHECK(is_local_depiction(fs[0], fs[1]));
  CHECK(is_local_depiction(fs[1], fs[2]));
  CHECK(is_local_depiction(fs[0], fs[2]));
  // Antisymmetry up to structural equality: mutual depiction of
  // structurally distinct transformations does not occur here.
  CHECK(!is_local_depiction(fs[1], fs[0]));
  CHECK(!is_local_depiction(fs[3], fs[0]));
}

TEST_CASE("co-local depiction examples") {
  SpecialTransformation g = pair_of("theorem t1 (x : Nat) : P x",
                                    "theorem t2 (y : Nat) : P y");
  // m = 0 reduces to equality.
  CHECK(is_colocal_depiction(g, g));
  // Quotient the common `Nat` subtree on both sides.
  auto nat_id = [](const OperatorTree& t) {
    return t.root().children[0].children[1].id;
  };
  SpecialTransformation f = {quotient(g.before, nat_id(g.before)),
                             quotient(g.after, nat_id(g.after))};
  CHECK(is_colocal_depiction(f, g));
  // No common subtrees and f != g.
  SpecialTransformation h = {OperatorTree(leaf("a")), OperatorTree(leaf("b"))};
  SpecialTransformation k = {OperatorTree(node("c", {leaf("d")})),
                             OperatorTree(node("e", {leaf("g")}))};
  CHECK(!is_colocal_depiction(h, k));
  // Bound enforcement.
  SpecialTransformation big = pair_of(
      "theorem thm (a b : ℕ) : a + b = b + a",
      "theorem thm (a b : ℕ) : a + b = b + a");
  CHECK_THROWS_AS(is_colocal_depiction(big, big, 5), SizeLimit);
}

TEST_CASE("gted_distance of a tree with itself is zero") {
  for (const std::string& src : testsupport::load_corpus()) {
    OperatorTree t = opt_of(src);
    CHECK(gted_distance(t, t, default_transformation_set()) == 0.0);
    CHECK(gted_distance(t, t,
                        default_transformation_set(AlphaMode::Scoped)) == 0.0);
  }
}

TEST_CASE("Fig 3 pair distances") {
  OperatorTree t1 = opt_of("theorem t1 (x : Nat) : P x := by sorry");
  OperatorTree t2 = opt_of("theorem t2 (y : Nat) : P y := by sorry");

  // Alpha-conversion only, dumb ops off: zero cost.
  TransformationSet alpha_only =
      default_transformation_set(AlphaMode::Scoped, false);
  CHECK(gted_distance(t1, t2, alpha_only) == 0.0);

  // Dumb ops only at unit cost: relabel x -> y twice.
  TransformationSet dumb = default_transformation_set(AlphaMode::Off, true);
  CHECK(gted_distance(t1, t2, dumb) == 2.0);
  std::optional<double> s = similarity(t1, t2, dumb);
  REQUIRE(s.has_value());
  CHECK(*s == doctest::Approx(1.0 - 2.0 / 7.0));
}

TEST_CASE("infinite distance when no transformation applies") {
  OperatorTree a = opt_of("theorem thm : 1 = 1");
  OperatorTree b = opt_of("theorem thm : 1 = 2");
  TransformationSet none = default_transformation_set(AlphaMode::Off, false);
  CHECK(std::isinf(gted_distance(a, b, none)));
  CHECK(!similarity(a, b, none).has_value());
  DecisionConfig any_theta;
  any_theta.theta = 0.0;
  CHECK(!decide(a, b, none, any_theta));  // negative result directly
}

TEST_CASE("similarity boundaries and clamping") {
  OperatorTree a(leaf("a"));
  OperatorTree b(leaf("b"));
  TransformationSet ts = default_transformation_set();
  // d == max size: similarity 0.
  CHECK(*similarity(a, b, ts) == 0.0);
  // Identical: 1.
  CHECK(*similarity(a, a, ts) == 1.0);
  // Expensive costs push raw similarity negative; clamp keeps it at 0.
  ts.dumb_costs.relabel_cost = 10.0;
  ts.dumb_costs.insert_cost = 10.0;
  ts.dumb_costs.delete_cost = 10.0;
  CHECK(*similarity(a, b, ts) == 0.0);
  DecisionConfig no_clamp;
  no_clamp.clamp_negative = false;
  CHECK(*similarity(a, b, ts, no_clamp) == doctest::Approx(-9.0));
}

TEST_CASE("decision threshold is strict") {
  OperatorTree t1 = opt_of("theorem t1 (x : Nat) : P x");
  OperatorTree t2 = opt_of("theorem t2 (y : Nat) : P y");
  TransformationSet dumb = default_transformation_set();
  double sim = *similarity(t1, t2, dumb);  // 1 - 2/7
  DecisionConfig at_boundary;
  at_boundary.theta = sim;
  CHECK(!decide(t1, t2, dumb, at_boundary));  // strict inequality
  DecisionConfig below;
  below.theta = sim - 1e-9;
  CHECK(decide(t1, t2, dumb, below));
  DecisionConfig high;
  high.theta = 0.9;
  CHECK(decide(t1, t1, dumb, high));  // similarity 1.0
}

TEST_CASE("decide is antitone in theta") {
  auto corpus = testsupport::load_corpus();
  TransformationSet ts = default_transformation_set(AlphaMode::Scoped);
  for (size_t i = 0; i + 1 < corpus.size(); i += 2) {
    OperatorTree a = opt_of(corpus[i]);
    OperatorTree b = opt_of(corpus[i + 1]);
    bool prev = true;
    for (double theta : {0.0, 0.2, 0.4, 0.6, 0.8, 0.99}) {
      DecisionConfig cfg;
      cfg.theta = theta;
      bool d = decide(a, b, ts, cfg);
      CHECK((prev || !d));  // once false, stays false as theta grows
      prev = d;
    }
  }
}

TEST_CASE("GTED reduces to TED with dumb ops only") {
  auto corpus = testsupport::load_corpus();
  TransformationSet dumb = default_transformation_set(AlphaMode::Off, true);
  for (size_t i = 0; i < corpus.size(); ++i) {
    OperatorTree a = opt_of(corpus[i]);
    OperatorTree b = opt_of(corpus[(i + 1) % corpus.size()]);
    CHECK(gted_distance(a, b, dumb) == ted_distance(a, b));
  }
}

TEST_CASE("adding a zero-cost transformation never increases the distance") {
  auto corpus = testsupport::load_corpus();
  TransformationSet dumb = default_transformation_set(AlphaMode::Off, true);
  TransformationSet with_alpha =
      default_transformation_set(AlphaMode::Scoped, true);
  for (size_t i = 0; i < corpus.size(); ++i) {
    OperatorTree a = opt_of(corpus[i]);
    OperatorTree b = opt_of(corpus[(i + 1) % corpus.size()]);
    CHECK(gted_distance(a, b, with_alpha) <= gted_distance(a, b, dumb));
  }
}

TEST_CASE("alpha invariance on scope-respecting renamings") {
  TransformationSet ts = default_transformation_set(AlphaMode::Scoped);
  std::vector<std::pair<std::string, std::string>> renamed = {
      {"theorem t1 (x : Nat) : P x", "theorem t2 (y : Nat) : P y"},
      {"theorem thm (a b : ℕ) : a + b = b + a",
       "theorem thm (u v : ℕ) : u + v = v + u"},
      {"theorem thm : ∀ x : ℕ, ∃ y : ℕ, y > x",
       "theorem thm : ∀ n : ℕ, ∃ m : ℕ, m > n"},
      {"theorem thm (f g : ℝ → ℝ) : ∀ x, f x = g x",
       "theorem thm (g h : ℝ → ℝ) : ∀ t, g t = h t"},
  };
  for (const auto& [lhs, rhs] : renamed) {
    OperatorTree a = opt_of(lhs);
    OperatorTree b = opt_of(rhs);
    CHECK(gted_distance(a, b, ts) == 0.0);
    CHECK(*similarity(a, b, ts) == 1.0);
  }
}

TEST_CASE("validate_disjoint accepts the default set") {
  std::vector<SpecialTransformation> probes;
  auto corpus = testsupport::load_corpus();
  for (size_t i = 0; i + 1 < corpus.size(); ++i)
    probes.push_back(pair_of(corpus[i], corpus[i + 1]));
  probes.push_back(pair_of("theorem t1 (x : Nat) : P x",
                           "theorem t2 (y : Nat) : P y"));
  CHECK_NOTHROW(
      validate_disjoint(default_transformation_set(AlphaMode::Scoped),
                        probes));
  CHECK_NOTHROW(validate_disjoint(default_transformation_set(), probes));
}

TEST_CASE("validate_disjoint rejects overlapping transformation sets") {
  TransformationSet both;
  both.transformations.push_back(alpha_transformation(AlphaMode::Scoped));
  both.transformations.push_back(alpha_transformation(AlphaMode::RenameOnly));
  std::vector<SpecialTransformation> probes = {
      pair_of("theorem t1 (x : Nat) : P x", "theorem t2 (y : Nat) : P y")};
  CHECK_THROWS_AS(validate_disjoint(both, probes), std::invalid_argument);
}

TEST_CASE("similarity range on random corpus pairs") {
  auto corpus = testsupport::load_corpus();
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick(0, corpus.size() - 1);
  TransformationSet ts = default_transformation_set(AlphaMode::Scoped);
  for (int i = 0; i < 100; ++i) {
    OperatorTree a = opt_of(corpus[pick(rng)]);
    OperatorTree b = opt_of(corpus[pick(rng)]);
    std::optional<double> s = similarity(a, b, ts);
    REQUIRE(s.has_value());
    CHECK(*s >= 0.0);
    CHECK(*s <= 1.0);
  }
}
