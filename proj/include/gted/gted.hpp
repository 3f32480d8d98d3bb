#pragma once

#include <functional>
#include <optional>

#include "gted/ted.hpp"

namespace gted {

// A pair of operator trees (before, after).
struct SpecialTransformation {
  OperatorTree before;
  OperatorTree after;
};

enum class AlphaMode { Off, RenameOnly, Scoped };

// A named family of special transformations with a decidable membership
// predicate and a cost. Zero-cost families carry a canonicalizer that maps
// trees to a normal form; two trees are related at zero cost iff their
// normal forms coincide.
struct GeneralizedTransformation {
  std::string name;
  std::function<bool(const SpecialTransformation&)> matcher;
  double cost = 1.0;
  std::function<OperatorTree(const OperatorTree&)> canonicalizer;
};

struct TransformationSet {
  std::vector<GeneralizedTransformation> transformations;
  bool include_dumb_ops = true;  // insert/delete/relabel fallbacks
  UnitCostModel dumb_costs;
};

struct DecisionConfig {
  double theta = 0.6;
  bool clamp_negative = true;
};

// Scope-canonical (or uniform-rename-canonical) form of a tree: bound
// variable leaves are replaced by positional names `#k`.
OperatorTree canonicalize(const OperatorTree& tree, AlphaMode mode);

// Zero-cost variable-renaming transformation. `RenameOnly` matches uniform
// leaf-label renamings of bound names without scope tracking; `Scoped`
// respects binder scope and shadowing.
GeneralizedTransformation alpha_transformation(AlphaMode mode);

// The classical single-node edit operations, exposed as generalized
// transformations for depiction tests and disjointness probing.
GeneralizedTransformation relabel_transformation(double cost = 1.0);
GeneralizedTransformation insert_transformation(double cost = 1.0);
GeneralizedTransformation delete_transformation(double cost = 1.0);

// f locally depicts g: f's trees embed as subtrees of g's and the
// surrounding quotient contexts coincide.
bool is_local_depiction(const SpecialTransformation& f,
                        const SpecialTransformation& g);

// f is obtained from g by quotienting away a disjoint list of common
// subtrees. Exponential search, bounded by `size_bound` nodes per tree.
bool is_colocal_depiction(const SpecialTransformation& f,
                          const SpecialTransformation& g,
                          int size_bound = 10);

// Pairwise disjointness probing on a fixture corpus: throws
// std::invalid_argument when two members match the same probe. Dumb-op
// fallbacks are suppressed on probes already matched at zero cost.
void validate_disjoint(const TransformationSet& ts,
                       const std::vector<SpecialTransformation>& corpus);

// +infinity when no transformation sequence exists (dumb ops disabled and
// the trees are not related by any zero-cost family).
double gted_distance(const OperatorTree& t1, const OperatorTree& t2,
                     const TransformationSet& ts);

// 1 - d/max(|T1|,|T2|), clamped below at 0 when configured; empty when the
// distance is infinite (normalization failure).
std::optional<double> similarity(const OperatorTree& t1,
                                 const OperatorTree& t2,
                                 const TransformationSet& ts,
                                 const DecisionConfig& config = {});

// True iff similarity is defined and strictly greater than theta.
bool decide(const OperatorTree& t1, const OperatorTree& t2,
            const TransformationSet& ts, const DecisionConfig& config = {});

// Convenience: dumb ops plus an optional alpha transformation.
TransformationSet default_transformation_set(AlphaMode alpha = AlphaMode::Off,
                                             bool include_dumb_ops = true);

}  // namespace gted
