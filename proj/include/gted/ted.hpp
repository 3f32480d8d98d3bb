#pragma once

#include <functional>

#include "gted/opt.hpp"

namespace gted {

struct UnitCostModel {
  double insert_cost = 1.0;
  double delete_cost = 1.0;
  double relabel_cost = 1.0;  // relabeling to an identical label costs 0
};

class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relabel cost for a pair of labels; defaults to 0/relabel_cost on
// equality/inequality but can be overridden (the gted module folds
// zero-cost matches in through this hook).
using RelabelFn = std::function<double(const std::string&, const std::string&)>;

// Exact ordered tree edit distance via the keyroot/forest dynamic program.
double ted_distance(const OperatorTree& t1, const OperatorTree& t2,
                    const UnitCostModel& cost = {});
double ted_distance(const OperatorTree& t1, const OperatorTree& t2,
                    const UnitCostModel& cost, const RelabelFn& relabel);

// Exhaustive minimum over all valid edit mappings (ancestor- and
// sibling-order-preserving). Test oracle; trees must have at most 6 nodes.
double ted_bruteforce(const OperatorTree& t1, const OperatorTree& t2,
                      const UnitCostModel& cost = {});

}  // namespace gted
