#pragma once

#include "envymin/oracle.hpp"

#include <optional>

namespace envymin {

// Every internal node's value sits weakly between its two children's values
// (the median of the three under distinct values).
bool check_local_median(const RootedTree& t, const ValueProfile& p, const Allocation& alloc);

// One child's whole subtree lies strictly below the node's value and the
// other's strictly above, at every internal node.
bool check_global_median(const RootedTree& t, const ValueProfile& p, const Allocation& alloc);

struct MedianViolation {
  int node;
  bool above;  // node exceeds both children (else it undercuts both)
};

// Deepest violating internal node, ties to the smallest vertex id.
std::optional<MedianViolation> find_deepest_violation(const RootedTree& t, const ValueProfile& p,
                                                      const Allocation& alloc);

struct MedianStep {
  int node;
  Allocation next;
};

// Repairs the deepest violation with one cyclic transfer: walk down from the
// node along least-valued children while every child still values above the
// node (mirrored when the node sits above both children), then shift each
// house one step up the walk and sink the node's house to its end. Strictly
// lowers the subtree's envy and never raises the envy of any subtree that
// does not contain the node. nullopt when no violation remains.
std::optional<MedianStep> local_median_step(const RootedTree& t, const ValueProfile& p,
                                            const Allocation& alloc);

// Iterates local_median_step from a start allocation (identity by vertex id
// unless given) until no violation remains. Heuristic: local-median is
// necessary for some optimum, not sufficient. Caps at n^3 steps.
SolveResult local_median_fixpoint(const RootedTree& t, const ValueProfile& p,
                                  std::optional<Allocation> start = std::nullopt);

struct TreeExtremesRecord {
  Rational optimum;
  std::size_t optima_count = 0;
  bool truncated = false;
  bool extremes_on_leaves = false;  // some optimum puts both extreme houses on leaves
  bool holds = false;               // ...and the tree path between them is monotone
  std::optional<Allocation> witness;
};

// Scans every optimal allocation of a free tree for the extremes-on-leaves /
// monotone-path pattern.
TreeExtremesRecord experiment_tree_extremes(const Graph& tree, const ValueProfile& p,
                                            long long budget = kDefaultBudget);

}  // namespace envymin
