#pragma once

#include "envymin/connected.hpp"
#include "envymin/oracle.hpp"

namespace envymin {

inline constexpr long long kDefaultOrderingBudget = 10000000;
inline constexpr long long kDefaultWindowBudget = 10000000;
inline constexpr long long kDefaultStateBudget = 30000000;

// Which contiguous run of sorted values each component received.
struct BlockAssignment {
  std::vector<int> order;                  // component ids in block order
  std::vector<std::pair<int, int>> spans;  // spans[component id] = (start, size)
};

// Disjoint unions drawn from one strongly separable family (all paths, all
// cycles, all stars, or cliques of one size): some optimum hands every
// component a contiguous run of sorted values, so trying every distinct
// component ordering with the family solver inside each block is exact.
// Interchangeable components (same size) are enumerated once. Refuses when
// the distinct-ordering count exceeds the budget. Equal-envy orderings
// resolve to the lexicographically smallest span list.
SolveResult solve_union_by_ordering(const Graph& g, const ValueProfile& p,
                                    long long budget = kDefaultOrderingBudget,
                                    BlockAssignment* blocks = nullptr);

// Disjoint paths, t distinct lengths: DP over how many blocks of each length
// are already placed; the prefix length is implied, so there are
// prod(r_i + 1) states with t-way transitions. Refuses above state_budget.
SolveResult solve_union_paths_dp(const Graph& g, const ValueProfile& p,
                                 long long state_budget = kDefaultStateBudget,
                                 BlockAssignment* blocks = nullptr);

// Max degree 1 (k disjoint edges + m isolated vertices): DP over (edges
// placed, singles placed); each edge takes two consecutive sorted values.
SolveResult solve_matching_graph(const Graph& g, const ValueProfile& p,
                                 BlockAssignment* blocks = nullptr);

// r cliques of one size q: the sorted values split into r consecutive blocks.
SolveResult solve_equal_cliques(const Graph& g, const ValueProfile& p,
                                BlockAssignment* blocks = nullptr);

// Cliques of arbitrary sizes, largest first: the largest clique takes some
// contiguous window of the remaining value sequence, recurse on the rest
// (which keeps its sorted order but may now have gaps). Exact; the window
// choice product is capped by window_budget.
SolveResult solve_cliques_xp(const Graph& g, const ValueProfile& p,
                             long long window_budget = kDefaultWindowBudget);

}  // namespace envymin
