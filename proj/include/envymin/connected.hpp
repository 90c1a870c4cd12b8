#pragma once

#include "envymin/envy.hpp"

namespace envymin {

// Connected-family solvers on canonical vertex layouts (positions follow the
// family constructors in graph.hpp). Envy is always computed by evaluating
// the returned allocation, never by trusting closed-form index arithmetic.

// Sorted order along the path; optimum v_max - v_min, unique up to reversal.
SolveResult solve_path(const ValueProfile& p);

// Ascending around the cycle; optimum 2 (v_max - v_min). Needs n >= 3.
SolveResult solve_cycle(const ValueProfile& p);

// Center (vertex 0) gets the lower median: house floor((n+1)/2), 1-based,
// of the n sorted values. Spokes take the remaining houses ascending.
SolveResult solve_star(const ValueProfile& p);

// Every allocation of a clique costs the same under identical valuations.
SolveResult solve_clique(const ValueProfile& p);

// Envy of a clique whose sorted values are w: sum_k (2k - q - 1) w_k.
Rational clique_envy_sorted(const std::vector<Rational>& w);

// K_{r,s}, r >= s >= 1, positions 0..r-1 on the larger side. With d = r - s
// and m = floor(d/2): the m smallest and the d - m largest houses go to the
// larger side; each remaining consecutive pair splits across the sides (the
// split is forced when d is odd).
SolveResult solve_complete_bipartite(int r, int s, const ValueProfile& p);

// Optimal side-canonical allocations of K_{r,s} under distinct values:
// 2^s when r - s is even, exactly 1 when odd.
BigInt count_optima_bipartite(int r, int s);

// Complete graph, arbitrary valuations: reduce to a min-cost perfect
// matching with weight(i, h) = sum over h' != h of max(v_i(h') - v_i(h), 0).
SolveResult solve_complete_general(const ValueMatrix& m);

// Applies the family solver for cls to a connected graph with arbitrary
// vertex labels, mapping the canonical solution through the extracted
// structure (path order, cycle order, star center, bipartition).
SolveResult solve_classified(const Graph& g, const ComponentClass& cls, const ValueProfile& p);

}  // namespace envymin
