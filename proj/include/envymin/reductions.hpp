#pragma once

#include "envymin/instance.hpp"
#include "envymin/oracle.hpp"

namespace envymin {

// Minimum Bisection reduces to this problem: half the values cluster near 0,
// half near 1, so cross-cluster edges pay about 1 and the optimal envy tracks
// the optimal bisection width.

// n/2 values spaced eps/n apart from 0, n/2 more from 1. Default
// eps = 1/n^3. Keeps the instance's graph; n must be even.
Instance gen_from_bisection(const Graph& g, std::optional<Rational> eps = std::nullopt);

// Exhaustive minimum over balanced vertex partitions of the cut size.
int min_bisection_exhaustive(const Graph& g);

struct BisectionCheck {
  bool holds = false;          // the equivalence came out right for this k
  bool bisection_at_most_k = false;
  bool envy_within_threshold = false;
  int min_bisection = 0;
  Rational min_envy;
  Rational threshold;          // k + n^2 eps
};

// Verifies (bisection <= k) <=> (optimal envy <= k + n^2 eps) on one graph
// by brute force on both sides.
BisectionCheck verify_bisection_small(const Graph& g, int k,
                                      std::optional<Rational> eps = std::nullopt,
                                      long long budget = kDefaultBudget);

// Unary Bin Packing reduces likewise: one cluster of B values per bin, items
// become connected graphs that must land inside a single cluster.

struct BinPackingInput {
  std::vector<int> items;  // sizes, all >= 1
  int bin_capacity = 0;    // B
  int bins = 0;            // k
};

enum class ItemFamily { Paths, Cycles, Stars, Cliques };

// Value j (1-based) is floor((j-1)/B) C + j eps/n: k clusters of B values,
// strictly increasing, cluster width below eps, inter-cluster gaps above C.
// Each item of size t becomes one family graph on t vertices; isolated
// vertices pad up to n = kB. Defaults: eps = 1/n^3, C = 4n(width + 1).
Instance gen_from_binpacking(const BinPackingInput& input, ItemFamily family,
                             std::optional<Rational> gap = std::nullopt,
                             std::optional<Rational> eps = std::nullopt);

// Exhaustive feasibility of packing the items into k bins of capacity B.
bool pack_feasible_exhaustive(const BinPackingInput& input);

struct BinPackingCheck {
  bool holds = false;      // packable <=> envy below the gap
  bool packable = false;
  bool envy_below_gap = false;
  Rational min_envy;
  Rational gap;            // C
};

// Verifies (packable) <=> (optimal envy < C) on one input by brute force.
BinPackingCheck verify_binpacking_small(const BinPackingInput& input, ItemFamily family,
                                        long long budget = kDefaultBudget);

}  // namespace envymin
