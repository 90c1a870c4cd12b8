#pragma once

#include "envymin/envy.hpp"

#include <cstddef>
#include <vector>

namespace envymin {

inline constexpr long long kDefaultBudget = 3628800;  // 10!
inline constexpr std::size_t kDefaultOptimaCap = 2000000;

// n! clamped to LLONG_MAX.
long long permutation_count(int n);

// Exhaustive search over all n! allocations in lexicographic order with
// branch-and-bound pruning on the partial envy. Returns the optimum with the
// lexicographically smallest assignment. Refuses when n! exceeds the budget.
SolveResult brute_force(const Graph& g, const ValueProfile& p,
                        long long budget = kDefaultBudget);

struct OptimalSet {
  Rational envy;
  std::vector<Allocation> optima;  // lexicographic order
  bool truncated = false;
};

// All optimal allocations (two passes: bound, then collect). The list stops
// at max_optima and sets truncated instead of growing without bound.
OptimalSet enumerate_optima(const Graph& g, const ValueProfile& p,
                            long long budget = kDefaultBudget,
                            std::size_t max_optima = kDefaultOptimaCap);

enum class SymmetryKind { None, CycleDihedral, BipartiteSides };

struct Symmetry {
  SymmetryKind kind = SymmetryKind::None;
  int r = 0, s = 0;

  static Symmetry none() { return {}; }
  static Symmetry cycle_dihedral() { return {SymmetryKind::CycleDihedral}; }
  static Symmetry bipartite_sides(int r, int s) { return {SymmetryKind::BipartiteSides, r, s}; }
};

// Orbit representative of an allocation under the stated symmetry.
// CycleDihedral treats positions as cycle order and minimizes over the 2n
// rotations/reflections; BipartiteSides sorts within positions 0..r-1 and
// r..r+s-1; None is the identity. Two allocations canonicalize equal iff they
// are related by the symmetry.
Allocation canonicalize(const Allocation& alloc, const Symmetry& sym);

// Distinct canonical forms, sorted.
std::vector<Allocation> canonical_classes(const std::vector<Allocation>& allocs,
                                          const Symmetry& sym);

// seq[i] = alloc[positions[i]]; lines an allocation up with a traversal order
// (cycle order, path order) before canonicalizing or comparing.
Allocation arrange(const Allocation& alloc, const std::vector<int>& positions);

}  // namespace envymin
