#pragma once

#include "envymin/graph.hpp"
#include "envymin/profile.hpp"

#include <string>
#include <vector>

namespace envymin {

// alloc[vertex] = house rank, 0-based into ValueProfile::values. A valid
// allocation is a permutation of 0..n-1.
using Allocation = std::vector<int>;

bool is_permutation(const Allocation& alloc, int n);
void require_allocation(const Allocation& alloc, int n);

// |v(house at u) - v(house at v)|: with identical valuations exactly one
// endpoint envies the other by the value gap.
Rational edge_envy(const ValueProfile& p, const Allocation& alloc, int u, int v);

// Sum of edge envies over the whole graph.
Rational total_envy(const Graph& g, const ValueProfile& p, const Allocation& alloc);

// General (possibly non-identical) valuations: each edge contributes
// max(v_u(house at v) - v_u(house at u), 0) plus the mirrored term. Houses are
// matrix columns here, no sorting involved.
Rational total_envy_general(const Graph& g, const ValueMatrix& m, const Allocation& alloc);

enum class Guarantee { Exact, Heuristic };

inline const char* to_string(Guarantee g) {
  return g == Guarantee::Exact ? "exact" : "heuristic";
}

struct SolveResult {
  Allocation assignment;
  Rational envy;
  std::string solver;
  Guarantee guarantee = Guarantee::Exact;
};

}  // namespace envymin
