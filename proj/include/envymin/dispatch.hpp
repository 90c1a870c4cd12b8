#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envymin/envy.hpp"
#include "envymin/instance.hpp"
#include "envymin/oracle.hpp"
#include "envymin/unions.hpp"

namespace envymin {

struct SolveOptions {
  long long budget = kDefaultBudget;                    // brute-force factorial cap
  long long ordering_budget = kDefaultOrderingBudget;   // distinct block orderings
  long long window_budget = kDefaultWindowBudget;       // clique window products
  long long state_budget = kDefaultStateBudget;         // paths DP states
  std::string solver = "auto";                          // force a specific solver
};

// Names accepted by SolveOptions::solver.
const std::vector<std::string>& solver_names();

// Routes the instance to the exact solver for its graph class: connected
// family solvers, the complete-graph matching solver for matrix valuations,
// and the union solvers for disjoint families. Anything without an exact
// solver runs brute force within the budget, then falls back to a heuristic
// (local median on rooted binary trees, pairwise-swap descent otherwise).
SolveResult solve_instance(const Instance& inst, const SolveOptions& opts = {});

// Steepest pairwise-swap descent from a start allocation (identity unless
// given). Deterministic: best improving swap each pass, lowest (i, j) on
// ties. Always reports Guarantee::Heuristic.
SolveResult solve_local_search(const Graph& g, const ValueProfile& p,
                               std::optional<Allocation> start = std::nullopt);

}  // namespace envymin
