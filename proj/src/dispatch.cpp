#include "envymin/dispatch.hpp"

#include <algorithm>
#include <numeric>

#include "envymin/connected.hpp"
#include "envymin/trees.hpp"

namespace envymin {

namespace {

// Envy over the edges touching a or b only; swapping their houses changes
// nothing else.
Rational incident_envy(const Graph& g, const ValueProfile& p, const Allocation& alloc, int a,
                       int b) {
  Rational sum = 0;
  for (int w : g.adj[a]) sum += rational_abs(p.values[alloc[a]] - p.values[alloc[w]]);
  for (int w : g.adj[b])
    if (w != a) sum += rational_abs(p.values[alloc[b]] - p.values[alloc[w]]);
  return sum;
}

// Contiguous-block start for disconnected graphs: components take blocks of
// the sorted values in the given order; classified components lay their block
// out exactly, anything else takes it in vertex order.
Allocation contiguous_start(const std::vector<Component>& comps, const ValueProfile& p,
                            const std::vector<int>& order, int n) {
  Allocation alloc(n, -1);
  int start = 0;
  for (int id : order) {
    const Component& comp = comps[id];
    int size = comp.graph.n;
    ComponentClass cls = classify_component(comp.graph);
    if (cls.kind == ComponentKind::BinaryTree || cls.kind == ComponentKind::Generic) {
      for (int lv = 0; lv < size; ++lv) alloc[comp.vertices[lv]] = start + lv;
    } else {
      std::vector<Rational> slice(p.values.begin() + start, p.values.begin() + start + size);
      SolveResult block = solve_classified(comp.graph, cls, ValueProfile::from_sorted(slice));
      for (int lv = 0; lv < size; ++lv) alloc[comp.vertices[lv]] = start + block.assignment[lv];
    }
    start += size;
  }
  return alloc;
}

// Best contiguous start over every component ordering when the count stays
// small, else component-id order alone.
Allocation heuristic_start(const Graph& g, const ValueProfile& p) {
  std::vector<Component> comps = connected_components(g);
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  if (comps.size() <= 1) return contiguous_start(comps, p, order, g.n);

  constexpr long long kOrderingCap = 40320;  // 8!
  long long count = 1;
  bool bounded = true;
  for (std::size_t i = 2; i <= comps.size() && bounded; ++i) {
    count *= static_cast<long long>(i);
    if (count > kOrderingCap) bounded = false;
  }
  if (!bounded) return contiguous_start(comps, p, order, g.n);

  Allocation best;
  Rational best_envy;
  do {
    Allocation cand = contiguous_start(comps, p, order, g.n);
    Rational envy = total_envy(g, p, cand);
    if (best.empty() || envy < best_envy) {
      best = cand;
      best_envy = envy;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

SolveResult solve_binary_tree(const Graph& g, int root, const ValueProfile& p,
                              const SolveOptions& opts) {
  try {
    return brute_force(g, p, opts.budget);
  } catch (const budget_error&) {
    return local_median_fixpoint(RootedTree(g, root), p);
  }
}

SolveResult solve_fallback(const Graph& g, const ValueProfile& p, const SolveOptions& opts) {
  try {
    return brute_force(g, p, opts.budget);
  } catch (const budget_error&) {
    return solve_local_search(g, p, heuristic_start(g, p));
  }
}

SolveResult solve_disconnected(const Graph& g, const ValueProfile& p, const SolveOptions& opts) {
  std::vector<Component> comps = connected_components(g);
  bool deg_le_1 = true;
  for (int v = 0; v < g.n && deg_le_1; ++v)
    if (g.adj[v].size() > 1) deg_le_1 = false;
  if (deg_le_1) return solve_matching_graph(g, p);

  bool all_paths = true, all_cycles = true, all_stars = true, all_cliques = true;
  for (const Component& comp : comps) {
    all_paths = all_paths && is_path(comp.graph);
    all_cycles = all_cycles && is_cycle(comp.graph);
    all_stars = all_stars && is_star(comp.graph);
    all_cliques = all_cliques && is_clique(comp.graph);
  }

  if (all_paths) {
    try {
      return solve_union_paths_dp(g, p, opts.state_budget);
    } catch (const budget_error&) {
    }
    try {
      return solve_union_by_ordering(g, p, opts.ordering_budget);
    } catch (const budget_error&) {
    }
    return solve_fallback(g, p, opts);
  }
  if (all_cycles || all_stars) {
    try {
      return solve_union_by_ordering(g, p, opts.ordering_budget);
    } catch (const budget_error&) {
    }
    return solve_fallback(g, p, opts);
  }
  if (all_cliques) {
    int q = comps.front().graph.n;
    bool equal = std::all_of(comps.begin(), comps.end(),
                             [q](const Component& c) { return c.graph.n == q; });
    if (equal) return solve_equal_cliques(g, p);
    try {
      return solve_cliques_xp(g, p, opts.window_budget);
    } catch (const budget_error&) {
    }
    return solve_fallback(g, p, opts);
  }
  return solve_fallback(g, p, opts);
}

SolveResult solve_named(const Instance& inst, const ValueProfile& p, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  const std::string& name = opts.solver;
  auto classified = [&](ComponentKind kind, bool ok, int a = 0, int b = 0) {
    if (!ok) throw input_error("the " + name + " solver does not apply to this graph");
    return solve_classified(g, ComponentClass{kind, a, b}, p);
  };
  if (name == "brute_force") return brute_force(g, p, opts.budget);
  if (name == "path") return classified(ComponentKind::Path, is_path(g));
  if (name == "cycle") return classified(ComponentKind::Cycle, is_cycle(g));
  if (name == "star") return classified(ComponentKind::Star, is_star(g), g.n - 1);
  if (name == "clique") return classified(ComponentKind::Clique, is_clique(g));
  if (name == "complete_bipartite") {
    int r = 0, s = 0;
    return classified(ComponentKind::CompleteBipartite, is_complete_bipartite(g, &r, &s), r, s);
  }
  if (name == "local_median") {
    if (!inst.root) throw input_error("the local_median solver needs a root vertex");
    RootedTree t(g, *inst.root);
    if (!validate_binary_tree(t))
      throw input_error("the local_median solver needs a full binary tree");
    return local_median_fixpoint(t, p);
  }
  if (name == "union_ordering") return solve_union_by_ordering(g, p, opts.ordering_budget);
  if (name == "paths_dp") return solve_union_paths_dp(g, p, opts.state_budget);
  if (name == "matching_graph") return solve_matching_graph(g, p);
  if (name == "equal_cliques") return solve_equal_cliques(g, p);
  if (name == "cliques_xp") return solve_cliques_xp(g, p, opts.window_budget);
  if (name == "local_search") return solve_local_search(g, p);
  throw input_error("unknown solver: " + name);
}

}  // namespace

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {
      "auto",           "brute_force",    "path",
      "cycle",          "star",           "clique",
      "complete_bipartite", "complete_general", "local_median",
      "union_ordering", "paths_dp",       "matching_graph",
      "equal_cliques",  "cliques_xp",     "local_search"};
  return names;
}

SolveResult solve_local_search(const Graph& g, const ValueProfile& p,
                               std::optional<Allocation> start) {
  const int n = g.n;
  Allocation alloc = start.value_or([n] {
    Allocation id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  require_allocation(alloc, n);
  constexpr int kMaxPasses = 500;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    Rational best_delta = 0;
    int best_a = -1, best_b = -1;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        Rational before = incident_envy(g, p, alloc, a, b);
        std::swap(alloc[a], alloc[b]);
        Rational delta = incident_envy(g, p, alloc, a, b) - before;
        std::swap(alloc[a], alloc[b]);
        if (delta < best_delta) {
          best_delta = delta;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a < 0) break;
    std::swap(alloc[best_a], alloc[best_b]);
  }
  return {alloc, total_envy(g, p, alloc), "local_search", Guarantee::Heuristic};
}

SolveResult solve_instance(const Instance& inst, const SolveOptions& opts) {
  const Graph& g = inst.graph;
  if (inst.matrix) {
    if (opts.solver != "auto" && opts.solver != "complete_general")
      throw input_error("matrix valuations only solve via complete_general");
    if (!is_clique(g)) throw input_error("matrix valuations need a complete graph");
    return solve_complete_general(*inst.matrix);
  }
  if (opts.solver == "complete_general")
    throw input_error("the complete_general solver needs matrix valuations");

  ValueProfile p = inst.profile();
  if (opts.solver != "auto") return solve_named(inst, p, opts);

  if (!is_connected(g)) {
    if (inst.root) throw input_error("a root vertex needs a connected graph");
    return solve_disconnected(g, p, opts);
  }

  ComponentClass cls = classify_component(g, inst.root);
  switch (cls.kind) {
    case ComponentKind::Path:
    case ComponentKind::Cycle:
    case ComponentKind::Star:
    case ComponentKind::Clique:
    case ComponentKind::CompleteBipartite:
      return solve_classified(g, cls, p);
    case ComponentKind::BinaryTree:
      return solve_binary_tree(g, *inst.root, p, opts);
    case ComponentKind::Generic:
      return solve_fallback(g, p, opts);
  }
  throw input_error("unclassifiable graph");
}

}  // namespace envymin
