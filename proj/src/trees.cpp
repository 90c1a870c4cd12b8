#include "envymin/trees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace envymin {

namespace {

void require_binary(const RootedTree& t) {
  if (!validate_binary_tree(t))
    throw input_error("operation requires a binary tree (every node has 0 or 2 children)");
}

// Whether v's house sits strictly above both children's (true), strictly
// below both (false), or between them (no violation).
std::optional<bool> violation_above(const RootedTree& t, const ValueProfile& p,
                                    const Allocation& alloc, int v) {
  if (t.children[v].empty()) return std::nullopt;
  const Rational& y = p.values[alloc[v]];
  const Rational& a = p.values[alloc[t.children[v][0]]];
  const Rational& b = p.values[alloc[t.children[v][1]]];
  if (y < a && y < b) return false;
  if (y > a && y > b) return true;
  return std::nullopt;
}

// Walk down from the violation along least-valued children while every child
// still values above the node (mirrored when the node sits above both).
std::vector<int> violation_walk(const RootedTree& t, const ValueProfile& p,
                                const Allocation& alloc, const MedianViolation& violation) {
  const Rational& y = p.values[alloc[violation.node]];
  auto lower = [&](int u, int w) {
    const Rational& a = p.values[alloc[u]];
    const Rational& b = p.values[alloc[w]];
    return violation.above ? a > b : a < b;
  };
  auto passes = [&](int u) {
    const Rational& a = p.values[alloc[u]];
    return violation.above ? a > y : a < y;
  };

  std::vector<int> walk{violation.node};
  for (;;) {
    int cur = walk.back();
    if (t.children[cur].empty()) break;
    bool stop = false;
    for (int c : t.children[cur])
      if (passes(c)) stop = true;
    if (stop) break;
    int pick = t.children[cur][0];
    for (int c : t.children[cur])
      if (lower(c, pick)) pick = c;
    walk.push_back(pick);
  }
  return walk;
}

}  // namespace

bool check_local_median(const RootedTree& t, const ValueProfile& p, const Allocation& alloc) {
  require_binary(t);
  require_allocation(alloc, t.graph.n);
  return !find_deepest_violation(t, p, alloc).has_value();
}

bool check_global_median(const RootedTree& t, const ValueProfile& p, const Allocation& alloc) {
  require_binary(t);
  require_allocation(alloc, t.graph.n);
  for (int v = 0; v < t.graph.n; ++v) {
    if (t.children[v].empty()) continue;
    const Rational& y = p.values[alloc[v]];
    bool ok = false;
    for (int flip = 0; flip < 2 && !ok; ++flip) {
      int lo = t.children[v][flip], hi = t.children[v][1 - flip];
      bool below = true, above = true;
      for (int u : t.subtree(lo))
        if (!(p.values[alloc[u]] < y)) below = false;
      for (int u : t.subtree(hi))
        if (!(p.values[alloc[u]] > y)) above = false;
      ok = below && above;
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<MedianViolation> find_deepest_violation(const RootedTree& t, const ValueProfile& p,
                                                      const Allocation& alloc) {
  require_binary(t);
  std::optional<MedianViolation> found;
  int best_depth = -1;
  for (int v = 0; v < t.graph.n; ++v) {
    std::optional<bool> above = violation_above(t, p, alloc, v);
    if (!above) continue;
    // Deepest wins; ties go to the smaller vertex id, and the scan order
    // already visits ids ascending.
    if (t.depth[v] > best_depth) {
      best_depth = t.depth[v];
      found = MedianViolation{v, *above};
    }
  }
  return found;
}

std::optional<MedianStep> local_median_step(const RootedTree& t, const ValueProfile& p,
                                            const Allocation& alloc) {
  require_allocation(alloc, t.graph.n);
  auto violation = find_deepest_violation(t, p, alloc);
  if (!violation) return std::nullopt;
  const int node = violation->node;

  std::vector<int> walk = violation_walk(t, p, alloc, *violation);
  Allocation next = alloc;
  for (std::size_t j = 0; j + 1 < walk.size(); ++j) next[walk[j]] = alloc[walk[j + 1]];
  next[walk.back()] = alloc[node];
  return MedianStep{node, std::move(next)};
}

SolveResult local_median_fixpoint(const RootedTree& t, const ValueProfile& p,
                                  std::optional<Allocation> start) {
  if (p.size() != t.graph.n) throw input_error("profile size must match the vertex count");
  require_binary(t);
  Allocation alloc;
  if (start) {
    require_allocation(*start, t.graph.n);
    alloc = *start;
  } else {
    alloc.resize(t.graph.n);
    std::iota(alloc.begin(), alloc.end(), 0);
  }

  // A step only reassigns houses along its walk, so violation status can
  // change at the walk nodes and the violation's parent alone. Keeping the
  // violating set ordered (deepest first, ties to the smallest id) makes the
  // per-step work proportional to the walk instead of the whole tree.
  auto deeper_first = [&t](int a, int b) {
    if (t.depth[a] != t.depth[b]) return t.depth[a] > t.depth[b];
    return a < b;
  };
  std::set<int, decltype(deeper_first)> violating(deeper_first);
  std::vector<char> above(t.graph.n, 0);
  auto refresh = [&](int v) {
    if (v < 0) return;
    std::optional<bool> ab = violation_above(t, p, alloc, v);
    if (ab) {
      violating.insert(v);
      above[v] = *ab;
    } else {
      violating.erase(v);
    }
  };
  for (int v = 0; v < t.graph.n; ++v) refresh(v);

  long long cap = static_cast<long long>(t.graph.n) * t.graph.n * t.graph.n;
  for (long long step = 0; step <= cap; ++step) {
    if (violating.empty())
      return {alloc, total_envy(t.graph, p, alloc), "local_median", Guarantee::Heuristic};
    const int node = *violating.begin();
    std::vector<int> walk =
        violation_walk(t, p, alloc, MedianViolation{node, above[node] != 0});
    const int carried = alloc[node];
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) alloc[walk[j]] = alloc[walk[j + 1]];
    alloc[walk.back()] = carried;
    refresh(t.parent[node]);
    for (int v : walk) refresh(v);
  }
  throw std::runtime_error("local median fixpoint exceeded its n^3 step cap");
}

TreeExtremesRecord experiment_tree_extremes(const Graph& tree, const ValueProfile& p,
                                            long long budget) {
  if (!is_tree(tree)) throw input_error("extremes experiment expects a tree");
  const int n = tree.n;
  OptimalSet opt = enumerate_optima(tree, p, budget);
  TreeExtremesRecord rec;
  rec.optimum = opt.envy;
  rec.optima_count = opt.optima.size();
  rec.truncated = opt.truncated;
  for (const Allocation& alloc : opt.optima) {
    int lo = -1, hi = -1;
    for (int v = 0; v < n; ++v) {
      if (alloc[v] == 0) lo = v;
      if (alloc[v] == n - 1) hi = v;
    }
    if (tree.degree(lo) > 1 || tree.degree(hi) > 1) continue;
    rec.extremes_on_leaves = true;
    // Walk the unique path from lo to hi and demand strictly rising values.
    std::vector<int> parent(n, -2);
    std::vector<int> stack{lo};
    parent[lo] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : tree.adj[v])
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        }
    }
    bool monotone = true;
    for (int v = hi; v != lo; v = parent[v])
      if (!(p.values[alloc[parent[v]]] < p.values[alloc[v]])) monotone = false;
    if (monotone) {
      rec.holds = true;
      rec.witness = alloc;
      break;
    }
  }
  return rec;
}

}  // namespace envymin
