#include "envymin/unions.hpp"

#include "envymin/scaling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <type_traits>

namespace envymin {

namespace {

enum class Family { Paths, Cycles, Stars, EqualCliques };

const char* family_name(Family f) {
  switch (f) {
    case Family::Paths: return "paths";
    case Family::Cycles: return "cycles";
    case Family::Stars: return "stars";
    case Family::EqualCliques: return "equal cliques";
  }
  return "?";
}

std::optional<Family> union_family(const std::vector<Component>& comps) {
  auto all = [&](auto pred) {
    return std::all_of(comps.begin(), comps.end(),
                       [&](const Component& c) { return pred(c.graph); });
  };
  if (all([](const Graph& g) { return is_path(g); })) return Family::Paths;
  if (all([](const Graph& g) { return is_cycle(g); })) return Family::Cycles;
  if (all([](const Graph& g) { return is_star(g); })) return Family::Stars;
  if (all([](const Graph& g) { return is_clique(g); })) {
    int q = comps.front().graph.n;
    bool equal = std::all_of(comps.begin(), comps.end(),
                             [&](const Component& c) { return c.graph.n == q; });
    if (equal) return Family::EqualCliques;
  }
  return std::nullopt;
}

ComponentClass family_class(Family f, int n) {
  switch (f) {
    case Family::Paths: return {ComponentKind::Path, n};
    case Family::Cycles: return {ComponentKind::Cycle, n};
    case Family::Stars: return {ComponentKind::Star, n - 1};
    case Family::EqualCliques: return {ComponentKind::Clique, n};
  }
  throw input_error("unknown family");
}

template <typename Int>
Int family_block_cost(Family f, const std::vector<Int>& vals, int start, int size) {
  switch (f) {
    case Family::Paths:
      return vals[start + size - 1] - vals[start];
    case Family::Cycles:
      return (vals[start + size - 1] - vals[start]) * 2;
    case Family::Stars: {
      int mid = start + (size + 1) / 2 - 1;
      Int sum{};
      for (int k = start; k < start + size; ++k) {
        Int d = vals[k] - vals[mid];
        if (d < Int{}) d = Int{} - d;
        sum += d;
      }
      return sum;
    }
    case Family::EqualCliques: {
      Int sum{};
      for (int k = 1; k <= size; ++k) sum += vals[start + k - 1] * (2 * k - size - 1);
      return sum;
    }
  }
  return Int{};
}

ValueProfile slice_profile(const ValueProfile& p, int start, int size) {
  return ValueProfile::from_sorted(
      std::vector<Rational>(p.values.begin() + start, p.values.begin() + start + size));
}

// Applies the family solver to one component and writes its block (ranks
// offset by start) into the global allocation.
Rational place_block(Family f, const Component& comp, const ValueProfile& p, int start,
                     Allocation& global) {
  SolveResult res =
      solve_classified(comp.graph, family_class(f, comp.graph.n), slice_profile(p, start, comp.graph.n));
  for (int v = 0; v < comp.graph.n; ++v)
    global[comp.vertices[v]] = start + res.assignment[v];
  return res.envy;
}

// r! over the product of same-key run factorials, built incrementally: the
// i-th element is the run-th copy of its key, so extend by i/run.
BigInt multiset_ordering_count(const std::vector<int>& sorted_keys) {
  BigInt count = 1;
  int run = 0;
  for (std::size_t i = 0; i < sorted_keys.size(); ++i) {
    run = (i > 0 && sorted_keys[i] == sorted_keys[i - 1]) ? run + 1 : 1;
    count = count * static_cast<int>(i + 1) / run;
  }
  return count;
}

}  // namespace

SolveResult solve_union_by_ordering(const Graph& g, const ValueProfile& p, long long budget,
                                    BlockAssignment* blocks) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  auto comps = connected_components(g);
  auto family = union_family(comps);
  if (!family)
    throw input_error("ordering solver needs one strongly separable family of components");
  const int r = static_cast<int>(comps.size());

  // Components of equal size are interchangeable; enumerate each distinct
  // size sequence once.
  std::vector<int> keys(r);
  for (int c = 0; c < r; ++c) keys[c] = comps[c].graph.n;
  std::sort(keys.begin(), keys.end());
  BigInt orderings = multiset_ordering_count(keys);
  if (orderings > budget)
    throw budget_error("ordering enumeration needs " + orderings.str() +
                           " orderings, budget is " + std::to_string(budget),
                       budget);

  std::map<int, std::vector<int>> by_size;
  for (int c = 0; c < r; ++c) by_size[comps[c].graph.n].push_back(c);

  std::vector<int> best_starts = with_scaled(p, [&](const auto& vals) {
    using Int = std::decay_t<decltype(vals[0])>;
    std::map<std::pair<int, int>, Int> cost_memo;
    auto block_cost = [&](int size, int start) -> const Int& {
      auto key = std::make_pair(size, start);
      auto it = cost_memo.find(key);
      if (it == cost_memo.end())
        it = cost_memo.emplace(key, family_block_cost(*family, vals, start, size)).first;
      return it->second;
    };

    std::vector<int> seq = keys, starts(r), occurrence(r);
    std::vector<int> best;
    Int best_envy{};
    bool found = false;
    do {
      Int envy{};
      int at = 0;
      std::map<int, int> used;
      for (int pos = 0; pos < r; ++pos) {
        int size = seq[pos];
        envy += block_cost(size, at);
        int comp_id = by_size[size][used[size]++];
        starts[comp_id] = at;
        at += size;
      }
      if (!found || envy < best_envy || (envy == best_envy && starts < best)) {
        found = true;
        best_envy = envy;
        best = starts;
      }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
  });

  Allocation alloc(g.n);
  Rational envy = 0;
  for (int c = 0; c < r; ++c) envy += place_block(*family, comps[c], p, best_starts[c], alloc);
  if (blocks) {
    blocks->spans.resize(r);
    blocks->order.resize(r);
    std::iota(blocks->order.begin(), blocks->order.end(), 0);
    for (int c = 0; c < r; ++c) blocks->spans[c] = {best_starts[c], comps[c].graph.n};
    std::sort(blocks->order.begin(), blocks->order.end(),
              [&](int a, int b) { return best_starts[a] < best_starts[b]; });
  }
  return {alloc, envy, "union_ordering", Guarantee::Exact};
}

SolveResult solve_union_paths_dp(const Graph& g, const ValueProfile& p, long long state_budget,
                                 BlockAssignment* blocks) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  auto comps = connected_components(g);
  for (const auto& c : comps)
    if (!is_path(c.graph)) throw input_error("paths DP needs every component to be a path");

  std::map<int, std::vector<int>> by_len;
  for (std::size_t c = 0; c < comps.size(); ++c) by_len[comps[c].graph.n].push_back(static_cast<int>(c));
  std::vector<int> lengths;
  std::vector<long long> mult;
  for (auto& [len, ids] : by_len) {
    lengths.push_back(len);
    mult.push_back(static_cast<long long>(ids.size()));
  }
  const int t = static_cast<int>(lengths.size());

  BigInt states = 1;
  for (int i = 0; i < t; ++i) states *= mult[i] + 1;
  if (states > state_budget)
    throw budget_error("paths DP needs " + states.str() + " states, budget is " +
                           std::to_string(state_budget),
                       state_budget);

  std::vector<long long> stride(t);
  long long s = 1;
  for (int i = 0; i < t; ++i) {
    stride[i] = s;
    s *= mult[i] + 1;
  }
  const long long total = s;

  std::vector<std::int8_t> choice(total, -1);
  with_scaled(p, [&](const auto& vals) {
    using Int = std::decay_t<decltype(vals[0])>;
    if (!std::is_same_v<Int, std::int64_t> && total > 4000000)
      throw budget_error("paths DP state budget in big-integer mode is 4000000", 4000000);
    std::vector<Int> dp(total, Int{});
    std::vector<int> count(t, 0);
    long long len = 0;
    for (long long idx = 1; idx < total; ++idx) {
      // Mixed-radix increment keeps count[] and the prefix length in step.
      int i = 0;
      while (count[i] == mult[i]) {
        len -= static_cast<long long>(count[i]) * lengths[i];
        count[i] = 0;
        ++i;
      }
      ++count[i];
      len += lengths[i];
      bool have = false;
      Int best{};
      std::int8_t arg = -1;
      for (int j = 0; j < t; ++j) {
        if (count[j] == 0) continue;
        Int cand = dp[idx - stride[j]] +
                   (vals[len - 1] - vals[len - lengths[j]]);
        if (!have || cand < best) {
          have = true;
          best = cand;
          arg = static_cast<std::int8_t>(j);
        }
      }
      dp[idx] = best;
      choice[idx] = arg;
    }
  });

  // Walk back from the full state; blocks come out back to front.
  std::vector<std::vector<int>> starts_by_len(t);
  long long idx = total - 1;
  long long len = g.n;
  while (idx > 0) {
    int j = choice[idx];
    len -= lengths[j];
    starts_by_len[j].push_back(static_cast<int>(len));
    idx -= stride[j];
  }
  for (auto& v : starts_by_len) std::reverse(v.begin(), v.end());

  Allocation alloc(g.n);
  Rational envy = 0;
  std::vector<int> starts(comps.size());
  for (int j = 0; j < t; ++j) {
    const auto& ids = by_len[lengths[j]];
    for (std::size_t k = 0; k < ids.size(); ++k) {
      starts[ids[k]] = starts_by_len[j][k];
      envy += place_block(Family::Paths, comps[ids[k]], p, starts_by_len[j][k], alloc);
    }
  }
  if (blocks) {
    blocks->spans.resize(comps.size());
    blocks->order.resize(comps.size());
    std::iota(blocks->order.begin(), blocks->order.end(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
      blocks->spans[c] = {starts[c], comps[c].graph.n};
    std::sort(blocks->order.begin(), blocks->order.end(),
              [&](int a, int b) { return starts[a] < starts[b]; });
  }
  return {alloc, envy, "paths_dp", Guarantee::Exact};
}

SolveResult solve_matching_graph(const Graph& g, const ValueProfile& p,
                                 BlockAssignment* blocks) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 1) throw input_error("matching-graph DP needs max degree 1");
  const int k = g.m();
  const int m = g.n - 2 * k;

  // choice bit: 1 = last value is a single, 0 = last two values form an edge.
  std::vector<std::uint8_t> choice(static_cast<std::size_t>(k + 1) * (m + 1), 1);
  with_scaled(p, [&](const auto& vals) {
    using Int = std::decay_t<decltype(vals[0])>;
    std::vector<Int> prev(m + 1, Int{}), cur(m + 1, Int{});
    for (int ke = 1; ke <= k; ++ke) {
      for (int ms = 0; ms <= m; ++ms) {
        int len = 2 * ke + ms;
        Int take_edge = prev[ms] + (vals[len - 1] - vals[len - 2]);
        if (ms > 0 && cur[ms - 1] <= take_edge) {
          cur[ms] = cur[ms - 1];
          choice[static_cast<std::size_t>(ke) * (m + 1) + ms] = 1;
        } else {
          cur[ms] = take_edge;
          choice[static_cast<std::size_t>(ke) * (m + 1) + ms] = 0;
        }
      }
      std::swap(prev, cur);
    }
  });

  std::vector<int> edge_starts, single_starts;
  int ke = k, ms = m;
  while (ke > 0 || ms > 0) {
    int len = 2 * ke + ms;
    if (ke > 0 && choice[static_cast<std::size_t>(ke) * (m + 1) + ms] == 0) {
      edge_starts.push_back(len - 2);
      --ke;
    } else {
      single_starts.push_back(len - 1);
      --ms;
    }
  }
  std::reverse(edge_starts.begin(), edge_starts.end());
  std::reverse(single_starts.begin(), single_starts.end());

  auto comps = connected_components(g);
  Allocation alloc(g.n);
  Rational envy = 0;
  std::vector<int> starts(comps.size());
  std::size_t e = 0, si = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].graph.n == 2) {
      starts[c] = edge_starts[e++];
      envy += place_block(Family::Paths, comps[c], p, starts[c], alloc);
    } else {
      starts[c] = single_starts[si++];
      alloc[comps[c].vertices[0]] = starts[c];
    }
  }
  if (blocks) {
    blocks->spans.resize(comps.size());
    blocks->order.resize(comps.size());
    std::iota(blocks->order.begin(), blocks->order.end(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
      blocks->spans[c] = {starts[c], comps[c].graph.n};
    std::sort(blocks->order.begin(), blocks->order.end(),
              [&](int a, int b) { return starts[a] < starts[b]; });
  }
  return {alloc, envy, "matching_graph", Guarantee::Exact};
}

SolveResult solve_equal_cliques(const Graph& g, const ValueProfile& p,
                                BlockAssignment* blocks) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  auto comps = connected_components(g);
  const int q = comps.front().graph.n;
  for (const auto& c : comps)
    if (!is_clique(c.graph) || c.graph.n != q)
      throw input_error("equal-cliques solver needs cliques of one size");

  Allocation alloc(g.n);
  Rational envy = 0;
  for (std::size_t c = 0; c < comps.size(); ++c)
    envy += place_block(Family::EqualCliques, comps[c], p, static_cast<int>(c) * q, alloc);
  if (blocks) {
    blocks->order.resize(comps.size());
    std::iota(blocks->order.begin(), blocks->order.end(), 0);
    blocks->spans.resize(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      blocks->spans[c] = {static_cast<int>(c) * q, q};
  }
  return {alloc, envy, "equal_cliques", Guarantee::Exact};
}

namespace {

// Window search over the remaining sorted rank list. Prefix sums make each
// window's clique envy O(1); the recursion owns the leaf count budget.
template <typename Int>
struct WindowSearch {
  const std::vector<Int>& vals;
  const std::vector<int>& sizes;  // clique sizes, largest first
  std::vector<std::vector<int>> cur, best;
  Int best_envy{};
  bool found = false;

  WindowSearch(const std::vector<Int>& vals, const std::vector<int>& sizes)
      : vals(vals), sizes(sizes), cur(sizes.size()) {}

  Int clique_envy_ranks(const std::vector<int>& ranks) const {
    Int sum{};
    const int q = static_cast<int>(ranks.size());
    for (int k = 1; k <= q; ++k) sum += vals[ranks[k - 1]] * (2 * k - q - 1);
    return sum;
  }

  void run(std::vector<int> remaining, std::size_t level, Int envy) {
    if (level + 1 == sizes.size()) {
      Int total = envy + clique_envy_ranks(remaining);
      if (!found || total < best_envy) {
        found = true;
        best_envy = total;
        cur[level] = std::move(remaining);
        best = cur;
      }
      return;
    }
    const int q = sizes[level];
    const int len = static_cast<int>(remaining.size());
    std::vector<Int> pre(len + 1), wpre(len + 1);
    for (int u = 0; u < len; ++u) {
      pre[u + 1] = pre[u] + vals[remaining[u]];
      wpre[u + 1] = wpre[u] + vals[remaining[u]] * u;
    }
    for (int i = 0; i + q <= len; ++i) {
      // sum over the window of (2u + 1 - q - 2i) v_u, u the in-list position.
      Int wenvy = (wpre[i + q] - wpre[i]) * 2 + (pre[i + q] - pre[i]) * (1 - q - 2 * i);
      if (found && envy + wenvy > best_envy) continue;
      cur[level].assign(remaining.begin() + i, remaining.begin() + i + q);
      std::vector<int> rest;
      rest.reserve(len - q);
      rest.insert(rest.end(), remaining.begin(), remaining.begin() + i);
      rest.insert(rest.end(), remaining.begin() + i + q, remaining.end());
      run(std::move(rest), level + 1, envy + wenvy);
    }
  }
};

}  // namespace

SolveResult solve_cliques_xp(const Graph& g, const ValueProfile& p, long long window_budget) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  auto comps = connected_components(g);
  for (const auto& c : comps)
    if (!is_clique(c.graph)) throw input_error("clique solver needs every component complete");

  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (comps[a].graph.n != comps[b].graph.n) return comps[a].graph.n > comps[b].graph.n;
    return a < b;
  });
  std::vector<int> sizes;
  for (int c : order) sizes.push_back(comps[c].graph.n);

  BigInt leaves = 1;
  int rem = g.n;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    leaves *= rem - sizes[i] + 1;
    rem -= sizes[i];
  }
  if (leaves > window_budget)
    throw budget_error("window search needs " + leaves.str() + " leaves, budget is " +
                           std::to_string(window_budget),
                       window_budget);

  std::vector<std::vector<int>> windows = with_scaled(p, [&](const auto& vals) {
    WindowSearch search(vals, sizes);
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    using Int = std::decay_t<decltype(vals[0])>;
    search.run(std::move(all), 0, Int{});
    return search.best;
  });

  Allocation alloc(g.n);
  Rational envy = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Component& comp = comps[order[i]];
    std::vector<Rational> vals;
    for (int rank : windows[i]) vals.push_back(p.values[rank]);
    envy += clique_envy_sorted(vals);
    for (int v = 0; v < comp.graph.n; ++v) alloc[comp.vertices[v]] = windows[i][v];
  }
  return {alloc, envy, "cliques_xp", Guarantee::Exact};
}

}  // namespace envymin
