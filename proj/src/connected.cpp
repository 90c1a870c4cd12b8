#include "envymin/connected.hpp"

#include "envymin/hungarian.hpp"

#include <algorithm>
#include <numeric>

namespace envymin {

namespace {

Allocation identity_allocation(int n) {
  Allocation a(n);
  std::iota(a.begin(), a.end(), 0);
  return a;
}

// Sum over a in left, b in right of |v_a - v_b|, with both house lists given
// as sorted ranks. Prefix sums keep this near-linear; rank order agrees with
// value order, so the sign split by rank is exact even with tied values.
Rational cross_sum(const ValueProfile& p, const std::vector<int>& left,
                   const std::vector<int>& right) {
  std::vector<Rational> prefix(left.size() + 1);
  for (std::size_t i = 0; i < left.size(); ++i)
    prefix[i + 1] = prefix[i] + p.values[left[i]];
  Rational sum = 0;
  for (int b : right) {
    auto it = std::upper_bound(left.begin(), left.end(), b);
    auto k = static_cast<std::size_t>(it - left.begin());
    const Rational& vb = p.values[b];
    sum += vb * static_cast<int>(k) - prefix[k];
    sum += (prefix[left.size()] - prefix[k]) - vb * static_cast<int>(left.size() - k);
  }
  return sum;
}

}  // namespace

SolveResult solve_path(const ValueProfile& p) {
  const int n = p.size();
  Rational envy = p.values[n - 1] - p.values[0];
  return {identity_allocation(n), envy, "path", Guarantee::Exact};
}

SolveResult solve_cycle(const ValueProfile& p) {
  const int n = p.size();
  if (n < 3) throw input_error("cycle solver needs at least 3 vertices");
  // Ascending all the way around: the return edge carries the full spread, so
  // the evaluated total is twice it.
  Rational envy = (p.values[n - 1] - p.values[0]) * 2;
  return {identity_allocation(n), envy, "cycle", Guarantee::Exact};
}

SolveResult solve_star(const ValueProfile& p) {
  const int n = p.size();
  if (n < 2) throw input_error("star solver needs at least 2 vertices");
  const int mid = (n + 1) / 2 - 1;  // lower median, 0-based
  Allocation alloc(n);
  alloc[0] = mid;
  int next = 0;
  for (int v = 1; v < n; ++v) {
    if (next == mid) ++next;
    alloc[v] = next++;
  }
  Rational envy = 0;
  for (int k = 0; k < n; ++k)
    if (k != mid) envy += rational_abs(p.values[k] - p.values[mid]);
  return {alloc, envy, "star", Guarantee::Exact};
}

Rational clique_envy_sorted(const std::vector<Rational>& w) {
  const int q = static_cast<int>(w.size());
  Rational envy = 0;
  for (int k = 1; k <= q; ++k) envy += w[k - 1] * (2 * k - q - 1);
  return envy;
}

SolveResult solve_clique(const ValueProfile& p) {
  return {identity_allocation(p.size()), clique_envy_sorted(p.values), "clique",
          Guarantee::Exact};
}

SolveResult solve_complete_bipartite(int r, int s, const ValueProfile& p) {
  if (r < s || s < 1) throw input_error("complete bipartite solver needs r >= s >= 1");
  const int n = r + s;
  if (p.size() != n) throw input_error("profile size must be r + s");
  const int d = r - s;
  const int m = d / 2;
  std::vector<int> left, right;
  for (int k = 0; k < m; ++k) left.push_back(k);
  for (int k = n - (d - m); k < n; ++k) left.push_back(k);
  for (int i = 0; i < s; ++i) {
    // Pair (m + 2i, m + 2i + 1) splits across the sides. For odd d the lower
    // member must sit on the larger side; for even d either way is optimal
    // and the lower member goes to the smaller side, which lines the witness
    // up with solve_star when s = 1.
    if (d % 2 == 1) {
      left.push_back(m + 2 * i);
      right.push_back(m + 2 * i + 1);
    } else {
      right.push_back(m + 2 * i);
      left.push_back(m + 2 * i + 1);
    }
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  Allocation alloc(n);
  for (int i = 0; i < r; ++i) alloc[i] = left[i];
  for (int j = 0; j < s; ++j) alloc[r + j] = right[j];
  return {alloc, cross_sum(p, left, right), "complete_bipartite", Guarantee::Exact};
}

BigInt count_optima_bipartite(int r, int s) {
  if (r < s || s < 1) throw input_error("count_optima_bipartite needs r >= s >= 1");
  if ((r - s) % 2 == 1) return 1;
  return BigInt(1) << s;
}

SolveResult solve_complete_general(const ValueMatrix& mat) {
  const int n = mat.size();
  // weight(i, h): how much agent i would envy the rest of a complete graph
  // when holding h, i.e. the sum of its positive value gaps to other houses.
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> sorted = mat.v[i];
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rational> suffix(n + 1);
    for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + sorted[k];
    for (int h = 0; h < n; ++h) {
      const Rational& x = mat.v[i][h];
      auto k = static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), x) -
                                sorted.begin());
      w[i][h] = suffix[k] - x * (n - k);
    }
  }
  auto [match, cost] = min_cost_assignment(w);
  return {match, cost, "complete_general", Guarantee::Exact};
}

SolveResult solve_classified(const Graph& g, const ComponentClass& cls, const ValueProfile& p) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  switch (cls.kind) {
    case ComponentKind::Path: {
      SolveResult res = solve_path(p);
      auto order = path_order(g);
      Allocation alloc(g.n);
      for (int i = 0; i < g.n; ++i) alloc[order[i]] = res.assignment[i];
      res.assignment = std::move(alloc);
      return res;
    }
    case ComponentKind::Cycle: {
      SolveResult res = solve_cycle(p);
      auto order = cycle_order(g);
      Allocation alloc(g.n);
      for (int i = 0; i < g.n; ++i) alloc[order[i]] = res.assignment[i];
      res.assignment = std::move(alloc);
      return res;
    }
    case ComponentKind::Star: {
      SolveResult res = solve_star(p);
      int center = star_center(g);
      Allocation alloc(g.n);
      alloc[center] = res.assignment[0];
      int spoke = 1;
      for (int v = 0; v < g.n; ++v)
        if (v != center) alloc[v] = res.assignment[spoke++];
      res.assignment = std::move(alloc);
      return res;
    }
    case ComponentKind::Clique:
      return solve_clique(p);
    case ComponentKind::CompleteBipartite: {
      SolveResult res = solve_complete_bipartite(cls.a, cls.b, p);
      auto [big, small] = bipartite_sides(g);
      Allocation alloc(g.n);
      for (std::size_t i = 0; i < big.size(); ++i) alloc[big[i]] = res.assignment[i];
      for (std::size_t j = 0; j < small.size(); ++j)
        alloc[small[j]] = res.assignment[cls.a + j];
      res.assignment = std::move(alloc);
      return res;
    }
    case ComponentKind::BinaryTree:
    case ComponentKind::Generic:
      throw input_error("no exact connected solver for " + to_string(cls));
  }
  throw input_error("unknown component class");
}

}  // namespace envymin
