#include "envymin/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace envymin {

Instance gen_from_bisection(const Graph& g, std::optional<Rational> eps) {
  if (g.n % 2 != 0) throw input_error("bisection reduction needs an even vertex count");
  const int n = g.n;
  Rational e = eps.value_or(Rational(1, BigInt(n) * n * n));
  if (e <= 0 || e >= 1) throw input_error("eps must be in (0, 1)");
  Instance inst;
  inst.graph = g;
  Rational step = e / n;
  for (int j = 0; j < n / 2; ++j) inst.values.push_back(step * j);
  for (int j = 0; j < n / 2; ++j) inst.values.push_back(1 + step * j);
  inst.metadata = {{"reduction", "min-bisection"}, {"eps", format_rational(e)}};
  return inst;
}

int min_bisection_exhaustive(const Graph& g) {
  if (g.n % 2 != 0) throw input_error("bisection needs an even vertex count");
  const int n = g.n;
  if (n > 30) throw input_error("exhaustive bisection is limited to 30 vertices");
  int best = g.m() + 1;
  // Fix vertex 0 on one side to halve the work.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    unsigned side = mask << 1;
    if (__builtin_popcount(side) != n / 2) continue;
    int cut = 0;
    for (auto [u, v] : g.edges)
      if (((side >> u) & 1u) != ((side >> v) & 1u)) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

BisectionCheck verify_bisection_small(const Graph& g, int k, std::optional<Rational> eps,
                                      long long budget) {
  Instance inst = gen_from_bisection(g, eps);
  Rational e = parse_rational(inst.metadata.at("eps"));
  BisectionCheck check;
  check.min_bisection = min_bisection_exhaustive(g);
  check.min_envy = brute_force(g, inst.profile(), budget).envy;
  check.threshold = Rational(k) + Rational(BigInt(g.n) * g.n) * e;
  check.bisection_at_most_k = check.min_bisection <= k;
  check.envy_within_threshold = check.min_envy <= check.threshold;
  check.holds = check.bisection_at_most_k == check.envy_within_threshold;
  return check;
}

namespace {

Graph item_graph(ItemFamily family, int t) {
  switch (family) {
    case ItemFamily::Paths:
      return path_graph(t);
    case ItemFamily::Cycles:
      if (t < 3) throw input_error("cycle items need size at least 3");
      return cycle_graph(t);
    case ItemFamily::Stars:
      return t == 1 ? path_graph(1) : star_graph(t - 1);
    case ItemFamily::Cliques:
      return clique_graph(t);
  }
  throw input_error("unknown item family");
}

void validate_input(const BinPackingInput& input) {
  if (input.bin_capacity < 1 || input.bins < 1)
    throw input_error("bin packing needs positive capacity and bin count");
  if (input.items.empty()) throw input_error("bin packing needs at least one item");
  int total = 0;
  for (int t : input.items) {
    if (t < 1 || t > input.bin_capacity)
      throw input_error("every item must fit a single bin");
    total += t;
  }
  if (total > input.bin_capacity * input.bins)
    throw input_error("items exceed the total bin capacity");
}

}  // namespace

Instance gen_from_binpacking(const BinPackingInput& input, ItemFamily family,
                             std::optional<Rational> gap, std::optional<Rational> eps) {
  validate_input(input);
  const int n = input.bin_capacity * input.bins;
  Rational e = eps.value_or(Rational(1, BigInt(n) * n * n));
  if (e <= 0) throw input_error("eps must be positive");
  Rational width = e * (input.bin_capacity - 1) / n;
  Rational c = gap.value_or((width + 1) * 4 * n);
  if (c <= width) throw input_error("the cluster gap must exceed the cluster width");

  std::vector<Graph> parts;
  int covered = 0;
  for (int t : input.items) {
    parts.push_back(item_graph(family, t));
    covered += t;
  }
  for (int pad = covered; pad < n; ++pad) parts.push_back(path_graph(1));

  Instance inst;
  inst.graph = disjoint_union(parts);
  for (int j = 1; j <= n; ++j)
    inst.values.push_back(c * ((j - 1) / input.bin_capacity) + e * j / n);
  inst.metadata = {{"reduction", "unary-bin-packing"},
                   {"gap", format_rational(c)},
                   {"eps", format_rational(e)},
                   {"bin_capacity", std::to_string(input.bin_capacity)},
                   {"bins", std::to_string(input.bins)}};
  return inst;
}

bool pack_feasible_exhaustive(const BinPackingInput& input) {
  validate_input(input);
  // Largest first, with symmetric-bin pruning: identical loads collapse.
  std::vector<int> items = input.items;
  std::sort(items.begin(), items.end(), std::greater<>());
  std::vector<int> load(input.bins, 0);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == items.size()) return true;
    for (int b = 0; b < input.bins; ++b) {
      if (b > 0 && load[b] == load[b - 1]) continue;
      if (load[b] + items[i] > input.bin_capacity) continue;
      load[b] += items[i];
      if (self(self, i + 1)) return true;
      load[b] -= items[i];
    }
    return false;
  };
  return place(place, 0);
}

BinPackingCheck verify_binpacking_small(const BinPackingInput& input, ItemFamily family,
                                        long long budget) {
  Instance inst = gen_from_binpacking(input, family);
  BinPackingCheck check;
  check.gap = parse_rational(inst.metadata.at("gap"));
  check.packable = pack_feasible_exhaustive(input);
  check.min_envy = brute_force(inst.graph, inst.profile(), budget).envy;
  check.envy_below_gap = check.min_envy < check.gap;
  check.holds = check.packable == check.envy_below_gap;
  return check;
}

}  // namespace envymin
