#include "envymin/random.hpp"

#include <numeric>

#include "envymin/rational.hpp"

namespace envymin {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw input_error("below(0) is undefined");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

long long Rng::between(long long lo, long long hi) {
  if (lo > hi) throw input_error("between(lo, hi) needs lo <= hi");
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(int num, int den) {
  if (den <= 0 || num < 0 || num > den) throw input_error("chance needs 0 <= num <= den");
  return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
}

namespace {

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

}  // namespace

Graph shuffle_labels(Rng& rng, const Graph& g) {
  return relabel(g, random_permutation(rng, g.n));
}

std::pair<Graph, int> shuffle_labels_rooted(Rng& rng, const Graph& g, int root) {
  std::vector<int> perm = random_permutation(rng, g.n);
  return {relabel(g, perm), perm[root]};
}

Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_disconnected_graph(Rng& rng, int n, int num, int den) {
  if (n < 2) throw input_error("a disconnected graph needs at least 2 vertices");
  for (;;) {
    Graph g = random_graph(rng, n, num, den);
    if (!is_connected(g)) return g;
  }
}

Graph random_tree(Rng& rng, int n) {
  if (n < 1) throw input_error("a tree needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng.below(v)), v});
  return shuffle_labels(rng, Graph(n, edges));
}

std::pair<Graph, int> random_binary_tree(Rng& rng, int n) {
  if (n < 1 || n % 2 == 0) throw input_error("a full binary tree has an odd vertex count");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaves = {0};
  int next = 1;
  while (next < n) {
    std::size_t pick = static_cast<std::size_t>(rng.below(leaves.size()));
    int node = leaves[pick];
    leaves.erase(leaves.begin() + pick);
    edges.push_back({node, next});
    edges.push_back({node, next + 1});
    leaves.push_back(next);
    leaves.push_back(next + 1);
    next += 2;
  }
  return shuffle_labels_rooted(rng, Graph(n, edges), 0);
}

ValueProfile random_profile(Rng& rng, int n) {
  if (n < 1) throw input_error("a profile needs at least one value");
  std::vector<Rational> values;
  Rational x(rng.between(-5, 5));
  for (int k = 0; k < n; ++k) {
    x += Rational(rng.between(1, 20), rng.between(1, 12));
    values.push_back(x);
  }
  return ValueProfile::from_sorted(values);
}

}  // namespace envymin
