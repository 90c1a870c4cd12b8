#include "envymin/envy.hpp"

namespace envymin {

bool is_permutation(const Allocation& alloc, int n) {
  if (static_cast<int>(alloc.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int h : alloc) {
    if (h < 0 || h >= n || seen[h]) return false;
    seen[h] = true;
  }
  return true;
}

void require_allocation(const Allocation& alloc, int n) {
  if (!is_permutation(alloc, n))
    throw input_error("allocation must be a permutation of the " + std::to_string(n) + " houses");
}

Rational edge_envy(const ValueProfile& p, const Allocation& alloc, int u, int v) {
  return rational_abs(p.values[alloc[u]] - p.values[alloc[v]]);
}

Rational total_envy(const Graph& g, const ValueProfile& p, const Allocation& alloc) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  require_allocation(alloc, g.n);
  Rational sum = 0;
  for (auto [u, v] : g.edges) sum += edge_envy(p, alloc, u, v);
  return sum;
}

Rational total_envy_general(const Graph& g, const ValueMatrix& m, const Allocation& alloc) {
  if (m.size() != g.n) throw input_error("matrix size must match the vertex count");
  require_allocation(alloc, g.n);
  Rational sum = 0;
  for (auto [u, v] : g.edges) {
    Rational du = m.v[u][alloc[v]] - m.v[u][alloc[u]];
    Rational dv = m.v[v][alloc[u]] - m.v[v][alloc[v]];
    if (du > 0) sum += du;
    if (dv > 0) sum += dv;
  }
  return sum;
}

}  // namespace envymin
