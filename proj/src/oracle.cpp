#include "envymin/oracle.hpp"

#include "envymin/scaling.hpp"

#include <algorithm>
#include <climits>

namespace envymin {

long long permutation_count(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > LLONG_MAX / i) return LLONG_MAX;
    f *= i;
  }
  return f;
}

namespace {

std::vector<std::vector<int>> earlier_neighbors(const Graph& g) {
  std::vector<std::vector<int>> earlier(g.n);
  for (auto [u, v] : g.edges) earlier[v].push_back(u);
  return earlier;
}

void check_budget(const char* op, int n, long long budget) {
  if (n > 20)
    throw budget_error(std::string(op) + " on " + std::to_string(n) +
                           " vertices exceeds any representable budget",
                       budget);
  long long need = permutation_count(n);
  if (need > budget)
    throw budget_error(std::string(op) + " needs " + std::to_string(need) +
                           " permutations, budget is " + std::to_string(budget),
                       budget);
}

template <typename Int>
struct Searcher {
  int n;
  const std::vector<Int>& val;
  std::vector<std::vector<int>> earlier;
  Allocation cur;
  unsigned used = 0;

  bool found = false;
  Int best{};
  Allocation best_alloc;

  // Collection pass state (enumerate): target envy, sink, cap.
  Int target{};
  std::vector<Allocation>* sink = nullptr;
  std::size_t cap = 0;
  bool truncated = false;

  explicit Searcher(const Graph& g, const std::vector<Int>& val)
      : n(g.n), val(val), earlier(earlier_neighbors(g)), cur(g.n, -1) {}

  Int added_envy(int v, int h) const {
    Int add{};
    for (int u : earlier[v]) {
      Int d = val[h] - val[cur[u]];
      if (d < 0) d = -d;
      add += d;
    }
    return add;
  }

  void minimize(int v, Int partial) {
    if (v == n) {
      // Lexicographic enumeration: the first allocation seen at a value is
      // the lexicographically smallest, so only strict improvements replace.
      if (!found || partial < best) {
        found = true;
        best = partial;
        best_alloc = cur;
      }
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (used >> h & 1u) continue;
      Int next = partial + added_envy(v, h);
      if (found && next > best) continue;
      used |= 1u << h;
      cur[v] = h;
      minimize(v + 1, next);
      used &= ~(1u << h);
    }
    cur[v] = -1;
  }

  void collect(int v, Int partial) {
    if (truncated) return;
    if (v == n) {
      if (partial == target) {
        if (sink->size() >= cap) {
          truncated = true;
        } else {
          sink->push_back(cur);
        }
      }
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (used >> h & 1u) continue;
      Int next = partial + added_envy(v, h);
      if (next > target) continue;
      used |= 1u << h;
      cur[v] = h;
      collect(v + 1, next);
      used &= ~(1u << h);
      if (truncated) return;
    }
    cur[v] = -1;
  }
};

}  // namespace

SolveResult brute_force(const Graph& g, const ValueProfile& p, long long budget) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  check_budget("brute force", g.n, budget);
  Allocation alloc = with_scaled(p, [&](const auto& vals) {
    Searcher s(g, vals);
    s.minimize(0, {});
    return s.best_alloc;
  });
  return {alloc, total_envy(g, p, alloc), "brute_force", Guarantee::Exact};
}

OptimalSet enumerate_optima(const Graph& g, const ValueProfile& p, long long budget,
                            std::size_t max_optima) {
  if (p.size() != g.n) throw input_error("profile size must match the vertex count");
  if (max_optima == 0) throw input_error("max_optima must be positive");
  check_budget("optimum enumeration", g.n, budget);
  OptimalSet out;
  bool truncated = with_scaled(p, [&](const auto& vals) {
    Searcher s(g, vals);
    s.minimize(0, {});
    s.target = s.best;
    s.sink = &out.optima;
    s.cap = max_optima;
    s.collect(0, {});
    return s.truncated;
  });
  out.truncated = truncated;
  out.envy = total_envy(g, p, out.optima.front());
  return out;
}

Allocation canonicalize(const Allocation& alloc, const Symmetry& sym) {
  const int n = static_cast<int>(alloc.size());
  switch (sym.kind) {
    case SymmetryKind::None:
      return alloc;
    case SymmetryKind::CycleDihedral: {
      Allocation best = alloc;
      Allocation cand(n);
      for (int rot = 0; rot < n; ++rot) {
        for (int i = 0; i < n; ++i) cand[i] = alloc[(rot + i) % n];
        if (cand < best) best = cand;
        for (int i = 0; i < n; ++i) cand[i] = alloc[(rot - i + n) % n];
        if (cand < best) best = cand;
      }
      return best;
    }
    case SymmetryKind::BipartiteSides: {
      if (sym.r + sym.s != n) throw input_error("bipartite symmetry sizes must sum to n");
      Allocation out = alloc;
      std::sort(out.begin(), out.begin() + sym.r);
      std::sort(out.begin() + sym.r, out.end());
      return out;
    }
  }
  return alloc;
}

std::vector<Allocation> canonical_classes(const std::vector<Allocation>& allocs,
                                          const Symmetry& sym) {
  std::vector<Allocation> reps;
  reps.reserve(allocs.size());
  for (const auto& a : allocs) reps.push_back(canonicalize(a, sym));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

Allocation arrange(const Allocation& alloc, const std::vector<int>& positions) {
  Allocation out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(alloc[p]);
  return out;
}

}  // namespace envymin
