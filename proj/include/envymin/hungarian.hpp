#pragma once

#include <utility>
#include <vector>

namespace envymin {

// Min-cost perfect assignment on a square cost matrix, O(n^3) potentials
// method. T needs +, -, <, copy; exact types welcome. Returns row -> column
// and the total cost. Deterministic: columns are scanned in index order, so
// ties resolve toward the lexicographically earliest augmenting choice.
template <typename T>
std::pair<std::vector<int>, T> min_cost_assignment(const std::vector<std::vector<T>>& a) {
  const int n = static_cast<int>(a.size());
  T inf{};
  for (const auto& row : a)
    for (const auto& x : row) inf += (x < T{} ? T{} - x : x);
  inf += 1;

  std::vector<T> u(n + 1, T{}), v(n + 1, T{}), minv(n + 1, T{});
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = -1;
      T delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> match(n, -1);
  T cost{};
  for (int j = 1; j <= n; ++j) {
    match[p[j] - 1] = j - 1;
    cost += a[p[j] - 1][j - 1];
  }
  return {match, cost};
}

}  // namespace envymin
