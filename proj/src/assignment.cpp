// SPDX-License-Identifier: Apache-2.0
#include "matchforge/assignment.h"

#include <limits>

namespace matchforge {

namespace {

template <typename Cost>
struct Bounds;

template <>
struct Bounds<double> {
  static double infinity() { return std::numeric_limits<double>::infinity(); }
};

template <>
struct Bounds<TiedCost> {
  static TiedCost infinity() {
    return {std::numeric_limits<double>::infinity(), 0};
  }
};

}  // namespace

template <typename Cost>
std::vector<int> solve_assignment(const std::vector<std::vector<Cost>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};

  // 1-based arrays; p[j] = row assigned to column j, column 0 is virtual.
  std::vector<Cost> u(n + 1, Cost{}), v(n + 1, Cost{});
  std::vector<int> p(n + 1, 0), way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Cost> minv(n + 1, Bounds<Cost>::infinity());
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      Cost delta = Bounds<Cost>::infinity();
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Cost cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
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
          u[p[j]] = u[p[j]] + delta;
          v[j] = v[j] - delta;
        } else {
          minv[j] = minv[j] - delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

template std::vector<int> solve_assignment<TiedCost>(const std::vector<std::vector<TiedCost>>&);
template std::vector<int> solve_assignment<double>(const std::vector<std::vector<double>>&);

}  // namespace matchforge
