// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace matchforge {

/// Lexicographic cost: `primary` is the real transformation cost, `tie`
/// breaks exact primary ties (more matches, then more substitutions, win).
/// Forms an ordered group under +, which is all the solver needs.
struct TiedCost {
  double primary = 0.0;
  std::int64_t tie = 0;

  friend TiedCost operator+(TiedCost a, TiedCost b) {
    return {a.primary + b.primary, a.tie + b.tie};
  }
  friend TiedCost operator-(TiedCost a, TiedCost b) {
    return {a.primary - b.primary, a.tie - b.tie};
  }
  friend bool operator<(TiedCost a, TiedCost b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    return a.tie < b.tie;
  }
};

/// Exact minimum-cost square assignment (Jonker-Volgenant shortest
/// augmenting paths with potentials). `cost` is n*n, row-major.
/// Returns row -> column. Handles negative entries. O(n^3).
template <typename Cost>
std::vector<int> solve_assignment(const std::vector<std::vector<Cost>>& cost);

extern template std::vector<int> solve_assignment<TiedCost>(
    const std::vector<std::vector<TiedCost>>&);
extern template std::vector<int> solve_assignment<double>(
    const std::vector<std::vector<double>>&);

}  // namespace matchforge
