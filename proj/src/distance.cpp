// SPDX-License-Identifier: Apache-2.0
#include "matchforge/distance.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "matchforge/assignment.h"

namespace matchforge {

int unit_edit_distance(const std::vector<std::string>& seq_a,
                       const std::vector<std::string>& seq_b) {
  const std::size_t rows = seq_a.size();
  const std::size_t cols = seq_b.size();
  std::vector<int> prev(cols + 1), cur(cols + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= cols; ++j) {
      const int subst = prev[j - 1] + (seq_a[i - 1] == seq_b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[cols];
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tie preference: maximize matches first, substitutions second. kMatchBonus
// must exceed any possible substitution total per assignment.
constexpr std::int64_t kMatchBonus = 1 << 20;

double weighted(double base, double weight, WeightScheme scheme) {
  return scheme == WeightScheme::multiplicative ? base * weight : base + (weight - 1.0);
}

// Items in canonical order: sorted by concept. All cost evaluation and
// script emission follows this order, which pins the float summation order
// shared with brute_force_distance.
std::vector<Item> canonical(std::vector<Item> items) {
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.concept_id < b.concept_id; });
  return items;
}

struct PairCost {
  bool allowed = false;
  double cost = 0.0;   // weighted
  int path_length = 0;
};

// Substitution cost for pairing offer item `o` with profile concept `p`.
// Equal concepts match at zero cost regardless of taxonomy membership;
// concepts missing from the taxonomy are isolated (nothing substitutes).
PairCost pair_cost(const Item& o, const std::string& p, const CategoryCosts& costs,
                   int cutoff, WeightScheme scheme, const TaxonomyGraph& graph) {
  if (o.concept_id == p) return {true, 0.0, 0};
  if (!graph.contains(o.concept_id) || !graph.contains(p)) return {};
  int len = graph.shortest_path_len(o.concept_id, p);
  if (len == TaxonomyGraph::kUnreachable || len > cutoff) return {};
  return {true, weighted(costs.alpha * static_cast<double>(len), o.weight, scheme), len};
}

double insert_cost(const Item& o, const CategoryCosts& costs, WeightScheme scheme) {
  return weighted(costs.ic, o.weight, scheme);
}

}  // namespace

CategoryDistance category_distance(const std::vector<Item>& offer_items,
                                   const std::vector<Item>& profile_items,
                                   const CostModel& model,
                                   const TaxonomyGraph& graph,
                                   const CategoryId& category) {
  const CategoryCosts& costs = model.at(category);
  const std::vector<Item> offer = canonical(offer_items);
  const std::vector<Item> profile = canonical(profile_items);
  const int n = static_cast<int>(offer.size());
  const int m = static_cast<int>(profile.size());

  CategoryDistance result;
  if (n + m == 0) return result;

  // Square matrix: offer rows + one dummy row per profile item; profile
  // columns + one insert column per offer item. Row i may take column m+i
  // (insert); dummy row n+j may take column j (delete) or any insert column
  // left unused (corner, cost 0). A finite perfect matching always exists
  // (all-insert + all-delete), so forbidden cells are never forced.
  const int size = n + m;
  std::vector<PairCost> pairs(static_cast<std::size_t>(n) * m);
  std::vector<std::vector<TiedCost>> cell(size, std::vector<TiedCost>(size, {kInf, 0}));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const PairCost pc =
          pair_cost(offer[i], profile[j].concept_id, costs, model.path_cutoff,
                    model.weight_scheme, graph);
      pairs[static_cast<std::size_t>(i) * m + j] = pc;
      if (pc.allowed)
        cell[i][j] = {pc.cost, pc.path_length == 0 ? -kMatchBonus : std::int64_t{-1}};
    }
    cell[i][m + i] = {insert_cost(offer[i], costs, model.weight_scheme), 0};
  }
  for (int j = 0; j < m; ++j) {
    cell[n + j][j] = {costs.dc, 0};
    for (int k = 0; k < n; ++k) cell[n + j][m + k] = {0.0, 0};
  }

  const std::vector<int> row_to_col = solve_assignment(cell);

  // Emit the script in canonical order; partial sums define the cost.
  double rc_sum = 0.0, ic_sum = 0.0, dc_sum = 0.0;
  std::vector<char> profile_matched(m, 0);
  for (int i = 0; i < n; ++i) {
    const int col = row_to_col[i];
    EditOp op;
    op.offer_concept = offer[i].concept_id;
    op.weight = offer[i].weight;
    if (col < m) {
      const PairCost& pc = pairs[static_cast<std::size_t>(i) * m + col];
      profile_matched[col] = 1;
      op.kind = pc.path_length == 0 ? OpKind::match : OpKind::substitute;
      op.profile_concept = profile[col].concept_id;
      op.cost = pc.cost;
      op.path_length = pc.path_length;
      rc_sum += op.cost;
    } else {
      op.kind = OpKind::insert;
      op.cost = insert_cost(offer[i], costs, model.weight_scheme);
      ic_sum += op.cost;
    }
    result.script.ops.push_back(std::move(op));
  }
  for (int j = 0; j < m; ++j) {
    if (profile_matched[j]) continue;
    EditOp op;
    op.kind = OpKind::erase;
    op.profile_concept = profile[j].concept_id;
    op.cost = costs.dc;
    dc_sum += op.cost;
    result.script.ops.push_back(std::move(op));
  }

  result.cost = rc_sum + ic_sum + dc_sum;
  result.script.total = result.cost;
  return result;
}

double brute_force_distance(const std::vector<Item>& offer_items,
                            const std::vector<Item>& profile_items,
                            const CostModel& model,
                            const TaxonomyGraph& graph,
                            const CategoryId& category) {
  if (offer_items.size() > 6 || profile_items.size() > 6)
    throw InputError("brute_force_distance handles at most 6 items per side");
  const CategoryCosts& costs = model.at(category);
  const WeightScheme scheme = model.weight_scheme;
  const std::vector<Item> offer = canonical(offer_items);
  const std::vector<Item> profile = canonical(profile_items);
  const int n = static_cast<int>(offer.size());
  const int m = static_cast<int>(profile.size());

  // Weighted pair costs recomputed here straight from the parameters.
  std::vector<double> pcost(static_cast<std::size_t>(n) * m, kInf);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const std::string& a = offer[i].concept_id;
      const std::string& b = profile[j].concept_id;
      if (a == b) {
        pcost[static_cast<std::size_t>(i) * m + j] = 0.0;
        continue;
      }
      if (!graph.contains(a) || !graph.contains(b)) continue;
      int len = graph.shortest_path_len(a, b);
      if (len == TaxonomyGraph::kUnreachable || len > model.path_cutoff) continue;
      pcost[static_cast<std::size_t>(i) * m + j] =
          weighted(costs.alpha * static_cast<double>(len), offer[i].weight, scheme);
    }
  }

  std::vector<int> assign(n, -1);
  std::vector<char> used(m, 0);
  double best = kInf;

  // Complete configurations are evaluated with the same grouping as
  // category_distance: replacement sum, insertion sum, deletion sum.
  auto evaluate = [&]() {
    double rc_sum = 0.0, ic_sum = 0.0, dc_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (assign[i] >= 0)
        rc_sum += pcost[static_cast<std::size_t>(i) * m + assign[i]];
      else
        ic_sum += weighted(costs.ic, offer[i].weight, scheme);
    }
    for (int j = 0; j < m; ++j)
      if (!used[j]) dc_sum += costs.dc;
    return rc_sum + ic_sum + dc_sum;
  };

  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      best = std::min(best, evaluate());
      return;
    }
    self(self, i + 1);  // offer item i inserted
    for (int j = 0; j < m; ++j) {
      if (used[j] || pcost[static_cast<std::size_t>(i) * m + j] == kInf) continue;
      used[j] = 1;
      assign[i] = j;
      self(self, i + 1);
      assign[i] = -1;
      used[j] = 0;
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace matchforge
