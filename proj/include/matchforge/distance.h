// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

/// Classic unit-cost sequence edit distance (insert/delete/substitute, each
/// costing 1). Kept as the order-sensitive reference; the engine itself
/// treats item lists as sets via category_distance.
int unit_edit_distance(const std::vector<std::string>& seq_a,
                       const std::vector<std::string>& seq_b);

struct CategoryDistance {
  double cost = 0.0;
  EditScript script;
};

/// Minimum-cost transformation of `profile_items` into `offer_items` for one
/// category: items pair up by exact concept (match, cost 0) or by taxonomy
/// substitution (alpha * path length, weighted); unpaired offer items are
/// insertions (ic, weighted), unpaired profile items deletions (dc,
/// unweighted). Weighting: multiplicative cost*w, additive cost+(w-1);
/// matches stay free under both. Solved exactly as a min-cost assignment.
///
/// The script realizes the minimum; among equal-cost scripts the one with
/// more matches, then more substitutions, then sorted-concept order wins.
/// script.total and `cost` are identical by construction.
CategoryDistance category_distance(const std::vector<Item>& offer_items,
                                   const std::vector<Item>& profile_items,
                                   const CostModel& model,
                                   const TaxonomyGraph& graph,
                                   const CategoryId& category);

/// Exhaustive-enumeration distance for cross-checking category_distance.
/// Evaluates every pairing/insertion/deletion configuration directly from
/// the model parameters; no assignment machinery involved.
/// InputError if either side has more than 6 items.
double brute_force_distance(const std::vector<Item>& offer_items,
                            const std::vector<Item>& profile_items,
                            const CostModel& model,
                            const TaxonomyGraph& graph,
                            const CategoryId& category);

}  // namespace matchforge
