// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchforge/distance.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

struct CategoryBreakdown {
  double rc_sum = 0.0;  // match + substitution costs
  double ic_sum = 0.0;  // insertion costs
  double dc_sum = 0.0;  // deletion costs

  double total() const { return rc_sum + ic_sum + dc_sum; }

  friend bool operator==(const CategoryBreakdown&, const CategoryBreakdown&) = default;
};

/// Total transformation cost of editing a profile into an offer, summed over
/// every category present on either side. breakdown totals reproduce `total`
/// exactly; categories absent from both sides contribute nothing.
struct TransformationCost {
  double total = 0.0;
  std::map<CategoryId, CategoryBreakdown> breakdown;
  std::map<CategoryId, EditScript> scripts;
};

/// ConfigError if a category present on either side has no model entry.
TransformationCost transformation_cost(const JobOffer& offer,
                                       const ApplicantProfile& profile,
                                       const CostModel& model,
                                       const TaxonomyGraph& graph);

/// Total cost per profile, index-aligned with the input. Profiles are scored
/// in parallel; results are independent of the thread count.
std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<const ApplicantProfile*>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph);
std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph);

/// Ranks profiles by ascending total transformation cost, ties broken by
/// profile id. Profiles are scored in parallel; the result is deterministic.
/// InputError on an empty profile list.
Ranking rank_candidates(const JobOffer& offer,
                        const std::vector<ApplicantProfile>& profiles,
                        const CostModel& model,
                        const TaxonomyGraph& graph);
Ranking rank_candidates(const JobOffer& offer,
                        const std::vector<const ApplicantProfile*>& profiles,
                        const CostModel& model,
                        const TaxonomyGraph& graph);

/// Per-operation trace of one offer/profile evaluation, for candidate
/// feedback. text and trace carry the same operations; totals equal
/// transformation_cost exactly.
struct Explanation {
  std::string text;
  nlohmann::json trace;
  TransformationCost cost;
};

Explanation explain(const JobOffer& offer,
                    const ApplicantProfile& profile,
                    const CostModel& model,
                    const TaxonomyGraph& graph);

}  // namespace matchforge
