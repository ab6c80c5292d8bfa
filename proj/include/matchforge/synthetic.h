// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

/// Item-count statistics for one (domain, category) cell: how many items
/// offers request and profiles offer. The spread values are variances.
struct CategoryStats {
  double requested_mean = 0.0;
  double requested_var = 0.0;
  double offered_mean = 0.0;
  double offered_var = 0.0;

  friend bool operator==(const CategoryStats&, const CategoryStats&) = default;
};

struct DomainStats {
  std::map<CategoryId, CategoryStats> categories;

  friend bool operator==(const DomainStats&, const DomainStats&) = default;
};

using StatsMap = std::map<std::string, DomainStats>;  // keyed by domain tag

/// JSON shape: {"IT": {"skills": {"requested": {"mean": .., "variance": ..},
/// "offered": {...}}, ...}, ...}. ParseError on malformed or negative input.
StatsMap parse_domain_stats(const std::string& text);
StatsMap load_domain_stats_file(const std::string& path);

/// One item-count draw: a normal sample with the given mean and variance,
/// rounded to the nearest integer and clamped at 0.
int sample_item_count(double mean, double variance, std::mt19937_64& rng);

struct SyntheticDataset {
  std::vector<JobOffer> offers;
  std::vector<ApplicantProfile> profiles;
  std::vector<SolvedCase> cases;
};

/// Builds offers, candidate pools, and solved cases whose expert rankings
/// come from rank_candidates under `truth_model` (a perfectly consistent
/// synthetic expert). Concepts are drawn without replacement from the
/// taxonomy vocabulary of each category; item counts follow `stats`.
/// `noise_swaps` > 0 degrades each expert ranking with that many random
/// adjacent swaps in its lower half, emulating inconsistent expert tails.
/// `id_prefix` is prepended to every offer id (profiles and cases inherit
/// it), so independently generated sets can coexist without id collisions.
/// Byte-identical output for identical arguments; the prefix never feeds
/// the RNG, so it changes ids only.
/// GenerationError when a sampled count exceeds a category vocabulary;
/// InputError for nonsensical counts.
SyntheticDataset generate_synthetic_dataset(const StatsMap& stats,
                                            const TaxonomyGraph& taxonomy,
                                            const CostModel& truth_model,
                                            int offers_per_domain,
                                            int profiles_per_offer,
                                            std::uint64_t seed,
                                            int noise_swaps = 0,
                                            const std::string& id_prefix = "");

}  // namespace matchforge
