// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "matchforge/rank_stats.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

// Plain single-threaded implementations of the kernels the library runs
// under OpenMP. Kept as behavioral references: tests assert bit-identical
// results against the parallel paths, and the benchmark target compares
// their runtimes.
namespace matchforge::serial {

/// Mirrors matchforge::profile_costs (the kernel behind rank_candidates).
std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph);

/// Mirrors matchforge::per_case_rhos (the kernel behind the training
/// objective).
std::vector<double> per_case_rhos(const std::vector<SolvedCase>& cases,
                                  const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph);

/// Mirrors matchforge::permutation_p_value's chunked Monte Carlo estimate.
double permutation_p_value(double rho_obs, int n, const MonteCarlo& mc);

/// Mirrors TaxonomyGraph::build_path_cache: all-pairs shortest path lengths
/// in row-major node order (kUnreachable for disconnected pairs).
std::vector<std::int32_t> all_pairs_path_lengths(const TaxonomyGraph& graph);

}  // namespace matchforge::serial
