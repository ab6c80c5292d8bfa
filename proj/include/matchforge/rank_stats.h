// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchforge/types.h"

namespace matchforge {

/// Spearman rank correlation between two total orders over the same ids:
/// rho = 1 - 6 * sum(d_i^2) / (n (n^2 - 1)), d_i = rank difference of id i.
/// InputError if the id sets differ, contain duplicates, or n < 2.
double spearman_rho(const std::vector<std::string>& order_a,
                    const std::vector<std::string>& order_b);

/// One-sided exact permutation p-value: the fraction of the n! rank
/// permutations whose rho is >= rho_obs. Exact enumeration is limited to
/// n <= 8 (40320 permutations); larger n must use the Monte Carlo form.
double permutation_p_value_exact(double rho_obs, int n);

struct MonteCarlo {
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate with the observed permutation included:
/// p = (1 + #{sampled rho >= rho_obs}) / (1 + samples). Sampling is chunked
/// with per-chunk derived seeds, so the estimate does not depend on the
/// number of threads.
double permutation_p_value(double rho_obs, int n, const MonteCarlo& mc);

namespace detail {

constexpr std::int64_t kMcChunk = 8192;

/// rho >= rho_obs  <=>  sum(d^2) <= this threshold (integer domain reduces
/// the permutation-count comparison to exact arithmetic).
std::int64_t d2_threshold(double rho_obs, int n);

/// Number of uniformly random rank permutations (out of `samples`, drawn
/// from the chunk's own generator) whose sum(d^2) is <= threshold.
std::int64_t mc_chunk_count(std::int64_t threshold, int n, std::int64_t samples,
                            std::uint64_t chunk_seed);

}  // namespace detail

}  // namespace matchforge
