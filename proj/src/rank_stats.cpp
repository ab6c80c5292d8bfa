// SPDX-License-Identifier: Apache-2.0
#include "matchforge/rank_stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "matchforge/parallel.h"
#include "matchforge/rand_util.h"

namespace matchforge {

namespace {

std::int64_t max_sum_d2(int n) {
  // sum(d^2) of the full reversal; n(n^2-1) is divisible by 3
  const std::int64_t nn = n;
  return nn * (nn * nn - 1) / 3;
}

std::int64_t sum_d2(const std::vector<int>& ranks) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::int64_t d = ranks[i] - static_cast<std::int64_t>(i);
    s += d * d;
  }
  return s;
}

}  // namespace

double spearman_rho(const std::vector<std::string>& order_a,
                    const std::vector<std::string>& order_b) {
  const std::size_t n = order_a.size();
  if (n < 2) throw InputError("spearman_rho: need at least 2 ranked ids");
  if (order_b.size() != n) throw InputError("spearman_rho: orders have different lengths");

  std::unordered_map<std::string, std::size_t> pos_b;
  pos_b.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!pos_b.emplace(order_b[i], i).second)
      throw InputError("spearman_rho: duplicate id '" + order_b[i] + "'");

  // Erasing as we match both rejects duplicates in order_a and proves the
  // id sets are equal (every erase hits, map ends empty).
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = pos_b.find(order_a[i]);
    if (it == pos_b.end())
      throw InputError("spearman_rho: id '" + order_a[i] +
                       "' missing or repeated in the other order");
    const std::int64_t d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(it->second);
    s += d * d;
    pos_b.erase(it);
  }

  const double nn = static_cast<double>(n);
  return 1.0 - 6.0 * static_cast<double>(s) / (nn * (nn * nn - 1.0));
}

namespace detail {

std::int64_t d2_threshold(double rho_obs, int n) {
  // exact bound, nudged to absorb float noise in rho_obs
  const double raw = (1.0 - rho_obs) * static_cast<double>(n) *
                     (static_cast<double>(n) * n - 1.0) / 6.0;
  const auto t = static_cast<std::int64_t>(std::floor(raw + 1e-9));
  return std::clamp<std::int64_t>(t, -1, max_sum_d2(n));
}

std::int64_t mc_chunk_count(std::int64_t threshold, int n, std::int64_t samples,
                            std::uint64_t chunk_seed) {
  std::mt19937_64 g(chunk_seed);
  std::vector<int> ranks(n);
  std::int64_t count = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    std::iota(ranks.begin(), ranks.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng::below(g, static_cast<std::uint64_t>(i) + 1));
      std::swap(ranks[i], ranks[j]);
    }
    if (sum_d2(ranks) <= threshold) ++count;
  }
  return count;
}

}  // namespace detail

double permutation_p_value_exact(double rho_obs, int n) {
  if (n < 2) throw InputError("permutation_p_value: need n >= 2");
  if (n > 8)
    throw InputError("permutation_p_value: exact enumeration limited to n <= 8; "
                     "use the Monte Carlo form");

  const std::int64_t threshold = detail::d2_threshold(rho_obs, n);
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::int64_t hits = 0, total = 0;
  do {
    if (sum_d2(ranks) <= threshold) ++hits;
    ++total;
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

double permutation_p_value(double rho_obs, int n, const MonteCarlo& mc) {
  if (n < 2) throw InputError("permutation_p_value: need n >= 2");
  if (mc.samples < 1) throw InputError("permutation_p_value: need at least 1 sample");

  const std::int64_t threshold = detail::d2_threshold(rho_obs, n);
  const std::int64_t chunks = (mc.samples + detail::kMcChunk - 1) / detail::kMcChunk;
  std::vector<std::int64_t> counts(chunks, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * detail::kMcChunk;
    const std::int64_t size = std::min(detail::kMcChunk, mc.samples - lo);
    counts[c] = detail::mc_chunk_count(threshold, n, size, rng::derive(mc.seed, c));
  }
  const std::int64_t count = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  return static_cast<double>(1 + count) / static_cast<double>(1 + mc.samples);
}

}  // namespace matchforge
