// SPDX-License-Identifier: Apache-2.0
#include "matchforge/serial_ref.h"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "matchforge/rand_util.h"
#include "matchforge/scoring.h"

namespace matchforge::serial {

std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph) {
  std::vector<double> costs;
  costs.reserve(profiles.size());
  for (const auto& profile : profiles)
    costs.push_back(transformation_cost(offer, profile, model, graph).total);
  return costs;
}

std::vector<double> per_case_rhos(const std::vector<SolvedCase>& cases,
                                  const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph) {
  std::unordered_map<std::string, const JobOffer*> offer_by_id;
  for (const auto& o : offers) offer_by_id.emplace(o.id, &o);
  std::unordered_map<std::string, const ApplicantProfile*> profile_by_id;
  for (const auto& p : profiles) profile_by_id.emplace(p.id, &p);

  std::vector<double> rhos;
  rhos.reserve(cases.size());
  for (const auto& solved : cases) {
    if (solved.expert_ranking.size() < 2)
      throw InputError("case '" + solved.offer_id + "': fewer than 2 ranked candidates");
    auto offer_it = offer_by_id.find(solved.offer_id);
    if (offer_it == offer_by_id.end())
      throw LookupError("case references unknown offer '" + solved.offer_id + "'");

    const int n = static_cast<int>(solved.expert_ranking.size());
    std::vector<const ApplicantProfile*> pool;
    std::vector<double> costs;
    pool.reserve(n);
    costs.reserve(n);
    for (const auto& pid : solved.expert_ranking) {
      auto it = profile_by_id.find(pid);
      if (it == profile_by_id.end())
        throw LookupError("case '" + solved.offer_id + "' references unknown profile '" + pid +
                          "'");
      pool.push_back(it->second);
      costs.push_back(transformation_cost(*offer_it->second, *it->second, model, graph).total);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (costs[a] != costs[b]) return costs[a] < costs[b];
      return pool[a]->id < pool[b]->id;
    });
    std::vector<std::string> generated;
    generated.reserve(n);
    for (int i : order) generated.push_back(pool[i]->id);

    rhos.push_back(spearman_rho(generated, solved.expert_ranking));
  }
  return rhos;
}

double permutation_p_value(double rho_obs, int n, const MonteCarlo& mc) {
  if (n < 2) throw InputError("permutation_p_value: need n >= 2");
  if (mc.samples < 1) throw InputError("permutation_p_value: need at least 1 sample");

  // Same chunk protocol as the parallel version, dispatched sequentially.
  const std::int64_t threshold = detail::d2_threshold(rho_obs, n);
  std::int64_t count = 0;
  const std::int64_t chunks = (mc.samples + detail::kMcChunk - 1) / detail::kMcChunk;
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * detail::kMcChunk;
    const std::int64_t size = std::min(detail::kMcChunk, mc.samples - lo);
    count += detail::mc_chunk_count(threshold, n, size, rng::derive(mc.seed, c));
  }
  return static_cast<double>(1 + count) / static_cast<double>(1 + mc.samples);
}

std::vector<std::int32_t> all_pairs_path_lengths(const TaxonomyGraph& graph) {
  const int n = static_cast<int>(graph.node_count());
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [a, b] : graph.edges()) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }

  std::vector<std::int32_t> lengths(static_cast<std::size_t>(n) * n,
                                    TaxonomyGraph::kUnreachable);
  std::deque<int> queue;
  for (int source = 0; source < n; ++source) {
    std::int32_t* row = lengths.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[u]) {
        if (row[v] != TaxonomyGraph::kUnreachable) continue;
        row[v] = row[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return lengths;
}

}  // namespace matchforge::serial
