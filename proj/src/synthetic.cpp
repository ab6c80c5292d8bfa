// SPDX-License-Identifier: Apache-2.0
#include "matchforge/synthetic.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "matchforge/dataset_io.h"
#include "matchforge/rand_util.h"
#include "matchforge/scoring.h"

namespace matchforge {

using nlohmann::json;

namespace {

std::pair<double, double> stat_pair(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("mean") || !j.contains("variance"))
    throw ParseError(where + ": expected {\"mean\": .., \"variance\": ..}");
  const double mean = j["mean"].get<double>();
  const double var = j["variance"].get<double>();
  if (mean < 0) throw ParseError(where + ": mean must be >= 0");
  if (var < 0) throw ParseError(where + ": variance must be >= 0");
  return {mean, var};
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<Item> draw_items(const std::vector<std::string>& vocab, int count,
                             bool weighted, std::mt19937_64& rng) {
  if (count > static_cast<int>(vocab.size()))
    throw GenerationError("category vocabulary exhausted: need " + std::to_string(count) +
                          " distinct concepts, taxonomy offers " +
                          std::to_string(vocab.size()));
  // partial Fisher-Yates over vocabulary indices
  std::vector<int> idx(vocab.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng::below(rng, idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<int> chosen(idx.begin(), idx.begin() + count);
  std::sort(chosen.begin(), chosen.end());

  std::vector<Item> items;
  items.reserve(count);
  for (int i : chosen) {
    Item item;
    item.concept_id = vocab[i];
    if (weighted && rng::unit(rng) < 0.25) item.weight = 2.0;
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

StatsMap parse_domain_stats(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("domain stats: ") + e.what());
  }
  if (!j.is_object() || j.empty())
    throw ParseError("domain stats: expected a non-empty object keyed by domain");

  StatsMap stats;
  for (const auto& [domain, cats] : j.items()) {
    if (!cats.is_object() || cats.empty())
      throw ParseError("domain stats['" + domain + "']: expected categories object");
    DomainStats ds;
    for (const auto& [category, sides] : cats.items()) {
      const std::string where = "domain stats['" + domain + "']['" + category + "']";
      if (!sides.is_object() || !sides.contains("requested") || !sides.contains("offered"))
        throw ParseError(where + ": expected 'requested' and 'offered' entries");
      CategoryStats cs;
      std::tie(cs.requested_mean, cs.requested_var) =
          stat_pair(sides["requested"], where + ".requested");
      std::tie(cs.offered_mean, cs.offered_var) = stat_pair(sides["offered"], where + ".offered");
      ds.categories.emplace(category, cs);
    }
    stats.emplace(domain, std::move(ds));
  }
  return stats;
}

StatsMap load_domain_stats_file(const std::string& path) {
  return parse_domain_stats(read_file(path));
}

int sample_item_count(double mean, double variance, std::mt19937_64& rng) {
  const double draw = rng::normal(rng, mean, std::sqrt(variance));
  const long rounded = std::lround(draw);
  return rounded < 0 ? 0 : static_cast<int>(rounded);
}

SyntheticDataset generate_synthetic_dataset(const StatsMap& stats,
                                            const TaxonomyGraph& taxonomy,
                                            const CostModel& truth_model,
                                            int offers_per_domain,
                                            int profiles_per_offer,
                                            std::uint64_t seed,
                                            int noise_swaps,
                                            const std::string& id_prefix) {
  if (offers_per_domain < 0) throw InputError("generate: offers_per_domain must be >= 0");
  if (offers_per_domain > 0 && profiles_per_offer < 2)
    throw InputError("generate: need at least 2 profiles per offer to form a case");
  if (noise_swaps < 0) throw InputError("generate: noise_swaps must be >= 0");

  // Vocabularies fetched once; sorted, so draws depend only on the seed.
  std::map<CategoryId, std::vector<std::string>> vocab;
  for (const auto& [domain, ds] : stats)
    for (const auto& [category, cs] : ds.categories)
      if (!vocab.count(category)) vocab[category] = taxonomy.concepts_in_category(category);

  std::mt19937_64 rng(seed);
  SyntheticDataset out;
  for (const auto& [domain, ds] : stats) {
    const std::string prefix = id_prefix + lower(domain);
    for (int o = 1; o <= offers_per_domain; ++o) {
      JobOffer offer;
      offer.id = prefix + "-offer-" + std::to_string(o);
      offer.domain_tag = domain;
      for (const auto& [category, cs] : ds.categories) {
        const int count = sample_item_count(cs.requested_mean, cs.requested_var, rng);
        if (count == 0) continue;
        offer.items[category] = draw_items(vocab[category], count, /*weighted=*/true, rng);
      }

      std::vector<ApplicantProfile> pool;
      pool.reserve(profiles_per_offer);
      for (int c = 1; c <= profiles_per_offer; ++c) {
        ApplicantProfile profile;
        profile.id = offer.id + "-cand-" + std::to_string(c);
        for (const auto& [category, cs] : ds.categories) {
          const int count = sample_item_count(cs.offered_mean, cs.offered_var, rng);
          if (count == 0) continue;
          profile.items[category] = draw_items(vocab[category], count, /*weighted=*/false, rng);
        }
        pool.push_back(std::move(profile));
      }

      SolvedCase solved;
      solved.offer_id = offer.id;
      solved.expert_ranking = rank_candidates(offer, pool, truth_model, taxonomy).order();
      const int n = static_cast<int>(solved.expert_ranking.size());
      for (int s = 0; s < noise_swaps && n - n / 2 - 1 > 0; ++s) {
        const int i = n / 2 + static_cast<int>(rng::below(
                                  rng, static_cast<std::uint64_t>(n - n / 2 - 1)));
        std::swap(solved.expert_ranking[i], solved.expert_ranking[i + 1]);
      }

      out.offers.push_back(std::move(offer));
      for (auto& p : pool) out.profiles.push_back(std::move(p));
      out.cases.push_back(std::move(solved));
    }
  }
  return out;
}

}  // namespace matchforge
