// SPDX-License-Identifier: Apache-2.0
#include "matchforge/scoring.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "matchforge/dataset_io.h"
#include "matchforge/parallel.h"

namespace matchforge {

namespace {

const std::vector<Item> kNoItems;

const std::vector<Item>& items_or_empty(const ItemsByCategory& items, const CategoryId& cat) {
  auto it = items.find(cat);
  return it == items.end() ? kNoItems : it->second;
}

// Shortest round-trip decimal form, e.g. "0.5", "1.0", "2.25".
std::string fmt(double value) { return nlohmann::json(value).dump(); }

}  // namespace

TransformationCost transformation_cost(const JobOffer& offer,
                                       const ApplicantProfile& profile,
                                       const CostModel& model,
                                       const TaxonomyGraph& graph) {
  std::set<CategoryId> cats;
  for (const auto& [cat, list] : offer.items) cats.insert(cat);
  for (const auto& [cat, list] : profile.items) cats.insert(cat);

  TransformationCost out;
  for (const CategoryId& cat : cats) {
    CategoryDistance dist = category_distance(items_or_empty(offer.items, cat),
                                              items_or_empty(profile.items, cat),
                                              model, graph, cat);
    CategoryBreakdown bd;
    for (const EditOp& op : dist.script.ops) {
      switch (op.kind) {
        case OpKind::match:
        case OpKind::substitute:
          bd.rc_sum += op.cost;
          break;
        case OpKind::insert:
          bd.ic_sum += op.cost;
          break;
        case OpKind::erase:
          bd.dc_sum += op.cost;
          break;
      }
    }
    out.total += bd.rc_sum + bd.ic_sum + bd.dc_sum;
    out.breakdown.emplace(cat, bd);
    out.scripts.emplace(cat, std::move(dist.script));
  }
  return out;
}

std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<const ApplicantProfile*>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph) {
  const int n = static_cast<int>(profiles.size());
  std::vector<double> costs(n);
  OmpGuard guard;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    guard.run([&, i] { costs[i] = transformation_cost(offer, *profiles[i], model, graph).total; });
  guard.rethrow();
  return costs;
}

std::vector<double> profile_costs(const JobOffer& offer,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph) {
  std::vector<const ApplicantProfile*> ptrs;
  ptrs.reserve(profiles.size());
  for (const auto& p : profiles) ptrs.push_back(&p);
  return profile_costs(offer, ptrs, model, graph);
}

Ranking rank_candidates(const JobOffer& offer,
                        const std::vector<const ApplicantProfile*>& profiles,
                        const CostModel& model,
                        const TaxonomyGraph& graph) {
  if (profiles.empty()) throw InputError("rank_candidates: empty profile list");

  const int n = static_cast<int>(profiles.size());
  const std::vector<double> costs = profile_costs(offer, profiles, model, graph);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (costs[a] != costs[b]) return costs[a] < costs[b];
    return profiles[a]->id < profiles[b]->id;
  });

  Ranking ranking;
  ranking.direction = RankDirection::ascending_cost;
  for (int r = 0; r < n; ++r)
    ranking.entries.push_back({r + 1, profiles[order[r]]->id, costs[order[r]]});
  return ranking;
}

Ranking rank_candidates(const JobOffer& offer,
                        const std::vector<ApplicantProfile>& profiles,
                        const CostModel& model,
                        const TaxonomyGraph& graph) {
  std::vector<const ApplicantProfile*> ptrs;
  ptrs.reserve(profiles.size());
  for (const auto& p : profiles) ptrs.push_back(&p);
  return rank_candidates(offer, ptrs, model, graph);
}

Explanation explain(const JobOffer& offer,
                    const ApplicantProfile& profile,
                    const CostModel& model,
                    const TaxonomyGraph& graph) {
  Explanation ex;
  ex.cost = transformation_cost(offer, profile, model, graph);

  std::ostringstream text;
  text << "transforming profile '" << profile.id << "' into offer '" << offer.id << "'\n";

  nlohmann::json cats = nlohmann::json::object();
  for (const auto& [cat, script] : ex.cost.scripts) {
    const CategoryBreakdown& bd = ex.cost.breakdown.at(cat);
    text << "[" << cat << "]\n";
    for (const EditOp& op : script.ops) {
      text << "  " << to_string(op.kind);
      switch (op.kind) {
        case OpKind::match:
          text << " '" << op.offer_concept << "'";
          break;
        case OpKind::substitute:
          text << " '" << op.profile_concept << "' -> '" << op.offer_concept
               << "' (path " << op.path_length << ")";
          break;
        case OpKind::insert:
          text << " '" << op.offer_concept << "'";
          break;
        case OpKind::erase:
          text << " '" << op.profile_concept << "'";
          break;
      }
      if (op.weight != 1.0) text << " weight " << fmt(op.weight);
      text << ": cost " << fmt(op.cost) << "\n";
    }
    text << "  subtotal rc=" << fmt(bd.rc_sum) << " ic=" << fmt(bd.ic_sum)
         << " dc=" << fmt(bd.dc_sum) << " total=" << fmt(bd.total()) << "\n";

    nlohmann::json entry = to_json(script, cat);
    entry["rc_sum"] = bd.rc_sum;
    entry["ic_sum"] = bd.ic_sum;
    entry["dc_sum"] = bd.dc_sum;
    cats[cat] = std::move(entry);
  }
  text << "total cost: " << fmt(ex.cost.total) << "\n";

  ex.text = text.str();
  ex.trace = nlohmann::json{{"offer", offer.id},
                            {"profile", profile.id},
                            {"total", ex.cost.total},
                            {"categories", std::move(cats)}};
  return ex;
}

}  // namespace matchforge
