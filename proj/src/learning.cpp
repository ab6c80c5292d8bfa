// SPDX-License-Identifier: Apache-2.0
#include "matchforge/learning.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "matchforge/parallel.h"
#include "matchforge/rand_util.h"
#include "matchforge/rank_stats.h"
#include "matchforge/scoring.h"

namespace matchforge {

namespace {

struct DatasetIndex {
  std::unordered_map<std::string, const JobOffer*> offers;
  std::unordered_map<std::string, const ApplicantProfile*> profiles;
};

DatasetIndex index_dataset(const std::vector<JobOffer>& offers,
                           const std::vector<ApplicantProfile>& profiles) {
  DatasetIndex idx;
  for (const auto& o : offers) idx.offers.emplace(o.id, &o);
  for (const auto& p : profiles) idx.profiles.emplace(p.id, &p);
  return idx;
}

double case_rho(const SolvedCase& solved, const DatasetIndex& idx, const CostModel& model,
                const TaxonomyGraph& graph) {
  if (solved.expert_ranking.size() < 2)
    throw InputError("case '" + solved.offer_id + "': fewer than 2 ranked candidates");
  auto offer_it = idx.offers.find(solved.offer_id);
  if (offer_it == idx.offers.end())
    throw LookupError("case references unknown offer '" + solved.offer_id + "'");

  std::vector<const ApplicantProfile*> pool;
  pool.reserve(solved.expert_ranking.size());
  for (const auto& pid : solved.expert_ranking) {
    auto it = idx.profiles.find(pid);
    if (it == idx.profiles.end())
      throw LookupError("case '" + solved.offer_id + "' references unknown profile '" + pid +
                        "'");
    pool.push_back(it->second);
  }

  const Ranking generated = rank_candidates(*offer_it->second, pool, model, graph);
  return spearman_rho(generated.order(), solved.expert_ranking);
}

/// Categories present anywhere in the dataset, sorted; these are the
/// parameters the search optimizes.
std::vector<CategoryId> dataset_categories(const std::vector<JobOffer>& offers,
                                           const std::vector<ApplicantProfile>& profiles) {
  std::set<CategoryId> cats;
  for (const auto& o : offers)
    for (const auto& [cat, items] : o.items) cats.insert(cat);
  for (const auto& p : profiles)
    for (const auto& [cat, items] : p.items) cats.insert(cat);
  return {cats.begin(), cats.end()};
}

CostModel random_model(const std::vector<CategoryId>& categories, const TrainConfig& config,
                       std::mt19937_64& rng) {
  CostModel model;
  model.path_cutoff = config.path_cutoff;
  model.weight_scheme = config.weight_scheme;
  for (const auto& cat : categories) {
    CategoryCosts costs;
    costs.alpha = rng::uniform(rng, 0.1, 2.0);
    costs.ic = rng::uniform(rng, 0.1, 2.0);
    costs.dc = rng::uniform(rng, -1.0, 2.0);
    model.categories.emplace(cat, costs);
  }
  return model;
}

struct RestartResult {
  CostModel model;
  double objective = -2.0;
  std::vector<std::pair<int, double>> history;
  std::int64_t evaluations = 0;
};

void check_config(const TrainConfig& config) {
  if (config.max_iters < 0) throw InputError("train: max_iters must be >= 0");
  if (config.restarts < 1) throw InputError("train: restarts must be >= 1");
  if (config.initial_step <= 0) throw InputError("train: initial_step must be > 0");
  if (config.step_shrink <= 0 || config.step_shrink >= 1)
    throw InputError("train: step_shrink must be in (0, 1)");
}

}  // namespace

std::vector<double> per_case_rhos(const std::vector<SolvedCase>& cases,
                                  const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph) {
  const DatasetIndex idx = index_dataset(offers, profiles);
  const int n = static_cast<int>(cases.size());
  std::vector<double> rhos(n);
  OmpGuard guard;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    guard.run([&, i] { rhos[i] = case_rho(cases[i], idx, model, graph); });
  guard.rethrow();
  return rhos;
}

double objective(const CostModel& model,
                 const std::vector<SolvedCase>& cases,
                 const std::vector<JobOffer>& offers,
                 const std::vector<ApplicantProfile>& profiles,
                 const TaxonomyGraph& graph) {
  if (cases.empty()) throw InputError("objective: empty case list");
  const std::vector<double> rhos = per_case_rhos(cases, offers, profiles, model, graph);
  double sum = 0.0;
  for (double r : rhos) sum += r;
  return sum / static_cast<double>(rhos.size());
}

CostModel perturb(const CostModel& model, double step, std::mt19937_64& rng) {
  if (model.categories.empty()) return model;
  CostModel next = model;
  const auto param = rng::below(rng, 3 * next.categories.size());
  const double delta = rng::below(rng, 2) == 0 ? step : -step;

  auto it = next.categories.begin();
  std::advance(it, param / 3);
  CategoryCosts& costs = it->second;
  switch (param % 3) {
    case 0:
      costs.alpha = std::max(0.0, costs.alpha + delta);
      break;
    case 1:
      costs.ic = std::max(0.0, costs.ic + delta);
      break;
    default:
      costs.dc += delta;
      break;
  }
  return next;
}

TrainReport train(const std::vector<SolvedCase>& cases,
                  const std::vector<JobOffer>& offers,
                  const std::vector<ApplicantProfile>& profiles,
                  const TaxonomyGraph& graph,
                  const TrainConfig& config) {
  check_config(config);
  if (cases.empty()) throw InputError("train: empty case list");
  for (const auto& c : cases)
    if (c.expert_ranking.size() < 2)
      throw InputError("train: case '" + c.offer_id + "' has fewer than 2 candidates");

  const std::vector<CategoryId> categories = dataset_categories(offers, profiles);
  // One full round = every parameter tried in both directions, in
  // expectation; after that many consecutive rejections the step shrinks.
  const int round_size = static_cast<int>(std::max<std::size_t>(1, 2 * 3 * categories.size()));

  std::vector<RestartResult> results(config.restarts);
  OmpGuard guard;
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < config.restarts; ++r)
    guard.run([&, r] {
      std::mt19937_64 rng(config.rng_seed + static_cast<std::uint64_t>(r));
      RestartResult result;
      result.model = random_model(categories, config, rng);
      result.objective = objective(result.model, cases, offers, profiles, graph);
      result.evaluations = 1;
      result.history.emplace_back(0, result.objective);

      double step = config.initial_step;
      int rejections = 0;
      for (int iter = 1; iter <= config.max_iters; ++iter) {
        if (result.objective >= config.target_rho) break;
        const CostModel candidate = perturb(result.model, step, rng);
        const double obj = objective(candidate, cases, offers, profiles, graph);
        ++result.evaluations;
        if (obj > result.objective) {
          result.model = candidate;
          result.objective = obj;
          result.history.emplace_back(iter, obj);
          rejections = 0;
        } else if (++rejections >= round_size) {
          step *= config.step_shrink;
          rejections = 0;
        }
      }
      results[r] = std::move(result);
    });
  guard.rethrow();

  int best = 0;
  for (int r = 1; r < config.restarts; ++r)
    if (results[r].objective > results[best].objective) best = r;

  TrainReport report;
  report.best_model = std::move(results[best].model);
  report.objective_history = std::move(results[best].history);
  report.best_objective = results[best].objective;
  report.best_restart = best;
  report.converged = report.best_objective >= config.target_rho;
  for (const auto& r : results) report.evaluations += r.evaluations;

  const std::vector<double> rhos =
      per_case_rhos(cases, offers, profiles, report.best_model, graph);
  for (std::size_t i = 0; i < cases.size(); ++i)
    report.per_case_rho[cases[i].offer_id] = rhos[i];
  return report;
}

std::vector<FoldResult> cross_validate(const std::vector<SolvedCase>& cases,
                                       const std::vector<JobOffer>& offers,
                                       const std::vector<ApplicantProfile>& profiles,
                                       const TaxonomyGraph& graph,
                                       const TrainConfig& config,
                                       int folds) {
  if (folds < 2 || folds > static_cast<int>(cases.size()))
    throw InputError("cross_validate: folds must be in [2, number of cases]");

  std::vector<FoldResult> out;
  out.reserve(folds);
  for (int f = 0; f < folds; ++f) {
    std::vector<SolvedCase> train_cases, test_cases;
    for (std::size_t i = 0; i < cases.size(); ++i)
      (static_cast<int>(i % folds) == f ? test_cases : train_cases).push_back(cases[i]);

    const TrainReport report = train(train_cases, offers, profiles, graph, config);
    FoldResult fold;
    fold.train_rho = report.best_objective;
    fold.test_rho = objective(report.best_model, test_cases, offers, profiles, graph);
    out.push_back(fold);
  }
  return out;
}

}  // namespace matchforge
