// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

struct TrainConfig {
  int max_iters = 600;        // perturbations evaluated per restart
  int restarts = 8;           // independent searches, merged by best objective
  double initial_step = 0.5;  // coordinate step size at the start of a restart
  double step_shrink = 0.5;   // in (0,1); applied after a full round of rejections
  double target_rho = 1.0;    // a restart stops early at this mean correlation
  std::uint64_t rng_seed = 0;
  int path_cutoff = 4;        // carried into every candidate model
  WeightScheme weight_scheme = WeightScheme::multiplicative;
};

struct TrainReport {
  CostModel best_model;
  /// (perturbation index, best-so-far objective) of the winning restart,
  /// starting at index 0 with its initial model. Non-decreasing.
  std::vector<std::pair<int, double>> objective_history;
  std::map<std::string, double> per_case_rho;  // keyed by offer id, best model
  bool converged = false;                      // best objective >= target_rho
  double best_objective = -1.0;
  int best_restart = 0;
  std::int64_t evaluations = 0;  // objective evaluations across all restarts
};

/// Spearman correlation of the model's ranking against the expert ranking,
/// one value per case (index-aligned). Each case is ranked over exactly the
/// profiles its expert ranking names. Cases are evaluated in parallel;
/// results do not depend on the thread count.
/// LookupError on unresolved ids; InputError on a case with < 2 candidates.
std::vector<double> per_case_rhos(const std::vector<SolvedCase>& cases,
                                  const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const CostModel& model,
                                  const TaxonomyGraph& graph);

/// Mean of per_case_rhos; in [-1, 1]. InputError on an empty case list.
double objective(const CostModel& model,
                 const std::vector<SolvedCase>& cases,
                 const std::vector<JobOffer>& offers,
                 const std::vector<ApplicantProfile>& profiles,
                 const TaxonomyGraph& graph);

/// One uniformly chosen parameter (some category's alpha, ic, or dc) moved
/// by +step or -step; alpha and ic clamp at 0, dc is free. Everything else
/// is copied unchanged. Deterministic for a given rng state.
CostModel perturb(const CostModel& model, double step, std::mt19937_64& rng);

/// Random-restart greedy local search maximizing the mean Spearman
/// correlation. Restarts run independently (in parallel) from randomized
/// initial models seeded with rng_seed + restart index; within a restart,
/// only strict improvements are accepted and the step shrinks by
/// step_shrink after a full round of consecutive rejections. A restart
/// stops once its objective reaches target_rho or its budget is spent.
/// Deterministic for fixed inputs and seed, at any thread count.
TrainReport train(const std::vector<SolvedCase>& cases,
                  const std::vector<JobOffer>& offers,
                  const std::vector<ApplicantProfile>& profiles,
                  const TaxonomyGraph& graph,
                  const TrainConfig& config);

struct FoldResult {
  double train_rho = 0.0;
  double test_rho = 0.0;
};

/// k-fold cross validation; case i belongs to fold i % k. Each fold trains
/// on the other folds and evaluates on its own held-out cases.
/// InputError unless 2 <= k <= number of cases.
std::vector<FoldResult> cross_validate(const std::vector<SolvedCase>& cases,
                                       const std::vector<JobOffer>& offers,
                                       const std::vector<ApplicantProfile>& profiles,
                                       const TaxonomyGraph& graph,
                                       const TrainConfig& config,
                                       int folds);

}  // namespace matchforge
