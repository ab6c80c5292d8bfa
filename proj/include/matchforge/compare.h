// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "matchforge/bm25.h"
#include "matchforge/rank_stats.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

struct CaseComparison {
  std::string domain;
  std::string case_id;  // the case's offer id
  double rho_approach = 0.0;
  double rho_baseline = 0.0;
  double p_approach = 1.0;
  double p_baseline = 1.0;
  bool significant_approach = false;  // p < alpha
  bool significant_baseline = false;
};

struct ComparisonReport {
  std::vector<CaseComparison> rows;  // in input case order
  int wins = 0;    // approach rho strictly above baseline rho
  int losses = 0;
  int ties = 0;
  double alpha = 5.0e-2;
  bool train_test_overlap = false;  // test case ids seen in the training set
  std::vector<std::string> notes;

  /// Grid of per-case correlations and p-values grouped by domain; entries
  /// with p >= alpha are marked with an asterisk.
  std::string to_text() const;
  /// One row per case: domain, case id, both rhos, both p-values, both
  /// significance flags.
  std::string to_csv() const;
};

/// Scores every test case with the trained transformation-cost model and
/// with the BM25 baseline, with exact permutation p-values for pools of up
/// to 8 candidates and seeded Monte Carlo estimates beyond that.
/// `train_cases` (optional) only flags overlapping case ids in the report.
ComparisonReport compare_methods(const std::vector<JobOffer>& offers,
                                 const std::vector<ApplicantProfile>& profiles,
                                 const std::vector<SolvedCase>& cases_test,
                                 const CostModel& trained_model,
                                 const TaxonomyGraph& graph,
                                 const Bm25Params& bm25_params = {},
                                 double alpha = 5.0e-2,
                                 const std::vector<SolvedCase>* train_cases = nullptr,
                                 const MonteCarlo& mc_fallback = {});

}  // namespace matchforge
