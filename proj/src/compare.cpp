// SPDX-License-Identifier: Apache-2.0
#include "matchforge/compare.h"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "matchforge/scoring.h"

namespace matchforge {

namespace {

std::string fmt_rho(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

std::string fmt_p(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

}  // namespace

ComparisonReport compare_methods(const std::vector<JobOffer>& offers,
                                 const std::vector<ApplicantProfile>& profiles,
                                 const std::vector<SolvedCase>& cases_test,
                                 const CostModel& trained_model,
                                 const TaxonomyGraph& graph,
                                 const Bm25Params& bm25_params,
                                 double alpha,
                                 const std::vector<SolvedCase>* train_cases,
                                 const MonteCarlo& mc_fallback) {
  if (cases_test.empty()) throw InputError("compare_methods: empty test case list");

  std::unordered_map<std::string, const JobOffer*> offer_by_id;
  for (const auto& o : offers) offer_by_id.emplace(o.id, &o);
  std::unordered_map<std::string, const ApplicantProfile*> profile_by_id;
  for (const auto& p : profiles) profile_by_id.emplace(p.id, &p);

  ComparisonReport report;
  report.alpha = alpha;

  if (train_cases != nullptr) {
    std::set<std::string> train_ids;
    for (const auto& c : *train_cases) train_ids.insert(c.offer_id);
    for (const auto& c : cases_test)
      if (train_ids.count(c.offer_id)) {
        report.train_test_overlap = true;
        report.notes.push_back("test case '" + c.offer_id +
                               "' also appears in the training set");
      }
  }

  for (const auto& solved : cases_test) {
    auto offer_it = offer_by_id.find(solved.offer_id);
    if (offer_it == offer_by_id.end())
      throw LookupError("compare: unknown offer '" + solved.offer_id + "'");
    const JobOffer& offer = *offer_it->second;

    std::vector<const ApplicantProfile*> pool_ptrs;
    std::vector<ApplicantProfile> pool;
    for (const auto& pid : solved.expert_ranking) {
      auto it = profile_by_id.find(pid);
      if (it == profile_by_id.end())
        throw LookupError("compare: case '" + solved.offer_id + "' references unknown profile '" +
                          pid + "'");
      pool_ptrs.push_back(it->second);
      pool.push_back(*it->second);
    }
    const int n = static_cast<int>(pool.size());

    CaseComparison row;
    row.domain = offer.domain_tag;
    row.case_id = solved.offer_id;
    row.rho_approach = spearman_rho(
        rank_candidates(offer, pool_ptrs, trained_model, graph).order(), solved.expert_ranking);
    row.rho_baseline =
        spearman_rho(rank_bm25(offer, pool, bm25_params).order(), solved.expert_ranking);

    const bool exact = n <= 8;
    row.p_approach = exact ? permutation_p_value_exact(row.rho_approach, n)
                           : permutation_p_value(row.rho_approach, n, mc_fallback);
    row.p_baseline = exact ? permutation_p_value_exact(row.rho_baseline, n)
                           : permutation_p_value(row.rho_baseline, n, mc_fallback);
    row.significant_approach = row.p_approach < alpha;
    row.significant_baseline = row.p_baseline < alpha;

    if (row.rho_approach > row.rho_baseline)
      ++report.wins;
    else if (row.rho_approach < row.rho_baseline)
      ++report.losses;
    else
      ++report.ties;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ComparisonReport::to_text() const {
  // group rows by domain, preserving first-appearance order
  std::vector<std::string> domains;
  for (const auto& row : rows)
    if (std::find(domains.begin(), domains.end(), row.domain) == domains.end())
      domains.push_back(row.domain);

  std::ostringstream out;
  out << "method comparison (" << rows.size() << " cases); '*' marks p >= "
      << fmt_p(alpha) << "\n";
  if (train_test_overlap) out << "WARNING: train/test overlap detected\n";
  for (const auto& note : notes) out << "note: " << note << "\n";

  out << std::left << std::setw(12) << "domain" << std::setw(24) << "case" << std::setw(10)
      << "rho_tc" << std::setw(13) << "p_tc" << std::setw(10) << "rho_bm25" << std::setw(13)
      << "p_bm25" << "\n";
  for (const auto& domain : domains) {
    for (const auto& row : rows) {
      if (row.domain != domain) continue;
      const std::string p_a = fmt_p(row.p_approach) + (row.significant_approach ? "" : "*");
      const std::string p_b = fmt_p(row.p_baseline) + (row.significant_baseline ? "" : "*");
      out << std::left << std::setw(12) << row.domain << std::setw(24) << row.case_id
          << std::setw(10) << fmt_rho(row.rho_approach) << std::setw(13) << p_a << std::setw(10)
          << fmt_rho(row.rho_baseline) << std::setw(13) << p_b << "\n";
    }
  }
  out << "wins: " << wins << "  losses: " << losses << "  ties: " << ties << "\n";
  return out.str();
}

std::string ComparisonReport::to_csv() const {
  std::ostringstream out;
  out << "domain,case_id,rho_approach,rho_baseline,p_approach,p_baseline,"
         "significant_approach,significant_baseline\n";
  for (const auto& row : rows) {
    out << row.domain << ',' << row.case_id << ',' << nlohmann::json(row.rho_approach).dump()
        << ',' << nlohmann::json(row.rho_baseline).dump() << ','
        << nlohmann::json(row.p_approach).dump() << ',' << nlohmann::json(row.p_baseline).dump()
        << ',' << (row.significant_approach ? 1 : 0) << ',' << (row.significant_baseline ? 1 : 0)
        << "\n";
  }
  return out.str();
}

}  // namespace matchforge
