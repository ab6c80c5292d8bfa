// SPDX-License-Identifier: Apache-2.0
#include "matchforge/validate.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

namespace matchforge {

namespace {

bool lowercase_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(),
                      [](unsigned char c) { return std::isupper(c) || std::isspace(c); });
}

struct Collector {
  std::vector<ValidationIssue> issues;

  void error(std::string where, std::string message) {
    issues.push_back({Severity::error, std::move(where), std::move(message)});
  }
  void warn(std::string where, std::string message) {
    issues.push_back({Severity::warning, std::move(where), std::move(message)});
  }
};

void check_items(Collector& out, const std::string& where, const ItemsByCategory& items,
                 const TaxonomyGraph& taxonomy, bool weights_meaningful) {
  for (const auto& [category, list] : items) {
    if (!lowercase_token(category))
      out.error(where, "category '" + category + "' must be a non-empty lowercase token");
    std::set<std::string> seen;
    for (const auto& item : list) {
      if (item.concept_id.empty()) {
        out.error(where, "empty concept in category '" + category + "'");
        continue;
      }
      if (!seen.insert(item.concept_id).second)
        out.error(where, "duplicate concept '" + item.concept_id + "' in category '" + category + "'");
      if (item.weight < 0)
        out.error(where, "negative weight on '" + item.concept_id + "'");
      if (!weights_meaningful && item.weight != 1.0)
        out.warn(where, "weight on profile item '" + item.concept_id + "' is ignored");
      if (!taxonomy.contains(item.concept_id))
        out.warn(where, "concept '" + item.concept_id + "' not in taxonomy (treated as isolated)");
    }
  }
}

}  // namespace

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  return std::count_if(issues.begin(), issues.end(),
                       [](const ValidationIssue& i) { return i.severity == Severity::error; });
}

std::size_t ValidationReport::warning_count() const {
  return issues.size() - error_count();
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& i : issues)
    out << (i.severity == Severity::error ? "error" : "warning") << ": " << i.where << ": "
        << i.message << "\n";
  return out.str();
}

ValidationReport validate_dataset(const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const std::vector<SolvedCase>& cases,
                                  const TaxonomyGraph& taxonomy) {
  Collector out;

  std::unordered_set<std::string> offer_ids;
  for (const auto& offer : offers) {
    const std::string where = "offer '" + offer.id + "'";
    if (offer.id.empty()) out.error("offer", "empty id");
    if (!offer_ids.insert(offer.id).second) out.error(where, "duplicate offer id");
    check_items(out, where, offer.items, taxonomy, /*weights_meaningful=*/true);
  }

  std::unordered_set<std::string> profile_ids;
  for (const auto& profile : profiles) {
    const std::string where = "profile '" + profile.id + "'";
    if (profile.id.empty()) out.error("profile", "empty id");
    if (!profile_ids.insert(profile.id).second) out.error(where, "duplicate profile id");
    check_items(out, where, profile.items, taxonomy, /*weights_meaningful=*/false);
  }

  std::unordered_set<std::string> case_offers;
  for (const auto& solved : cases) {
    const std::string where = "case '" + solved.offer_id + "'";
    if (!offer_ids.count(solved.offer_id))
      out.error(where, "references unknown offer id '" + solved.offer_id + "'");
    if (!case_offers.insert(solved.offer_id).second)
      out.error(where, "second case for the same offer");
    if (solved.expert_ranking.size() < 2)
      out.error(where, "expert_ranking needs at least 2 candidates");
    std::set<std::string> seen;
    for (const auto& pid : solved.expert_ranking) {
      if (!seen.insert(pid).second)
        out.error(where, "duplicate profile id '" + pid + "' in expert_ranking");
      if (!profile_ids.count(pid))
        out.error(where, "references unknown profile id '" + pid + "'");
    }
    if (!solved.scores.empty()) {
      if (solved.scores.size() != solved.expert_ranking.size())
        out.error(where, "scores length does not match expert_ranking");
      for (std::size_t i = 1; i < solved.scores.size(); ++i)
        if (solved.scores[i] > solved.scores[i - 1]) {
          out.error(where, "scores must be non-increasing");
          break;
        }
    }
  }

  // Deterministic, input-order-insensitive report.
  std::sort(out.issues.begin(), out.issues.end(),
            [](const ValidationIssue& a, const ValidationIssue& b) {
              return std::tie(a.where, a.message, a.severity) <
                     std::tie(b.where, b.message, b.severity);
            });
  out.issues.erase(std::unique(out.issues.begin(), out.issues.end()), out.issues.end());
  return {std::move(out.issues)};
}

}  // namespace matchforge
