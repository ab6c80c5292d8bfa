// SPDX-License-Identifier: Apache-2.0
#include "matchforge/bm25.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace matchforge {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char ch : text) {
    const unsigned char lower = static_cast<unsigned char>(std::tolower(ch));
    const bool keep = (lower >= 'a' && lower <= 'z') || (lower >= '0' && lower <= '9') ||
                      lower == '+' || lower == '#' || lower == '.';
    if (keep) {
      current.push_back(static_cast<char>(lower));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

std::vector<std::string> items_text(const ItemsByCategory& items) {
  std::string joined;
  for (const auto& [category, list] : items)
    for (const auto& item : list) {
      if (!joined.empty()) joined.push_back(' ');
      joined += item.concept_id;
    }
  return tokenize(joined);
}

}  // namespace

std::vector<std::string> profile_document(const ApplicantProfile& profile) {
  return items_text(profile.items);
}

std::vector<std::string> offer_query(const JobOffer& offer) { return items_text(offer.items); }

Bm25Index Bm25Index::build(const std::vector<ApplicantProfile>& profiles,
                           const Bm25Params& params) {
  if (profiles.empty()) throw InputError("bm25: empty profile list");

  Bm25Index index;
  index.params_ = params;
  index.doc_count_ = static_cast<int>(profiles.size());

  std::int64_t total_len = 0;
  for (const auto& profile : profiles) {
    if (index.term_freq_.count(profile.id))
      throw InputError("bm25: duplicate profile id '" + profile.id + "'");
    std::map<std::string, int>& tf = index.term_freq_[profile.id];
    const std::vector<std::string> doc = profile_document(profile);
    for (const auto& token : doc) ++tf[token];
    index.doc_len_[profile.id] = static_cast<int>(doc.size());
    total_len += static_cast<std::int64_t>(doc.size());
    for (const auto& [token, count] : tf) ++index.doc_freq_[token];
  }
  index.avg_doc_len_ = static_cast<double>(total_len) / index.doc_count_;
  return index;
}

int Bm25Index::doc_freq(const std::string& token) const {
  auto it = doc_freq_.find(token);
  return it == doc_freq_.end() ? 0 : it->second;
}

int Bm25Index::doc_length(const std::string& profile_id) const {
  auto it = doc_len_.find(profile_id);
  if (it == doc_len_.end()) throw LookupError("bm25: unknown profile id '" + profile_id + "'");
  return it->second;
}

double Bm25Index::score(const std::string& profile_id,
                        const std::vector<std::string>& query_tokens) const {
  auto doc_it = term_freq_.find(profile_id);
  if (doc_it == term_freq_.end())
    throw LookupError("bm25: unknown profile id '" + profile_id + "'");
  const std::map<std::string, int>& tf = doc_it->second;
  const double dl = doc_len_.at(profile_id);

  // Distinct tokens in sorted order: the summation order is fixed, so the
  // score is bit-identical under any query token permutation.
  std::vector<std::string> terms = query_tokens;
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  double score = 0.0;
  for (const auto& term : terms) {
    auto tf_it = tf.find(term);
    if (tf_it == tf.end()) continue;  // also sidesteps 0/0 at k1 = 0
    const double f = tf_it->second;
    const double df = doc_freq(term);
    const double idf = std::log1p((doc_count_ - df + 0.5) / (df + 0.5));
    const double norm = params_.k1 * (1.0 - params_.b + params_.b * dl / avg_doc_len_);
    score += idf * (f * (params_.k1 + 1.0)) / (f + norm);
  }
  return score;
}

Ranking rank_bm25(const JobOffer& offer,
                  const std::vector<ApplicantProfile>& profiles,
                  const Bm25Params& params) {
  const Bm25Index index = Bm25Index::build(profiles, params);
  const std::vector<std::string> query = offer_query(offer);

  const int n = static_cast<int>(profiles.size());
  std::vector<double> scores(n);
  for (int i = 0; i < n; ++i) scores[i] = index.score(profiles[i].id, query);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return profiles[a].id < profiles[b].id;
  });

  Ranking ranking;
  ranking.direction = RankDirection::descending_score;
  for (int r = 0; r < n; ++r)
    ranking.entries.push_back({r + 1, profiles[order[r]].id, scores[order[r]]});
  return ranking;
}

}  // namespace matchforge
