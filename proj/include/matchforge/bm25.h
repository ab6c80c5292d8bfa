// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "matchforge/types.h"

namespace matchforge {

/// Lowercases and splits on anything outside [a-z0-9+#.]. '+', '#' and '.'
/// are kept as token characters so "c++", "c#" and ".net" survive intact.
/// Empty tokens are dropped.
std::vector<std::string> tokenize(const std::string& text);

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

/// A profile's bag-of-words document: its item concepts across all
/// categories, tokenized. Category segmentation and weights are discarded;
/// this baseline is deliberately structure-blind.
std::vector<std::string> profile_document(const ApplicantProfile& profile);

/// The query for an offer: all its item concepts, tokenized.
std::vector<std::string> offer_query(const JobOffer& offer);

class Bm25Index {
 public:
  /// InputError on an empty profile list or a duplicate profile id.
  static Bm25Index build(const std::vector<ApplicantProfile>& profiles,
                         const Bm25Params& params = {});

  int doc_count() const { return doc_count_; }
  double avg_doc_len() const { return avg_doc_len_; }
  int doc_freq(const std::string& token) const;        // 0 when unseen
  int doc_length(const std::string& profile_id) const;  // LookupError when unknown

  /// Okapi BM25 over distinct query tokens, with the non-negative idf
  /// variant ln(1 + (N - df + 0.5) / (df + 0.5)). Terms absent from the
  /// document contribute nothing. LookupError for an unknown profile id.
  double score(const std::string& profile_id,
               const std::vector<std::string>& query_tokens) const;

 private:
  Bm25Params params_;
  int doc_count_ = 0;
  double avg_doc_len_ = 0.0;
  std::map<std::string, int> doc_freq_;
  std::map<std::string, int> doc_len_;
  std::map<std::string, std::map<std::string, int>> term_freq_;  // profile id -> token -> tf
};

/// Descending BM25 score, ties broken by profile id ascending.
/// InputError on an empty profile list.
Ranking rank_bm25(const JobOffer& offer,
                  const std::vector<ApplicantProfile>& profiles,
                  const Bm25Params& params = {});

}  // namespace matchforge
