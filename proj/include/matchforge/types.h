// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchforge {

// Category tokens are lowercase and open-ended; "skills", "education" and
// "languages" are the conventional ones.
using CategoryId = std::string;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input text (carries line/position context in the message).
struct ParseError : Error {
  using Error::Error;
};
// A referenced entity does not exist.
struct LookupError : Error {
  using Error::Error;
};
// Missing or inconsistent cost-model / parameter configuration.
struct ConfigError : Error {
  using Error::Error;
};
// Caller violated an operation precondition (empty list, bad bounds, ...).
struct InputError : Error {
  using Error::Error;
};
// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};
// Synthetic data generation cannot satisfy the request (e.g. a sampled item
// count exceeds the category vocabulary).
struct GenerationError : Error {
  using Error::Error;
};

/// One requested or offered descriptor. `weight` is meaningful on offer
/// items only; profile items carry it through parsing but it is ignored.
struct Item {
  std::string concept_id;
  double weight = 1.0;

  friend bool operator==(const Item&, const Item&) = default;
};

using ItemsByCategory = std::map<CategoryId, std::vector<Item>>;

struct JobOffer {
  std::string id;
  std::string domain_tag;
  ItemsByCategory items;

  friend bool operator==(const JobOffer&, const JobOffer&) = default;
};

struct ApplicantProfile {
  std::string id;
  ItemsByCategory items;

  friend bool operator==(const ApplicantProfile&, const ApplicantProfile&) = default;
};

/// A past offer together with the expert's total order over candidates
/// (best first). `scores` is optional; when present it aligns with
/// expert_ranking and is non-increasing. Only the order is ever trained on.
struct SolvedCase {
  std::string offer_id;
  std::vector<std::string> expert_ranking;
  std::vector<double> scores;  // empty = absent

  friend bool operator==(const SolvedCase&, const SolvedCase&) = default;
};

enum class WeightScheme { multiplicative, additive };

std::string to_string(WeightScheme scheme);
WeightScheme weight_scheme_from_string(const std::string& token);

/// Per-category transformation cost parameters. alpha is the replacement
/// cost per unit of taxonomy path length; ic the insertion cost per missing
/// requested item; dc the deletion cost per surplus profile item (may be
/// negative: a surplus item can be considered an asset).
struct CategoryCosts {
  double alpha = 1.0;
  double ic = 1.0;
  double dc = 1.0;

  friend bool operator==(const CategoryCosts&, const CategoryCosts&) = default;
};

struct CostModel {
  std::map<CategoryId, CategoryCosts> categories;
  int path_cutoff = 4;  // paths longer than this are not substitutable
  WeightScheme weight_scheme = WeightScheme::multiplicative;

  const CategoryCosts& at(const CategoryId& category) const;
  bool has(const CategoryId& category) const { return categories.count(category) != 0; }

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

enum class RankDirection { ascending_cost, descending_score };

struct RankedEntry {
  int rank = 0;  // 1-based, consecutive
  std::string profile_id;
  double value = 0.0;  // total cost or score, per direction

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct Ranking {
  std::vector<RankedEntry> entries;
  RankDirection direction = RankDirection::ascending_cost;

  /// Profile ids in rank order, best first.
  std::vector<std::string> order() const;

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

enum class OpKind { match, substitute, insert, erase };

std::string to_string(OpKind kind);

struct EditOp {
  OpKind kind = OpKind::match;
  std::string offer_concept;    // empty for deletions
  std::string profile_concept;  // empty for insertions
  double cost = 0.0;
  int path_length = -1;  // -1 when not applicable
  double weight = 1.0;   // offer-item weight applied to this op

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

/// Operation trace realizing one category's minimal transformation. Every
/// offer item appears in exactly one match/substitute/insert op and every
/// profile item in exactly one match/substitute/erase op; `total` equals
/// the category cost reported alongside the script.
struct EditScript {
  std::vector<EditOp> ops;
  double total = 0.0;

  friend bool operator==(const EditScript&, const EditScript&) = default;
};

}  // namespace matchforge
