// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchforge/types.h"

namespace matchforge {

struct TaxonomyNode {
  std::string id;
  std::string label;
  CategoryId category;
};

/// Undirected unit-length concept graph. Replacement costs are derived from
/// shortest paths between concepts.
///
/// Text format, one record per line:
///   N <concept_id> <category> <label...>
///   E <concept_id> <concept_id>
///   # comment
/// A JSON form with "nodes"/"edges" arrays is accepted by load() as well.
///
/// The graph is immutable after load. Queries are pure; build_path_cache()
/// must be called before concurrent use if the cache is wanted at all.
class TaxonomyGraph {
 public:
  static constexpr int kUnreachable = -1;

  /// Parses either the line-oriented text format or the JSON form
  /// (detected from the first non-space byte).
  static TaxonomyGraph load(const std::string& source);
  static TaxonomyGraph load_file(const std::string& path);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(const std::string& concept_id) const;
  const TaxonomyNode& node(const std::string& concept_id) const;  // LookupError if absent

  /// All concept ids carrying the given category, sorted.
  std::vector<std::string> concepts_in_category(const CategoryId& category) const;
  std::vector<CategoryId> categories() const;

  /// Minimal edge count between two concepts, 0 iff a == b, kUnreachable if
  /// the concepts live in different components. LookupError for unknown ids.
  int shortest_path_len(const std::string& a, const std::string& b) const;

  /// Precomputes all-pairs path lengths (parallel BFS across sources).
  /// Optional; shortest_path_len falls back to a per-query BFS without it.
  void build_path_cache();
  bool has_path_cache() const { return !cache_.empty(); }

  const std::vector<TaxonomyNode>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edge_list_; }

 private:
  int index_of(const std::string& concept_id) const;  // -1 if absent
  int bfs(int from, int to) const;

  std::vector<TaxonomyNode> nodes_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edge_list_;
  std::size_t edge_count_ = 0;
  std::vector<std::int32_t> cache_;  // node_count^2 when built
};

/// A substitutable concept pair: cost = alpha_category * path_length,
/// before any item weighting.
struct Substitution {
  double cost = 0.0;
  int path_length = 0;
};

/// Replacement cost between two concepts of one category, or nullopt when
/// the pair is not substitutable (path longer than the model's cutoff, no
/// path at all, or either concept missing from the taxonomy). cost(a, a)
/// == 0 even for unknown concepts.
/// LookupError for unknown concepts; ConfigError for a missing category.
std::optional<Substitution> replacement_cost(const CostModel& model,
                                             const CategoryId& category,
                                             const std::string& a,
                                             const std::string& b,
                                             const TaxonomyGraph& graph);

}  // namespace matchforge
