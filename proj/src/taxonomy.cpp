// SPDX-License-Identifier: Apache-2.0
#include "matchforge/taxonomy.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

#include "matchforge/dataset_io.h"

namespace matchforge {

namespace {

struct Builder {
  std::vector<TaxonomyNode> nodes;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<std::string, std::string>> edges;

  void add_node(TaxonomyNode node, const std::string& where) {
    if (node.id.empty()) throw ParseError(where + ": empty concept_id");
    if (index.count(node.id))
      throw ParseError(where + ": duplicate concept_id '" + node.id + "'");
    index.emplace(node.id, static_cast<int>(nodes.size()));
    nodes.push_back(std::move(node));
  }
};

}  // namespace

TaxonomyGraph TaxonomyGraph::load_file(const std::string& path) {
  return load(read_file(path));
}

TaxonomyGraph TaxonomyGraph::load(const std::string& source) {
  Builder b;

  auto first = source.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && source[first] == '{';

  if (is_json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("taxonomy JSON: ") + e.what());
    }
    if (!j.contains("nodes") || !j["nodes"].is_array())
      throw ParseError("taxonomy JSON: missing 'nodes' array");
    for (const auto& n : j["nodes"]) {
      TaxonomyNode node;
      node.id = n.at("concept_id").get<std::string>();
      node.category = n.at("category").get<std::string>();
      node.label = n.value("label", node.id);
      std::string where = "nodes['" + node.id + "']";
      b.add_node(std::move(node), where);
    }
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("taxonomy JSON: edge must be a two-element array");
      b.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } else {
    std::istringstream in(source);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag) || tag[0] == '#') continue;
      const std::string where = "line " + std::to_string(line_no);
      if (tag == "N") {
        TaxonomyNode node;
        if (!(ls >> node.id >> node.category))
          throw ParseError(where + ": expected 'N <concept_id> <category> <label...>'");
        std::getline(ls, node.label);
        auto start = node.label.find_first_not_of(" \t");
        node.label = start == std::string::npos ? node.id : node.label.substr(start);
        b.add_node(std::move(node), where);
      } else if (tag == "E") {
        std::string u, v;
        if (!(ls >> u >> v))
          throw ParseError(where + ": expected 'E <concept_id> <concept_id>'");
        b.edges.emplace_back(std::move(u), std::move(v));
      } else {
        throw ParseError(where + ": unknown record tag '" + tag + "'");
      }
    }
  }

  TaxonomyGraph g;
  g.nodes_ = std::move(b.nodes);
  g.index_ = std::move(b.index);
  g.adjacency_.assign(g.nodes_.size(), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : b.edges) {
    auto iu = g.index_.find(u);
    auto iv = g.index_.find(v);
    if (iu == g.index_.end())
      throw ParseError("edge endpoint '" + u + "' is not a declared node");
    if (iv == g.index_.end())
      throw ParseError("edge endpoint '" + v + "' is not a declared node");
    if (iu->second == iv->second)
      throw ParseError("self-loop on '" + u + "'");
    auto key = std::minmax(iu->second, iv->second);
    if (!seen.insert({key.first, key.second}).second) continue;  // duplicate edge lines collapse
    g.adjacency_[iu->second].push_back(iv->second);
    g.adjacency_[iv->second].push_back(iu->second);
    g.edge_list_.push_back({key.first, key.second});
  }
  g.edge_count_ = g.edge_list_.size();
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

bool TaxonomyGraph::contains(const std::string& concept_id) const {
  return index_.count(concept_id) != 0;
}

int TaxonomyGraph::index_of(const std::string& concept_id) const {
  auto it = index_.find(concept_id);
  return it == index_.end() ? -1 : it->second;
}

const TaxonomyNode& TaxonomyGraph::node(const std::string& concept_id) const {
  int i = index_of(concept_id);
  if (i < 0) throw LookupError("unknown concept '" + concept_id + "'");
  return nodes_[i];
}

std::vector<std::string> TaxonomyGraph::concepts_in_category(const CategoryId& category) const {
  std::vector<std::string> out;
  for (const auto& n : nodes_)
    if (n.category == category) out.push_back(n.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CategoryId> TaxonomyGraph::categories() const {
  std::set<CategoryId> cats;
  for (const auto& n : nodes_) cats.insert(n.category);
  return {cats.begin(), cats.end()};
}

int TaxonomyGraph::bfs(int from, int to) const {
  if (from == to) return 0;
  std::vector<std::int32_t> dist(nodes_.size(), kUnreachable);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adjacency_[u]) {
      if (dist[v] != kUnreachable) continue;
      dist[v] = dist[u] + 1;
      if (v == to) return dist[v];
      queue.push_back(v);
    }
  }
  return kUnreachable;
}

int TaxonomyGraph::shortest_path_len(const std::string& a, const std::string& b) const {
  int ia = index_of(a);
  if (ia < 0) throw LookupError("unknown concept '" + a + "'");
  int ib = index_of(b);
  if (ib < 0) throw LookupError("unknown concept '" + b + "'");
  if (!cache_.empty()) return cache_[static_cast<std::size_t>(ia) * nodes_.size() + ib];
  return bfs(ia, ib);
}

void TaxonomyGraph::build_path_cache() {
  const std::size_t n = nodes_.size();
  cache_.assign(n * n, kUnreachable);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t src = 0; src < static_cast<std::int64_t>(n); ++src) {
    auto* row = cache_.data() + src * n;
    row[src] = 0;
    std::deque<int> queue{static_cast<int>(src)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adjacency_[u]) {
        if (row[v] != kUnreachable) continue;
        row[v] = row[u] + 1;
        queue.push_back(v);
      }
    }
  }
}

std::optional<Substitution> replacement_cost(const CostModel& model,
                                             const CategoryId& category,
                                             const std::string& a,
                                             const std::string& b,
                                             const TaxonomyGraph& graph) {
  const CategoryCosts& costs = model.at(category);
  if (a == b) return Substitution{0.0, 0};
  // Concepts missing from the taxonomy are isolated: nothing substitutes them.
  if (!graph.contains(a) || !graph.contains(b)) return std::nullopt;
  int len = graph.shortest_path_len(a, b);
  if (len == TaxonomyGraph::kUnreachable || len > model.path_cutoff) return std::nullopt;
  return Substitution{costs.alpha * static_cast<double>(len), len};
}

}  // namespace matchforge
