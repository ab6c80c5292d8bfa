// SPDX-License-Identifier: Apache-2.0
#include "matchforge/types.h"

namespace matchforge {

std::string to_string(WeightScheme scheme) {
  return scheme == WeightScheme::multiplicative ? "multiplicative" : "additive";
}

WeightScheme weight_scheme_from_string(const std::string& token) {
  if (token == "multiplicative") return WeightScheme::multiplicative;
  if (token == "additive") return WeightScheme::additive;
  throw ParseError("unknown weight_scheme: '" + token + "'");
}

const CategoryCosts& CostModel::at(const CategoryId& category) const {
  auto it = categories.find(category);
  if (it == categories.end())
    throw ConfigError("cost model has no entry for category '" + category + "'");
  return it->second;
}

std::vector<std::string> Ranking::order() const {
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const auto& e : entries) ids.push_back(e.profile_id);
  return ids;
}

std::string to_string(OpKind kind) {
  switch (kind) {
    case OpKind::match: return "match";
    case OpKind::substitute: return "substitute";
    case OpKind::insert: return "insert";
    case OpKind::erase: return "delete";
  }
  return "?";
}

}  // namespace matchforge
