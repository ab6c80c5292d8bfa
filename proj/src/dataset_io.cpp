// SPDX-License-Identifier: Apache-2.0
#include "matchforge/dataset_io.h"

#include <fstream>
#include <sstream>

namespace matchforge {

using nlohmann::json;

namespace {

json items_to_json(const ItemsByCategory& items) {
  json out = json::object();
  for (const auto& [category, list] : items) {
    json arr = json::array();
    for (const auto& item : list) arr.push_back(to_json(item));
    out[category] = std::move(arr);
  }
  return out;
}

ItemsByCategory items_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": 'items' must be an object keyed by category");
  ItemsByCategory items;
  for (const auto& [category, arr] : j.items()) {
    if (!arr.is_array()) throw ParseError(where + ": items['" + category + "'] must be an array");
    std::vector<Item> list;
    for (const auto& e : arr) list.push_back(item_from_json(e));
    items.emplace(category, std::move(list));
  }
  return items;
}

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T, typename Fn>
std::vector<T> parse_list(const std::string& text, const char* key, Fn from) {
  json j = parse_text(text, key);
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string(key) + ".json: missing top-level '" + key + "' array");
  std::vector<T> out;
  for (const auto& e : j[key]) out.push_back(from(e));
  return out;
}

}  // namespace

json to_json(const Item& item) {
  if (item.weight == 1.0) return json(item.concept_id);  // bare-string shorthand
  return json{{"concept", item.concept_id}, {"weight", item.weight}};
}

Item item_from_json(const json& j) {
  Item item;
  if (j.is_string()) {  // shorthand: a bare concept string
    item.concept_id = j.get<std::string>();
    return item;
  }
  if (!j.is_object() || !j.contains("concept"))
    throw ParseError("item must be a string or an object with a 'concept' field");
  item.concept_id = j["concept"].get<std::string>();
  item.weight = j.value("weight", 1.0);
  return item;
}

json to_json(const JobOffer& offer) {
  return json{{"id", offer.id}, {"domain_tag", offer.domain_tag}, {"items", items_to_json(offer.items)}};
}

JobOffer offer_from_json(const json& j) {
  try {
    JobOffer offer;
    offer.id = j.at("id").get<std::string>();
    offer.domain_tag = j.value("domain_tag", "");
    offer.items = items_from_json(j.value("items", json::object()), "offer '" + offer.id + "'");
    return offer;
  } catch (const json::exception& e) {
    throw ParseError(std::string("offer: ") + e.what());
  }
}

json to_json(const ApplicantProfile& profile) {
  return json{{"id", profile.id}, {"items", items_to_json(profile.items)}};
}

ApplicantProfile profile_from_json(const json& j) {
  try {
    ApplicantProfile profile;
    profile.id = j.at("id").get<std::string>();
    profile.items = items_from_json(j.value("items", json::object()), "profile '" + profile.id + "'");
    return profile;
  } catch (const json::exception& e) {
    throw ParseError(std::string("profile: ") + e.what());
  }
}

json to_json(const SolvedCase& solved) {
  json j{{"offer_id", solved.offer_id}, {"expert_ranking", solved.expert_ranking}};
  if (!solved.scores.empty()) j["scores"] = solved.scores;
  return j;
}

SolvedCase case_from_json(const json& j) {
  try {
    SolvedCase solved;
    solved.offer_id = j.at("offer_id").get<std::string>();
    solved.expert_ranking = j.at("expert_ranking").get<std::vector<std::string>>();
    if (j.contains("scores")) solved.scores = j["scores"].get<std::vector<double>>();
    return solved;
  } catch (const json::exception& e) {
    throw ParseError(std::string("case: ") + e.what());
  }
}

json to_json(const CostModel& model) {
  json cats = json::object();
  for (const auto& [category, c] : model.categories)
    cats[category] = json{{"alpha", c.alpha}, {"ic", c.ic}, {"dc", c.dc}};
  return json{{"categories", std::move(cats)},
              {"path_cutoff", model.path_cutoff},
              {"weight_scheme", to_string(model.weight_scheme)}};
}

CostModel model_from_json(const json& j) {
  try {
    CostModel model;
    for (const auto& [category, c] : j.at("categories").items()) {
    CategoryCosts costs;
      costs.alpha = c.at("alpha").get<double>();
      costs.ic = c.at("ic").get<double>();
      costs.dc = c.at("dc").get<double>();
      if (costs.alpha < 0) throw ParseError("model: alpha must be >= 0 ('" + category + "')");
      if (costs.ic < 0) throw ParseError("model: ic must be >= 0 ('" + category + "')");
      model.categories.emplace(category, costs);
    }
    if (model.categories.empty())
      throw ParseError("model: 'categories' must name at least one category");
    model.path_cutoff = j.value("path_cutoff", 4);
    if (model.path_cutoff < 1) throw ParseError("model: path_cutoff must be >= 1");
    model.weight_scheme = weight_scheme_from_string(j.value("weight_scheme", "multiplicative"));
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
}

json to_json(const Ranking& ranking) {
  json arr = json::array();
  const char* value_key =
      ranking.direction == RankDirection::ascending_cost ? "total_cost" : "score";
  for (const auto& e : ranking.entries)
    arr.push_back(json{{"rank", e.rank}, {"profile_id", e.profile_id}, {value_key, e.value}});
  return json{{"direction", ranking.direction == RankDirection::ascending_cost
                                ? "ascending_cost"
                                : "descending_score"},
              {"entries", std::move(arr)}};
}

json to_json(const EditScript& script, const CategoryId& category) {
  json ops = json::array();
  for (const auto& op : script.ops) {
    json o{{"category", category}, {"kind", to_string(op.kind)}, {"cost", op.cost}};
    if (!op.offer_concept.empty()) o["offer_concept"] = op.offer_concept;
    if (!op.profile_concept.empty()) o["profile_concept"] = op.profile_concept;
    if (op.path_length >= 0) o["path_length"] = op.path_length;
    if (op.weight != 1.0) o["weight"] = op.weight;
    ops.push_back(std::move(o));
  }
  return json{{"ops", std::move(ops)}, {"total", script.total}};
}

std::vector<JobOffer> parse_offers(const std::string& text) {
  return parse_list<JobOffer>(text, "offers", offer_from_json);
}

std::vector<ApplicantProfile> parse_profiles(const std::string& text) {
  return parse_list<ApplicantProfile>(text, "profiles", profile_from_json);
}

std::vector<SolvedCase> parse_cases(const std::string& text) {
  return parse_list<SolvedCase>(text, "cases", case_from_json);
}

CostModel parse_model(const std::string& text) {
  return model_from_json(parse_text(text, "model.json"));
}

namespace {

template <typename T>
std::string serialize_list(const char* key, const std::vector<T>& list) {
  json arr = json::array();
  for (const auto& e : list) arr.push_back(to_json(e));
  json j{{key, std::move(arr)}};
  return j.dump(2) + "\n";
}

}  // namespace

std::string serialize_offers(const std::vector<JobOffer>& offers) {
  return serialize_list("offers", offers);
}

std::string serialize_profiles(const std::vector<ApplicantProfile>& profiles) {
  return serialize_list("profiles", profiles);
}

std::string serialize_cases(const std::vector<SolvedCase>& cases) {
  return serialize_list("cases", cases);
}

std::string serialize_model(const CostModel& model, const json* training_meta) {
  json j = to_json(model);
  if (training_meta != nullptr) j["training"] = *training_meta;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
}

std::vector<JobOffer> load_offers_file(const std::string& path) {
  return parse_offers(read_file(path));
}

std::vector<ApplicantProfile> load_profiles_file(const std::string& path) {
  return parse_profiles(read_file(path));
}

std::vector<SolvedCase> load_cases_file(const std::string& path) {
  return parse_cases(read_file(path));
}

CostModel load_model_file(const std::string& path) {
  return parse_model(read_file(path));
}

}  // namespace matchforge
