// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matchforge/types.h"

namespace matchforge {

// JSON file formats (offers.json / profiles.json / cases.json / model.json).
// Categories are object keys; item and case field names mirror the domain
// types. parse(serialize(x)) == x for all of these.

nlohmann::json to_json(const Item& item);
nlohmann::json to_json(const JobOffer& offer);
nlohmann::json to_json(const ApplicantProfile& profile);
nlohmann::json to_json(const SolvedCase& solved);
nlohmann::json to_json(const CostModel& model);
nlohmann::json to_json(const Ranking& ranking);
nlohmann::json to_json(const EditScript& script, const CategoryId& category);

Item item_from_json(const nlohmann::json& j);
JobOffer offer_from_json(const nlohmann::json& j);
ApplicantProfile profile_from_json(const nlohmann::json& j);
SolvedCase case_from_json(const nlohmann::json& j);
CostModel model_from_json(const nlohmann::json& j);

std::vector<JobOffer> parse_offers(const std::string& text);
std::vector<ApplicantProfile> parse_profiles(const std::string& text);
std::vector<SolvedCase> parse_cases(const std::string& text);
CostModel parse_model(const std::string& text);

std::string serialize_offers(const std::vector<JobOffer>& offers);
std::string serialize_profiles(const std::vector<ApplicantProfile>& profiles);
std::string serialize_cases(const std::vector<SolvedCase>& cases);

/// Serializes a trained model; `training_meta` (may be null) is stored
/// under a "training" key: seed, iterations, final objective, convergence.
std::string serialize_model(const CostModel& model,
                            const nlohmann::json* training_meta = nullptr);

std::string read_file(const std::string& path);           // IoError if unreadable
void write_file(const std::string& path, const std::string& content);

std::vector<JobOffer> load_offers_file(const std::string& path);
std::vector<ApplicantProfile> load_profiles_file(const std::string& path);
std::vector<SolvedCase> load_cases_file(const std::string& path);
CostModel load_model_file(const std::string& path);

}  // namespace matchforge
