// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchforge/dataset_io.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"
#include "matchforge/validate.h"

using namespace matchforge;

namespace {

const char* kOffersPath = MATCHFORGE_SOURCE_DIR "/data/toy/offers.json";
const char* kProfilesPath = MATCHFORGE_SOURCE_DIR "/data/toy/profiles.json";
const char* kCasesPath = MATCHFORGE_SOURCE_DIR "/data/toy/cases.json";

TaxonomyGraph toy_graph() {
  return TaxonomyGraph::load_file(MATCHFORGE_SOURCE_DIR "/data/toy_taxonomy.txt");
}

struct Bundle {
  std::vector<JobOffer> offers = load_offers_file(kOffersPath);
  std::vector<ApplicantProfile> profiles = load_profiles_file(kProfilesPath);
  std::vector<SolvedCase> cases = load_cases_file(kCasesPath);
};

}  // namespace

TEST_CASE("items serialize compactly and round-trip") {
  const Item plain{"java", 1.0};
  CHECK(to_json(plain) == nlohmann::json("java"));
  CHECK(item_from_json(to_json(plain)) == plain);

  const Item weighted{"java", 2.5};
  const auto j = to_json(weighted);
  CHECK(j.at("concept") == "java");
  CHECK(j.at("weight") == 2.5);
  CHECK(item_from_json(j) == weighted);

  CHECK(item_from_json(nlohmann::json("sql")) == Item{"sql", 1.0});
  CHECK_THROWS_AS(item_from_json(nlohmann::json{{"weight", 2.0}}), ParseError);
  CHECK_THROWS_AS(item_from_json(nlohmann::json(42)), ParseError);
}

TEST_CASE("offers, profiles and cases round-trip through their file format") {
  const Bundle b;
  CHECK(b.offers.size() == 3);
  CHECK(b.profiles.size() == 5);
  CHECK(b.cases.size() == 2);

  CHECK(parse_offers(serialize_offers(b.offers)) == b.offers);
  CHECK(parse_profiles(serialize_profiles(b.profiles)) == b.profiles);
  CHECK(parse_cases(serialize_cases(b.cases)) == b.cases);

  const auto& backend = b.offers.front();
  CHECK(backend.id == "it-backend-001");
  CHECK(backend.domain_tag == "IT");
  REQUIRE(backend.items.count("skills"));
  const auto& skills = backend.items.at("skills");
  CHECK(skills.size() == 5);
  CHECK(skills.front() == Item{"java", 2.0});

  SolvedCase with_scores{"it-backend-001", {"cand-a", "cand-b"}, {0.9, 0.4}};
  CHECK(case_from_json(to_json(with_scores)) == with_scores);
}

TEST_CASE("model files round-trip and keep training metadata out of the model") {
  CostModel m;
  m.categories["skills"] = CategoryCosts{0.5, 1.2, -0.3};
  m.categories["languages"] = CategoryCosts{0.4, 2.0, 0.25};
  m.path_cutoff = 3;
  m.weight_scheme = WeightScheme::additive;
  CHECK(parse_model(serialize_model(m)) == m);

  const nlohmann::json meta{{"seed", 7}, {"converged", true}};
  const std::string text = serialize_model(m, &meta);
  CHECK(text.find("\"training\"") != std::string::npos);
  CHECK(parse_model(text) == m);
}

TEST_CASE("malformed dataset files are rejected with parse errors") {
  CHECK_THROWS_AS(parse_offers("{}"), ParseError);
  CHECK_THROWS_AS(parse_offers("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_offers("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_profiles(R"({"profiles": [{"items": {}}]})"), ParseError);
  CHECK_THROWS_AS(parse_cases(R"({"cases": [{"offer_id": "x"}]})"), ParseError);

  CHECK_THROWS_AS(parse_model(R"({"categories": {}})"), ParseError);
  CHECK_THROWS_AS(
      parse_model(R"({"categories": {"skills": {"alpha": -1, "ic": 1, "dc": 1}}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_model(R"({"categories": {"skills": {"alpha": 1, "ic": -1, "dc": 1}}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_model(
          R"({"categories": {"skills": {"alpha": 1, "ic": 1, "dc": 1}}, "path_cutoff": 0})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_model(
          R"({"categories": {"skills": {"alpha": 1, "ic": 1, "dc": 1}}, "weight_scheme": "x"})"),
      ParseError);
  // Negative dc is legitimate.
  CHECK_NOTHROW(parse_model(R"({"categories": {"skills": {"alpha": 1, "ic": 1, "dc": -1}}})"));
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(load_offers_file("/no/such/offers.json"), IoError);
  CHECK_THROWS_AS(read_file("/no/such/file"), IoError);
  CHECK_THROWS_AS(write_file("/no/such/dir/file.json", "x"), IoError);
}

TEST_CASE("weight scheme names round-trip") {
  CHECK(to_string(WeightScheme::multiplicative) == "multiplicative");
  CHECK(to_string(WeightScheme::additive) == "additive");
  CHECK(weight_scheme_from_string("multiplicative") == WeightScheme::multiplicative);
  CHECK(weight_scheme_from_string("additive") == WeightScheme::additive);
  CHECK_THROWS_AS(weight_scheme_from_string("divisive"), ParseError);
}

TEST_CASE("rankings serialize with a direction-appropriate value key") {
  Ranking costs{{{1, "a", 0.0}, {2, "b", 3.5}}, RankDirection::ascending_cost};
  auto j = to_json(costs);
  CHECK(j.at("entries")[0].at("total_cost") == 0.0);
  CHECK(costs.order() == std::vector<std::string>{"a", "b"});

  Ranking scores{{{1, "b", 9.0}, {2, "a", 1.0}}, RankDirection::descending_score};
  auto k = to_json(scores);
  CHECK(k.at("entries")[0].at("score") == 9.0);
  CHECK(scores.order() == std::vector<std::string>{"b", "a"});
}

TEST_CASE("bundled example dataset validates cleanly") {
  const Bundle b;
  const auto report = validate_dataset(b.offers, b.profiles, b.cases, toy_graph());
  CHECK(report.ok());
  CHECK(report.issues.empty());
  CHECK(report.to_text().empty());
}

TEST_CASE("validation flags structural errors") {
  Bundle b;
  const auto graph = toy_graph();

  SUBCASE("duplicate ids") {
    b.offers.push_back(b.offers.front());
    b.profiles.push_back(b.profiles.front());
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK_FALSE(report.ok());
    CHECK(report.error_count() == 2);
  }

  SUBCASE("empty ids") {
    b.offers.front().id = "";
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK_FALSE(report.ok());
    // The empty offer id also orphans the case that referenced it.
    CHECK(report.error_count() == 2);
  }

  SUBCASE("upper-case category names") {
    b.offers.front().items["Skills"] = {Item{"java", 1.0}};
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }

  SUBCASE("duplicate concepts within a category") {
    b.profiles.front().items["skills"].push_back(b.profiles.front().items["skills"].front());
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }

  SUBCASE("negative weights") {
    b.offers.front().items["skills"].front().weight = -2.0;
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }

  SUBCASE("dangling case references") {
    b.cases.front().offer_id = "ghost-offer";
    b.cases.back().expert_ranking.push_back("ghost-profile");
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 2);
  }

  SUBCASE("two cases for one offer") {
    b.cases.push_back(b.cases.front());
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }

  SUBCASE("short or repetitive expert rankings") {
    b.cases.front().expert_ranking = {"cand-bob"};
    b.cases.back().expert_ranking = {"cand-carol", "cand-carol"};
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 2);  // one too short, one duplicated entry
  }

  SUBCASE("score misalignment") {
    b.cases.front().scores = {1.0};
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }

  SUBCASE("increasing scores") {
    b.cases.front().scores = {0.1, 0.5, 0.4, 0.9};
    const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
    CHECK(report.error_count() == 1);
  }
}

TEST_CASE("validation warns without failing") {
  Bundle b;
  const auto graph = toy_graph();
  b.profiles.front().items["skills"].front().weight = 3.0;       // ignored weight
  b.profiles.front().items["skills"].push_back(Item{"juggling", 1.0});  // unknown concept
  const auto report = validate_dataset(b.offers, b.profiles, b.cases, graph);
  CHECK(report.ok());
  CHECK(report.error_count() == 0);
  CHECK(report.warning_count() == 2);
}

TEST_CASE("validation reports are insensitive to input order") {
  Bundle b;
  const auto graph = toy_graph();
  b.offers.front().id = "";                       // error
  b.profiles.front().items["skills"].front().weight = 9.0;  // warning
  const auto forward = validate_dataset(b.offers, b.profiles, b.cases, graph);

  std::reverse(b.offers.begin(), b.offers.end());
  std::reverse(b.profiles.begin(), b.profiles.end());
  std::reverse(b.cases.begin(), b.cases.end());
  const auto reversed = validate_dataset(b.offers, b.profiles, b.cases, graph);

  CHECK(forward.issues == reversed.issues);
  CHECK(forward.to_text() == reversed.to_text());
}
