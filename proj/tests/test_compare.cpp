// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchforge/compare.h"
#include "matchforge/scoring.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

using namespace matchforge;

namespace {

TaxonomyGraph toy() {
  return TaxonomyGraph::load_file(MATCHFORGE_SOURCE_DIR "/data/toy_taxonomy.txt");
}

ApplicantProfile profile_of(std::string id, std::initializer_list<std::string> skills) {
  ApplicantProfile p;
  p.id = std::move(id);
  for (const auto& s : skills) p.items["skills"].push_back(Item{s, 1.0});
  return p;
}

JobOffer offer_of(std::string id, std::string domain) {
  JobOffer o;
  o.id = std::move(id);
  o.domain_tag = std::move(domain);
  o.items["skills"] = {{"java", 2.0}, {"sql", 1.0}};
  return o;
}

CostModel unit_model() {
  CostModel m;
  m.categories["skills"] = CategoryCosts{0.5, 1.0, 1.0};
  m.path_cutoff = 4;
  m.weight_scheme = WeightScheme::multiplicative;
  return m;
}

// The transformation model prefers the lean exact matcher 'pe' (one cheap
// insertion) over the padded 'pf' (two deletions); BM25 prefers 'pf', whose
// document covers both query tokens. Expert orders picking either side turn
// one case into a win and the other into a loss.
struct Fixture {
  TaxonomyGraph graph = toy();
  CostModel model = unit_model();
  std::vector<JobOffer> offers;
  std::vector<ApplicantProfile> profiles;

  Fixture() {
    offers = {offer_of("o-win", "IT"), offer_of("o-loss", "IT"),
              offer_of("o-tie", "Legal"), offer_of("o-tie2", "Legal")};
    profiles = {
        profile_of("pa", {"java", "sql"}),            // cost 0
        profile_of("pb", {"cpp", "sql"}),             // cost 2
        profile_of("pc", {}),                         // cost 3
        profile_of("pd", {"cobol"}),                  // cost 4
        profile_of("pe", {"java"}),                   // lean: one insertion
        profile_of("pf", {"java", "sql", "git", "svn"}),  // padded: two deletions
    };
  }

  static SolvedCase solved(std::string offer_id, std::initializer_list<std::string> order) {
    SolvedCase c;
    c.offer_id = std::move(offer_id);
    c.expert_ranking = order;
    return c;
  }
};

}  // namespace

TEST_CASE("wins, losses, and ties partition the test cases") {
  Fixture f;
  const std::vector<SolvedCase> cases = {
      Fixture::solved("o-win", {"pe", "pf"}),
      Fixture::solved("o-loss", {"pf", "pe"}),
      Fixture::solved("o-tie", {"pa", "pb", "pc", "pd"}),
      Fixture::solved("o-tie2", {"pa", "pb", "pd", "pc"}),
  };

  const auto report = compare_methods(f.offers, f.profiles, cases, f.model, f.graph);
  CHECK(report.wins == 1);
  CHECK(report.losses == 1);
  CHECK(report.ties == 2);
  CHECK(report.wins + report.losses + report.ties == static_cast<int>(report.rows.size()));
  CHECK(!report.train_test_overlap);
  CHECK(report.notes.empty());

  REQUIRE(report.rows.size() == 4);  // input order preserved
  CHECK(report.rows[0].case_id == "o-win");
  CHECK(report.rows[0].domain == "IT");
  CHECK(report.rows[0].rho_approach == 1.0);
  CHECK(report.rows[0].rho_baseline == -1.0);
  CHECK(report.rows[0].p_approach == 0.5);   // 1 of 2 orderings at rho >= 1
  CHECK(report.rows[0].p_baseline == 1.0);   // every ordering reaches rho >= -1
  CHECK(!report.rows[0].significant_approach);
  CHECK(!report.rows[0].significant_baseline);

  CHECK(report.rows[1].case_id == "o-loss");
  CHECK(report.rows[1].rho_approach == -1.0);
  CHECK(report.rows[1].rho_baseline == 1.0);

  CHECK(report.rows[2].domain == "Legal");
  CHECK(report.rows[2].rho_approach == 1.0);
  CHECK(report.rows[2].rho_baseline == 1.0);
  CHECK(report.rows[2].p_approach == 1.0 / 24.0);
  CHECK(report.rows[2].significant_approach);  // 1/24 < 0.05
  CHECK(report.rows[2].significant_baseline);

  CHECK(report.rows[3].rho_approach == 0.8);
  CHECK(report.rows[3].rho_baseline == 0.8);
  CHECK(report.rows[3].p_approach == 4.0 / 24.0);
  CHECK(!report.rows[3].significant_approach);  // 4/24 >= 0.05
}

TEST_CASE("csv output has one labelled row per case") {
  Fixture f;
  const std::vector<SolvedCase> cases = {
      Fixture::solved("o-win", {"pe", "pf"}),
      Fixture::solved("o-tie", {"pa", "pb", "pc", "pd"}),
  };
  const auto report = compare_methods(f.offers, f.profiles, cases, f.model, f.graph);
  const std::string csv = report.to_csv();

  std::vector<std::string> lines;
  std::istringstream stream(csv);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);

  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "domain,case_id,rho_approach,rho_baseline,p_approach,p_baseline,"
        "significant_approach,significant_baseline");
  CHECK(lines[1] == "IT,o-win,1.0,-1.0,0.5,1.0,0,0");
  const std::string p_tie = nlohmann::json(1.0 / 24.0).dump();
  CHECK(lines[2] == "Legal,o-tie,1.0,1.0," + p_tie + "," + p_tie + ",1,1");
}

TEST_CASE("text report groups by domain and stars weak p-values") {
  Fixture f;
  const std::vector<SolvedCase> cases = {
      Fixture::solved("o-win", {"pe", "pf"}),
      Fixture::solved("o-loss", {"pf", "pe"}),
      Fixture::solved("o-tie", {"pa", "pb", "pc", "pd"}),
      Fixture::solved("o-tie2", {"pa", "pb", "pd", "pc"}),
  };
  const auto report = compare_methods(f.offers, f.profiles, cases, f.model, f.graph);
  const std::string text = report.to_text();

  CHECK(text.find("method comparison (4 cases)") != std::string::npos);
  CHECK(text.find("wins: 1  losses: 1  ties: 2") != std::string::npos);
  CHECK(text.find("WARNING") == std::string::npos);

  // IT rows precede Legal rows, each in input order.
  const auto pos_win = text.find("o-win");
  const auto pos_loss = text.find("o-loss");
  const auto pos_tie = text.find("o-tie ");
  const auto pos_tie2 = text.find("o-tie2");
  REQUIRE(pos_win != std::string::npos);
  REQUIRE(pos_loss != std::string::npos);
  REQUIRE(pos_tie != std::string::npos);
  REQUIRE(pos_tie2 != std::string::npos);
  CHECK(pos_win < pos_loss);
  CHECK(pos_loss < pos_tie);
  CHECK(pos_tie < pos_tie2);

  // One star in the legend, two per case except the significant 'o-tie'.
  CHECK(std::count(text.begin(), text.end(), '*') == 1 + 2 + 2 + 0 + 2);
}

TEST_CASE("train/test overlap is flagged and reported") {
  Fixture f;
  const std::vector<SolvedCase> test_cases = {
      Fixture::solved("o-tie", {"pa", "pb", "pc", "pd"}),
  };
  const std::vector<SolvedCase> train_cases = {
      Fixture::solved("o-tie", {"pa", "pb", "pc", "pd"}),
      Fixture::solved("o-win", {"pe", "pf"}),
  };

  const auto flagged = compare_methods(f.offers, f.profiles, test_cases, f.model, f.graph,
                                       Bm25Params{}, 5.0e-2, &train_cases);
  CHECK(flagged.train_test_overlap);
  REQUIRE(flagged.notes.size() == 1);
  CHECK(flagged.notes[0].find("o-tie") != std::string::npos);
  CHECK(flagged.to_text().find("WARNING: train/test overlap detected") != std::string::npos);
  CHECK(flagged.to_text().find("note: test case 'o-tie'") != std::string::npos);

  const std::vector<SolvedCase> disjoint = {Fixture::solved("o-win", {"pe", "pf"})};
  const auto clean = compare_methods(f.offers, f.profiles, test_cases, f.model, f.graph,
                                     Bm25Params{}, 5.0e-2, &disjoint);
  CHECK(!clean.train_test_overlap);
  CHECK(clean.notes.empty());
}

TEST_CASE("large candidate pools fall back to sampled p-values") {
  Fixture f;

  // Nine candidates: beyond the exact enumeration limit of eight.
  const auto vocab = f.graph.concepts_in_category("skills");
  std::vector<ApplicantProfile> pool;
  for (int i = 0; i < 9; ++i)
    pool.push_back(profile_of("q" + std::to_string(i),
                              {vocab[static_cast<std::size_t>(i)],
                               vocab[static_cast<std::size_t>(i + 3)]}));

  std::vector<ApplicantProfile> everyone = f.profiles;
  everyone.insert(everyone.end(), pool.begin(), pool.end());

  SolvedCase consistent;
  consistent.offer_id = "o-win";
  consistent.expert_ranking = rank_candidates(f.offers[0], pool, f.model, f.graph).order();

  const auto report = compare_methods(f.offers, everyone, {consistent}, f.model, f.graph);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].rho_approach == 1.0);
  CHECK(report.rows[0].p_approach > 0.0);
  CHECK(report.rows[0].p_approach < 1e-3);  // about 1/9! with the add-one prior
  CHECK(report.rows[0].significant_approach);
}

TEST_CASE("comparison input contracts") {
  Fixture f;
  CHECK_THROWS_AS(compare_methods(f.offers, f.profiles, {}, f.model, f.graph), InputError);

  const std::vector<SolvedCase> ghost_offer = {Fixture::solved("ghost", {"pa", "pb"})};
  CHECK_THROWS_AS(compare_methods(f.offers, f.profiles, ghost_offer, f.model, f.graph),
                  LookupError);

  const std::vector<SolvedCase> ghost_profile = {Fixture::solved("o-win", {"pa", "ghost"})};
  CHECK_THROWS_AS(compare_methods(f.offers, f.profiles, ghost_profile, f.model, f.graph),
                  LookupError);
}
