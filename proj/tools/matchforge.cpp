// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchforge/bm25.h"
#include "matchforge/compare.h"
#include "matchforge/dataset_io.h"
#include "matchforge/learning.h"
#include "matchforge/parallel.h"
#include "matchforge/scoring.h"
#include "matchforge/synthetic.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"
#include "matchforge/validate.h"

namespace fs = std::filesystem;
namespace mf = matchforge;

namespace {

std::string default_data_dir() {
  if (const char* env = std::getenv("MATCHFORGE_DATA_DIR"); env && *env) return env;
  return "data";
}

struct GlobalOpts {
  std::string data_dir = default_data_dir();
  int jobs = 0;  // 0 leaves the runtime default in place
};

void apply(const GlobalOpts& g) {
  if (g.jobs > 0) mf::set_max_threads(g.jobs);
}

std::string resolve(const std::string& given, const std::string& data_dir, const char* leaf) {
  return given.empty() ? (fs::path(data_dir) / leaf).string() : given;
}

// Shortest round-trip decimal form, so printed values parse back exactly.
std::string num(double v) { return nlohmann::json(v).dump(); }

void print_ranking(const mf::Ranking& ranking) {
  const bool cost = ranking.direction == mf::RankDirection::ascending_cost;
  std::size_t width = 7;
  for (const auto& e : ranking.entries) width = std::max(width, e.profile_id.size());
  std::cout << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(width) + 2)
            << "profile" << (cost ? "cost" : "score") << "\n";
  for (const auto& e : ranking.entries)
    std::cout << std::left << std::setw(6) << e.rank << std::setw(static_cast<int>(width) + 2)
              << e.profile_id << num(e.value) << "\n";
}

void write_dataset(const mf::SyntheticDataset& ds, const fs::path& dir) {
  fs::create_directories(dir);
  mf::write_file((dir / "offers.json").string(), mf::serialize_offers(ds.offers));
  mf::write_file((dir / "profiles.json").string(), mf::serialize_profiles(ds.profiles));
  mf::write_file((dir / "cases.json").string(), mf::serialize_cases(ds.cases));
}

void print_synth_summary(const mf::SyntheticDataset& ds, const mf::StatsMap& stats) {
  std::cout << "generated " << ds.offers.size() << " offers, " << ds.profiles.size()
            << " profiles, " << ds.cases.size() << " cases\n";
  std::map<std::string, const mf::ApplicantProfile*> by_id;
  for (const auto& p : ds.profiles) by_id[p.id] = &p;
  std::map<std::string, const mf::JobOffer*> offer_by_id;
  for (const auto& o : ds.offers) offer_by_id[o.id] = &o;

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  for (const auto& [domain, dstats] : stats) {
    std::vector<const mf::JobOffer*> offers;
    std::vector<const mf::ApplicantProfile*> profiles;
    for (const auto& o : ds.offers)
      if (o.domain_tag == domain) offers.push_back(&o);
    for (const auto& c : ds.cases) {
      auto it = offer_by_id.find(c.offer_id);
      if (it == offer_by_id.end() || it->second->domain_tag != domain) continue;
      for (const auto& pid : c.expert_ranking) profiles.push_back(by_id.at(pid));
    }
    out << "domain " << domain << " (" << offers.size() << " offers, " << profiles.size()
        << " profiles)\n";
    for (const auto& [category, cs] : dstats.categories) {
      double req = 0.0, off = 0.0;
      for (const auto* o : offers) {
        auto it = o->items.find(category);
        req += it == o->items.end() ? 0.0 : static_cast<double>(it->second.size());
      }
      for (const auto* p : profiles) {
        auto it = p->items.find(category);
        off += it == p->items.end() ? 0.0 : static_cast<double>(it->second.size());
      }
      out << "  " << category << ": requested mean "
          << (offers.empty() ? 0.0 : req / static_cast<double>(offers.size()))
          << ", offered mean "
          << (profiles.empty() ? 0.0 : off / static_cast<double>(profiles.size())) << "\n";
    }
  }
  std::cout << out.str();
}

nlohmann::json training_meta(const mf::TrainConfig& config, const mf::TrainReport& report) {
  return nlohmann::json{{"seed", config.rng_seed},
                        {"restarts", config.restarts},
                        {"max_iters", config.max_iters},
                        {"evaluations", report.evaluations},
                        {"best_restart", report.best_restart},
                        {"mean_rho", report.best_objective},
                        {"converged", report.converged}};
}

void write_model(const fs::path& path, const mf::TrainConfig& config,
                 const mf::TrainReport& report) {
  const auto meta = training_meta(config, report);
  mf::write_file(path.string(), mf::serialize_model(report.best_model, &meta));
}

void print_train_summary(const mf::TrainReport& report, std::size_t case_count) {
  std::cout << "mean rho " << num(report.best_objective) << " over " << case_count
            << " cases; converged: " << (report.converged ? "yes" : "no") << "\n"
            << "evaluations " << report.evaluations << "; winning restart "
            << report.best_restart << "\n";
  std::cout << "objective history (accepted steps of the winning restart):\n";
  for (const auto& [iter, obj] : report.objective_history)
    std::cout << "  iter " << iter << "  rho " << num(obj) << "\n";
  std::cout << "per-case rho:\n";
  for (const auto& [id, rho] : report.per_case_rho)
    std::cout << "  " << id << "  " << num(rho) << "\n";
}

struct ValidateOpts {
  std::string taxonomy, offers, profiles, cases;
};

int run_validate(const GlobalOpts& g, const ValidateOpts& o) {
  apply(g);
  const auto graph = mf::TaxonomyGraph::load_file(resolve(o.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  const auto offers = mf::load_offers_file(resolve(o.offers, g.data_dir, "toy/offers.json"));
  const auto profiles = mf::load_profiles_file(resolve(o.profiles, g.data_dir, "toy/profiles.json"));
  const auto cases = mf::load_cases_file(resolve(o.cases, g.data_dir, "toy/cases.json"));
  const auto report = mf::validate_dataset(offers, profiles, cases, graph);
  std::cout << report.to_text();
  std::cout << "checked " << offers.size() << " offers, " << profiles.size() << " profiles, "
            << cases.size() << " cases: " << report.error_count() << " errors, "
            << report.warning_count() << " warnings\n";
  return report.ok() ? 0 : 1;
}

struct TrainOpts {
  std::string taxonomy, offers, profiles, cases;
  std::string weight_scheme = "multiplicative";
  std::string output_dir = ".";
  mf::TrainConfig config;
};

int run_train(const GlobalOpts& g, const TrainOpts& o) {
  apply(g);
  auto graph = mf::TaxonomyGraph::load_file(resolve(o.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  const auto offers = mf::load_offers_file(resolve(o.offers, g.data_dir, "toy/offers.json"));
  const auto profiles = mf::load_profiles_file(resolve(o.profiles, g.data_dir, "toy/profiles.json"));
  const auto cases = mf::load_cases_file(resolve(o.cases, g.data_dir, "toy/cases.json"));

  const auto report = mf::validate_dataset(offers, profiles, cases, graph);
  if (!report.ok()) {
    std::cerr << report.to_text() << "training aborted: dataset has " << report.error_count()
              << " validation errors\n";
    return 1;
  }
  if (!report.issues.empty()) std::cerr << report.to_text();

  graph.build_path_cache();
  mf::TrainConfig config = o.config;
  config.weight_scheme = mf::weight_scheme_from_string(o.weight_scheme);
  const auto trained = mf::train(cases, offers, profiles, graph, config);

  fs::create_directories(o.output_dir);
  const fs::path model_path = fs::path(o.output_dir) / "model.json";
  write_model(model_path, config, trained);

  nlohmann::json history = nlohmann::json::array();
  for (const auto& [iter, obj] : trained.objective_history)
    history.push_back(nlohmann::json::array({iter, obj}));
  const nlohmann::json report_json{{"objective_history", history},
                                   {"per_case_rho", trained.per_case_rho},
                                   {"mean_rho", trained.best_objective},
                                   {"converged", trained.converged},
                                   {"evaluations", trained.evaluations},
                                   {"best_restart", trained.best_restart}};
  const fs::path report_path = fs::path(o.output_dir) / "train_report.json";
  mf::write_file(report_path.string(), report_json.dump(2) + "\n");

  std::cout << "model written to " << model_path.string() << "\n"
            << "report written to " << report_path.string() << "\n";
  print_train_summary(trained, cases.size());
  return 0;
}

struct RankOpts {
  std::string offer_id;
  std::string taxonomy, offers, profiles, model, explain_id;
  bool baseline = false;
  mf::Bm25Params bm25;
};

int run_rank(const GlobalOpts& g, const RankOpts& o) {
  apply(g);
  if (!o.baseline && o.model.empty()) {
    std::cerr << "rank: pass --model FILE or --baseline\n";
    return 2;
  }
  const auto offers = mf::load_offers_file(resolve(o.offers, g.data_dir, "toy/offers.json"));
  const auto profiles = mf::load_profiles_file(resolve(o.profiles, g.data_dir, "toy/profiles.json"));
  const mf::JobOffer* offer = nullptr;
  for (const auto& cand : offers)
    if (cand.id == o.offer_id) offer = &cand;
  if (offer == nullptr) throw mf::LookupError("unknown offer id '" + o.offer_id + "'");

  if (o.baseline) {
    print_ranking(mf::rank_bm25(*offer, profiles, o.bm25));
    return 0;
  }

  const auto model = mf::load_model_file(o.model);
  auto graph = mf::TaxonomyGraph::load_file(resolve(o.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  graph.build_path_cache();
  print_ranking(mf::rank_candidates(*offer, profiles, model, graph));

  if (!o.explain_id.empty()) {
    const mf::ApplicantProfile* profile = nullptr;
    for (const auto& cand : profiles)
      if (cand.id == o.explain_id) profile = &cand;
    if (profile == nullptr) throw mf::LookupError("unknown profile id '" + o.explain_id + "'");
    const auto ex = mf::explain(*offer, *profile, model, graph);
    std::cout << "\n" << ex.text << "trace:\n" << ex.trace.dump(2) << "\n";
  }
  return 0;
}

struct EvalOpts {
  std::string taxonomy, offers, profiles, model, cases, train_cases;
  std::string output_dir = ".";
  double alpha = 5.0e-2;
  mf::Bm25Params bm25;
};

int run_eval(const GlobalOpts& g, const EvalOpts& o) {
  apply(g);
  auto graph = mf::TaxonomyGraph::load_file(resolve(o.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  graph.build_path_cache();
  const auto offers = mf::load_offers_file(resolve(o.offers, g.data_dir, "toy/offers.json"));
  const auto profiles = mf::load_profiles_file(resolve(o.profiles, g.data_dir, "toy/profiles.json"));
  const auto cases = mf::load_cases_file(resolve(o.cases, g.data_dir, "toy/cases.json"));
  const auto model = mf::load_model_file(o.model);

  std::vector<mf::SolvedCase> train_cases;
  if (!o.train_cases.empty()) train_cases = mf::load_cases_file(o.train_cases);
  const auto report =
      mf::compare_methods(offers, profiles, cases, model, graph, o.bm25, o.alpha,
                          o.train_cases.empty() ? nullptr : &train_cases);

  fs::create_directories(o.output_dir);
  const fs::path csv_path = fs::path(o.output_dir) / "comparison.csv";
  const fs::path txt_path = fs::path(o.output_dir) / "comparison.txt";
  mf::write_file(csv_path.string(), report.to_csv());
  mf::write_file(txt_path.string(), report.to_text());
  std::cout << report.to_text();
  std::cout << "reports written to " << csv_path.string() << " and " << txt_path.string() << "\n";
  return 0;
}

struct SynthOpts {
  std::string taxonomy, stats, truth_model;
  std::string output_dir = "synth-out";
  int offers_per_domain = 6;
  int profiles_per_offer = 8;
  int noise_swaps = 0;
  std::uint64_t seed = 0;
};

int run_synth(const GlobalOpts& g, const SynthOpts& o) {
  apply(g);
  const auto stats = mf::load_domain_stats_file(resolve(o.stats, g.data_dir, "domain_stats.json"));
  auto graph = mf::TaxonomyGraph::load_file(resolve(o.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  graph.build_path_cache();
  const auto truth = mf::load_model_file(resolve(o.truth_model, g.data_dir, "truth_model.json"));
  const auto ds = mf::generate_synthetic_dataset(stats, graph, truth, o.offers_per_domain,
                                                 o.profiles_per_offer, o.seed, o.noise_swaps);
  write_dataset(ds, o.output_dir);
  print_synth_summary(ds, stats);
  std::cout << "dataset written to " << o.output_dir << "\n";
  return 0;
}

struct PipelineOpts {
  SynthOpts synth;
  std::string weight_scheme = "multiplicative";
  double alpha = 5.0e-2;
  mf::Bm25Params bm25;
  mf::TrainConfig config;
};

// synth (train and held-out sets) -> train -> eval, one seed end to end.
int run_pipeline(const GlobalOpts& g, const PipelineOpts& o) {
  apply(g);
  const auto stats =
      mf::load_domain_stats_file(resolve(o.synth.stats, g.data_dir, "domain_stats.json"));
  auto graph =
      mf::TaxonomyGraph::load_file(resolve(o.synth.taxonomy, g.data_dir, "toy_taxonomy.txt"));
  graph.build_path_cache();
  const auto truth =
      mf::load_model_file(resolve(o.synth.truth_model, g.data_dir, "truth_model.json"));

  const fs::path out(o.synth.output_dir);
  const auto train_ds = mf::generate_synthetic_dataset(
      stats, graph, truth, o.synth.offers_per_domain, o.synth.profiles_per_offer, o.synth.seed,
      o.synth.noise_swaps, "train-");
  const auto test_ds = mf::generate_synthetic_dataset(
      stats, graph, truth, o.synth.offers_per_domain, o.synth.profiles_per_offer, o.synth.seed + 1,
      o.synth.noise_swaps, "test-");
  write_dataset(train_ds, out / "train");
  write_dataset(test_ds, out / "test");
  std::cout << "train set: " << train_ds.offers.size() << " offers, " << train_ds.cases.size()
            << " cases; test set: " << test_ds.offers.size() << " offers, "
            << test_ds.cases.size() << " cases\n";

  mf::TrainConfig config = o.config;
  config.rng_seed = o.synth.seed;
  config.weight_scheme = mf::weight_scheme_from_string(o.weight_scheme);
  const auto trained = mf::train(train_ds.cases, train_ds.offers, train_ds.profiles, graph, config);
  write_model(out / "model.json", config, trained);
  std::cout << "training mean rho " << num(trained.best_objective) << "; converged: "
            << (trained.converged ? "yes" : "no") << "\n";

  const auto report =
      mf::compare_methods(test_ds.offers, test_ds.profiles, test_ds.cases, trained.best_model,
                          graph, o.bm25, o.alpha, &train_ds.cases);
  mf::write_file((out / "comparison.csv").string(), report.to_csv());
  mf::write_file((out / "comparison.txt").string(), report.to_text());
  std::cout << report.to_text();
  std::cout << "artifacts written to " << out.string() << "\n";
  return 0;
}

void add_data_options(CLI::App* sub, std::string& taxonomy, std::string& offers,
                      std::string& profiles) {
  sub->add_option("--taxonomy", taxonomy, "Taxonomy file, text or JSON");
  sub->add_option("--offers", offers, "Offers JSON file");
  sub->add_option("--profiles", profiles, "Profiles JSON file");
}

void add_train_options(CLI::App* sub, mf::TrainConfig& config, std::string& weight_scheme) {
  sub->add_option("--max-iters", config.max_iters, "Perturbations per restart")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--restarts", config.restarts, "Independent search restarts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--initial-step", config.initial_step, "Starting coordinate step size")
      ->check(CLI::PositiveNumber);
  sub->add_option("--step-shrink", config.step_shrink, "Step multiplier after a stale round")
      ->check(CLI::Range(1e-9, 0.999999999));
  sub->add_option("--target-rho", config.target_rho, "Stop a restart at this mean correlation");
  sub->add_option("--path-cutoff", config.path_cutoff, "Longest substitutable taxonomy path")
      ->check(CLI::PositiveNumber);
  sub->add_option("--weight-scheme", weight_scheme, "Item weight handling")
      ->check(CLI::IsMember({"multiplicative", "additive"}));
}

void add_bm25_options(CLI::App* sub, mf::Bm25Params& params) {
  sub->add_option("--k1", params.k1, "Baseline term-frequency saturation");
  sub->add_option("--b", params.b, "Baseline length normalization");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taxonomy-aware candidate ranking over weighted concept edits"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--data-dir", g.data_dir,
                 "Data root for default file locations (env MATCHFORGE_DATA_DIR)");
  app.add_option("--jobs", g.jobs, "Cap worker threads, 0 = runtime default")
      ->check(CLI::NonNegativeNumber);

  int rc = 0;

  auto* validate = app.add_subcommand("validate", "Check a dataset bundle; exit 0 iff clean");
  ValidateOpts vo;
  add_data_options(validate, vo.taxonomy, vo.offers, vo.profiles);
  validate->add_option("--cases", vo.cases, "Solved cases JSON file");
  validate->callback([&] { rc = run_validate(g, vo); });

  auto* train = app.add_subcommand("train", "Fit category costs to solved cases");
  TrainOpts to;
  add_data_options(train, to.taxonomy, to.offers, to.profiles);
  train->add_option("--cases", to.cases, "Solved cases JSON file");
  train->add_option("--seed", to.config.rng_seed, "Training RNG seed");
  add_train_options(train, to.config, to.weight_scheme);
  train->add_option("--output-dir", to.output_dir, "Where model.json and the report go");
  train->callback([&] { rc = run_train(g, to); });

  auto* rank = app.add_subcommand("rank", "Rank every profile against one offer");
  RankOpts ro;
  rank->add_option("offer_id", ro.offer_id, "Offer to rank against")->required();
  add_data_options(rank, ro.taxonomy, ro.offers, ro.profiles);
  auto* model_opt = rank->add_option("--model", ro.model, "Trained model JSON file");
  auto* baseline_opt =
      rank->add_flag("--baseline", ro.baseline, "Rank by the BM25 text baseline instead");
  auto* explain_opt =
      rank->add_option("--explain", ro.explain_id, "Append the edit trace for this profile");
  model_opt->excludes(baseline_opt);
  explain_opt->excludes(baseline_opt);
  add_bm25_options(rank, ro.bm25);
  rank->callback([&] { rc = run_rank(g, ro); });

  auto* eval = app.add_subcommand("eval", "Compare the model against the BM25 baseline");
  EvalOpts eo;
  add_data_options(eval, eo.taxonomy, eo.offers, eo.profiles);
  eval->add_option("--model", eo.model, "Trained model JSON file")->required();
  eval->add_option("--cases", eo.cases, "Test cases JSON file");
  eval->add_option("--train-cases", eo.train_cases, "Training cases, to flag test overlap");
  eval->add_option("--alpha", eo.alpha, "Significance level for permutation p-values");
  add_bm25_options(eval, eo.bm25);
  eval->add_option("--output-dir", eo.output_dir, "Where comparison.csv/.txt go");
  eval->callback([&] { rc = run_eval(g, eo); });

  auto* synth = app.add_subcommand("synth", "Generate a calibrated synthetic dataset");
  SynthOpts so;
  synth->add_option("--taxonomy", so.taxonomy, "Taxonomy file, text or JSON");
  synth->add_option("--stats", so.stats, "Per-domain item-count statistics JSON");
  synth->add_option("--truth-model", so.truth_model, "Cost model acting as the synthetic expert");
  synth->add_option("--offers-per-domain", so.offers_per_domain, "Offers generated per domain")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--profiles-per-offer", so.profiles_per_offer, "Candidate pool size per offer");
  synth->add_option("--noise-swaps", so.noise_swaps, "Adjacent swaps degrading each expert ranking")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--seed", so.seed, "Generator seed");
  synth->add_option("--output-dir", so.output_dir, "Where the dataset files go");
  synth->callback([&] { rc = run_synth(g, so); });

  auto* pipeline = app.add_subcommand("pipeline", "synth + train + eval in one reproducible run");
  PipelineOpts po;
  po.synth.output_dir = "pipeline-out";
  pipeline->add_option("--taxonomy", po.synth.taxonomy, "Taxonomy file, text or JSON");
  pipeline->add_option("--stats", po.synth.stats, "Per-domain item-count statistics JSON");
  pipeline->add_option("--truth-model", po.synth.truth_model,
                       "Cost model acting as the synthetic expert");
  pipeline->add_option("--offers-per-domain", po.synth.offers_per_domain,
                       "Offers generated per domain")
      ->check(CLI::NonNegativeNumber);
  pipeline->add_option("--profiles-per-offer", po.synth.profiles_per_offer,
                       "Candidate pool size per offer");
  pipeline->add_option("--noise-swaps", po.synth.noise_swaps,
                       "Adjacent swaps degrading each expert ranking")
      ->check(CLI::NonNegativeNumber);
  pipeline->add_option("--seed", po.synth.seed, "Seed for generation and training");
  add_train_options(pipeline, po.config, po.weight_scheme);
  pipeline->add_option("--alpha", po.alpha, "Significance level for permutation p-values");
  add_bm25_options(pipeline, po.bm25);
  pipeline->add_option("--output-dir", po.synth.output_dir, "Run directory for all artifacts");
  pipeline->callback([&] { rc = run_pipeline(g, po); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mf::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
