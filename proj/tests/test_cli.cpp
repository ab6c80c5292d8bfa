// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command line tool: exit codes, artifact
// determinism, and option wiring. Runs the real binary via std::system,
// so these tests are POSIX-only (as is the rest of the build).

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "matchforge/dataset_io.h"
#include "matchforge/types.h"

namespace fs = std::filesystem;
namespace mf = matchforge;

namespace {

constexpr const char* kCli = MATCHFORGE_CLI_PATH;
constexpr const char* kData = MATCHFORGE_SOURCE_DIR "/data";

int run_shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

// Output discarded; only the exit status matters.
int cli(const std::string& args) {
  return run_shell(std::string(kCli) + " " + args + " >/dev/null 2>&1");
}

// stdout+stderr captured into `log` for content checks.
int cli_capture(const std::string& args, const fs::path& log) {
  return run_shell(std::string(kCli) + " " + args + " >" + log.string() + " 2>&1");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  fs::path dir;

  TempDir() : dir(fs::temp_directory_path() / ("matchforge-cli-" + std::to_string(::getpid()))) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }

  fs::path operator/(const char* leaf) const { return dir / leaf; }
};

const std::string kDataArg = std::string(" --data-dir ") + kData;

}  // namespace

TEST_CASE("cli usage errors and help") {
  TempDir tmp;
  const fs::path log = tmp / "help.txt";
  CHECK(cli_capture("--help", log) == 0);
  const std::string help = mf::read_file(log.string());
  CHECK(contains(help, "validate"));
  CHECK(contains(help, "pipeline"));

  CHECK(cli("validate --help") == 0);
  CHECK(cli("") == 2);                          // a subcommand is required
  CHECK(cli("--no-such-flag") == 2);
  CHECK(cli("frobnicate") == 2);
  CHECK(cli("rank --baseline" + kDataArg) == 2);  // missing offer id positional
  CHECK(cli("rank it-backend-001 --baseline --model x.json" + kDataArg) == 2);
  CHECK(cli("train --restarts 0" + kDataArg) == 2);
  CHECK(cli("train --weight-scheme bogus" + kDataArg) == 2);
}

TEST_CASE("cli validate accepts the bundled toy dataset") {
  TempDir tmp;
  const fs::path log = tmp / "validate.txt";
  CHECK(cli_capture("validate" + kDataArg, log) == 0);
  const std::string out = mf::read_file(log.string());
  CHECK(contains(out, "0 errors"));
  CHECK(cli("--jobs 2 validate" + kDataArg) == 0);
}

TEST_CASE("cli validate exits 1 on a dataset with reference errors") {
  TempDir tmp;
  const fs::path bad = tmp / "cases.json";
  mf::write_file(bad.string(),
                 R"({"cases": [{"offer_id": "ghost", "expert_ranking": ["cand-alice", "cand-bob"]}]})");
  CHECK(cli("validate --cases " + bad.string() + kDataArg) == 1);
  CHECK(cli("train --cases " + bad.string() + kDataArg + " --output-dir " +
            (tmp / "t").string()) == 1);
}

TEST_CASE("cli missing input files exit 2") {
  TempDir tmp;
  CHECK(cli("validate --offers " + (tmp / "missing.json").string() + kDataArg) == 2);
  CHECK(cli("rank it-backend-001 --model " + (tmp / "missing.json").string() + kDataArg) == 2);

  const fs::path garbage = tmp / "garbage.json";
  mf::write_file(garbage.string(), "{not json");
  CHECK(cli("validate --offers " + garbage.string() + kDataArg) == 2);
}

TEST_CASE("cli reads the data root from the environment") {
  TempDir tmp;
  CHECK(run_shell(std::string("env MATCHFORGE_DATA_DIR=") + kData + " " + kCli +
                  " validate >/dev/null 2>&1") == 0);
  // Empty dir: default file locations are missing.
  CHECK(run_shell(std::string("env MATCHFORGE_DATA_DIR=") + tmp.dir.string() + " " + kCli +
                  " validate >/dev/null 2>&1") == 2);
  // Explicit --data-dir wins over the environment.
  CHECK(run_shell(std::string("env MATCHFORGE_DATA_DIR=") + tmp.dir.string() + " " + kCli +
                  " validate" + kDataArg + " >/dev/null 2>&1") == 0);
}

TEST_CASE("cli rank wiring") {
  TempDir tmp;
  const std::string truth = std::string(" --model ") + kData + "/truth_model.json";

  CHECK(cli("rank it-backend-001" + kDataArg) == 2);  // neither --model nor --baseline
  CHECK(cli("rank no-such-offer --baseline" + kDataArg) == 1);

  const fs::path log = tmp / "rank.txt";
  CHECK(cli_capture("rank it-backend-001 --baseline" + kDataArg, log) == 0);
  std::string out = mf::read_file(log.string());
  CHECK(contains(out, "rank"));
  for (const char* id : {"cand-alice", "cand-bob", "cand-carol", "cand-dave", "cand-erin"})
    CHECK(contains(out, id));

  CHECK(cli_capture("rank it-backend-001" + truth + " --explain cand-alice" + kDataArg, log) == 0);
  out = mf::read_file(log.string());
  CHECK(contains(out, "[skills]"));
  CHECK(contains(out, "total cost:"));
  CHECK(contains(out, "trace:"));

  CHECK(cli("rank it-backend-001" + truth + " --explain nobody" + kDataArg) == 1);
}

TEST_CASE("cli synth reruns are byte identical") {
  TempDir tmp;
  const std::string shape = " --offers-per-domain 2 --profiles-per-offer 4";
  const auto gen = [&](const char* leaf, int seed) {
    return cli("synth --seed " + std::to_string(seed) + shape + " --output-dir " +
               (tmp / leaf).string() + kDataArg);
  };
  CHECK(gen("a", 11) == 0);
  CHECK(gen("b", 11) == 0);
  CHECK(gen("c", 12) == 0);

  for (const char* leaf : {"offers.json", "profiles.json", "cases.json"}) {
    const std::string a = mf::read_file((tmp / "a" / leaf).string());
    CHECK(a == mf::read_file((tmp / "b" / leaf).string()));
    CHECK(a != mf::read_file((tmp / "c" / leaf).string()));
  }
  CHECK(cli("synth --profiles-per-offer 1" + kDataArg + " --output-dir " +
            (tmp / "d").string()) == 1);  // rankings need at least two entries
}

TEST_CASE("cli train persists model and report deterministically") {
  TempDir tmp;
  const std::string small = " --seed 5 --max-iters 30 --restarts 2";
  CHECK(cli("train" + small + kDataArg + " --output-dir " + (tmp / "t1").string()) == 0);
  CHECK(cli("train" + small + kDataArg + " --output-dir " + (tmp / "t2").string()) == 0);
  CHECK(mf::read_file((tmp / "t1" / "model.json").string()) ==
        mf::read_file((tmp / "t2" / "model.json").string()));

  const auto report = nlohmann::json::parse(mf::read_file((tmp / "t1" / "train_report.json").string()));
  CHECK(report.contains("mean_rho"));
  CHECK(report.contains("objective_history"));

  // Zero budget still writes the (unperturbed) starting model.
  CHECK(cli("train --max-iters 0 --restarts 1" + kDataArg + " --output-dir " +
            (tmp / "t0").string()) == 0);
  const auto model = mf::load_model_file((tmp / "t0" / "model.json").string());
  CHECK(model.categories.count("skills") == 1);
  CHECK(model.path_cutoff == 4);
}

TEST_CASE("cli eval writes comparison artifacts") {
  TempDir tmp;
  const std::string truth = std::string(" --model ") + kData + "/truth_model.json";
  const fs::path log = tmp / "eval.txt";

  CHECK(cli_capture("eval" + truth + kDataArg + " --output-dir " + (tmp / "e1").string(), log) == 0);
  const std::string csv = mf::read_file((tmp / "e1" / "comparison.csv").string());
  CHECK(csv.rfind("domain,case_id,", 0) == 0);
  CHECK(contains(mf::read_file((tmp / "e1" / "comparison.txt").string()), "wins:"));

  // Declaring the test cases as training cases must raise the overlap warning.
  CHECK(cli("eval" + truth + kDataArg + " --train-cases " + kData + "/toy/cases.json" +
            " --output-dir " + (tmp / "e2").string()) == 0);
  CHECK(contains(mf::read_file((tmp / "e2" / "comparison.txt").string()), "WARNING"));

  const fs::path empty = tmp / "empty.json";
  mf::write_file(empty.string(), R"({"cases": []})");
  CHECK(cli("eval" + truth + kDataArg + " --cases " + empty.string() + " --output-dir " +
            (tmp / "e3").string()) == 1);
}

TEST_CASE("cli pipeline produces the full artifact set") {
  TempDir tmp;
  const fs::path out = tmp / "run";
  CHECK(cli("pipeline --offers-per-domain 1 --profiles-per-offer 3 --seed 7"
            " --max-iters 30 --restarts 2 --output-dir " +
            out.string() + kDataArg) == 0);
  for (const char* leaf : {"train/offers.json", "train/profiles.json", "train/cases.json",
                           "test/offers.json", "test/profiles.json", "test/cases.json",
                           "model.json", "comparison.csv", "comparison.txt"})
    CHECK(fs::exists(out / leaf));

  const auto train_offers = mf::load_offers_file((out / "train" / "offers.json").string());
  const auto test_offers = mf::load_offers_file((out / "test" / "offers.json").string());
  CHECK(train_offers.size() == 4);  // one offer per bundled stats domain
  CHECK(test_offers.size() == 4);
  CHECK(train_offers.front().id.rfind("train-", 0) == 0);
  CHECK(test_offers.front().id.rfind("test-", 0) == 0);
}
