// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "matchforge/parallel.h"
#include "matchforge/rank_stats.h"
#include "matchforge/types.h"

using namespace matchforge;

namespace {

const std::vector<std::string> kIds = {"a", "b", "c", "d", "e", "f", "g", "h"};

std::vector<std::string> take(int n) {
  return {kIds.begin(), kIds.begin() + n};
}

}  // namespace

TEST_CASE("spearman rho reproduces hand-computed values") {
  // Swapping the last two of three ids: sum d^2 = 2, rho = 1 - 12/24.
  CHECK(spearman_rho({"a", "b", "c"}, {"a", "c", "b"}) == 0.5);

  // Perfect agreement and full reversal are exact at the extremes.
  CHECK(spearman_rho(take(4), take(4)) == 1.0);
  CHECK(spearman_rho({"a", "b", "c", "d"}, {"d", "c", "b", "a"}) == -1.0);
  CHECK(spearman_rho(take(8), take(8)) == 1.0);

  // Symmetric in its arguments.
  const std::vector<std::string> x = {"a", "c", "d", "b", "e"};
  CHECK(spearman_rho(take(5), x) == spearman_rho(x, take(5)));
}

TEST_CASE("all 24 orderings of four ids match the closed form") {
  const auto a = take(4);
  std::vector<int> perm = {0, 1, 2, 3};
  int seen = 0;
  do {
    std::vector<std::string> b;
    for (int i : perm) b.push_back(a[static_cast<std::size_t>(i)]);

    std::int64_t s = 0;
    for (int i = 0; i < 4; ++i) {
      const std::int64_t d = i - perm[static_cast<std::size_t>(i)];
      s += d * d;
    }
    const double expected = 1.0 - 6.0 * static_cast<double>(s) / (4.0 * 15.0);
    CHECK(std::abs(spearman_rho(a, b) - expected) <= 1e-12);
    ++seen;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(seen == 24);
}

TEST_CASE("rho rejects malformed rank inputs") {
  CHECK_THROWS_AS(spearman_rho({"a"}, {"a"}), InputError);
  CHECK_THROWS_AS(spearman_rho({}, {}), InputError);
  CHECK_THROWS_AS(spearman_rho({"a", "b"}, {"a", "b", "c"}), InputError);
  CHECK_THROWS_AS(spearman_rho({"a", "a"}, {"a", "b"}), InputError);
  CHECK_THROWS_AS(spearman_rho({"a", "b"}, {"b", "b"}), InputError);
  CHECK_THROWS_AS(spearman_rho({"a", "b"}, {"a", "x"}), InputError);
}

TEST_CASE("exact permutation p-values enumerate every ordering") {
  // Only the identity reaches rho = 1.
  CHECK(permutation_p_value_exact(1.0, 3) == 1.0 / 6.0);
  CHECK(permutation_p_value_exact(1.0, 4) == 1.0 / 24.0);
  CHECK(permutation_p_value_exact(1.0, 8) == 1.0 / 40320.0);

  // Every ordering reaches rho >= -1.
  CHECK(permutation_p_value_exact(-1.0, 5) == 1.0);

  // n = 4, rho >= 0.5 means sum d^2 <= 5; the orderings with d^2 in
  // {0, 2, 4} number 1 + 3 + 1.
  CHECK(permutation_p_value_exact(0.5, 4) == 5.0 / 24.0);

  // Thresholds recovered from float rho survive the round trip: one
  // adjacent swap gives rho = 0.8, i.e. sum d^2 <= 2, reached 1 + 3 ways.
  const double rho = spearman_rho(take(4), {"a", "b", "d", "c"});
  CHECK(rho == 0.8);
  CHECK(permutation_p_value_exact(rho, 4) == 4.0 / 24.0);

  CHECK_THROWS_AS(permutation_p_value_exact(0.5, 1), InputError);
  CHECK_THROWS_AS(permutation_p_value_exact(0.5, 9), InputError);
}

TEST_CASE("monte carlo p-value brackets the exact enumeration") {
  const double exact = permutation_p_value_exact(0.6, 6);

  MonteCarlo mc;
  mc.samples = 100000;
  mc.seed = 7;
  const double est = permutation_p_value(0.6, 6, mc);

  // Three standard errors plus the add-one smoothing bias.
  const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(mc.samples));
  CHECK(std::abs(est - exact) <= 3.0 * se + 2e-5);
}

TEST_CASE("monte carlo p-value for a perfect rank agreement at n = 8") {
  const double exact = 1.0 / 40320.0;

  MonteCarlo mc;
  mc.samples = 100000;
  mc.seed = 0;
  const double est = permutation_p_value(1.0, 8, mc);

  const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(mc.samples));
  CHECK(std::abs(est - exact) <= 3.0 * se);
}

TEST_CASE("monte carlo estimates do not depend on the thread count") {
  const int restore = max_threads();

  MonteCarlo mc;
  mc.samples = 20001;  // three chunks, last one partial
  mc.seed = 42;

  set_max_threads(1);
  const double one = permutation_p_value(0.3, 7, mc);
  set_max_threads(2);
  const double two = permutation_p_value(0.3, 7, mc);
  set_max_threads(4);
  const double four = permutation_p_value(0.3, 7, mc);
  set_max_threads(restore);

  CHECK(one == two);
  CHECK(one == four);
  CHECK(one == permutation_p_value(0.3, 7, mc));  // and repeated calls agree
}

TEST_CASE("permutation p-value input contracts") {
  MonteCarlo mc;
  mc.samples = 10;
  CHECK_THROWS_AS(permutation_p_value(0.5, 1, mc), InputError);
  mc.samples = 0;
  CHECK_THROWS_AS(permutation_p_value(0.5, 4, mc), InputError);

  // Large n is fine for the sampling form.
  mc.samples = 1000;
  const double p = permutation_p_value(0.0, 20, mc);
  CHECK(p > 0.0);
  CHECK(p <= 1.0);
}
