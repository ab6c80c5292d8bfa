// SPDX-License-Identifier: Apache-2.0
//
// Times the OpenMP kernels against their single-threaded references on
// sized-up workloads and prints the speedups. Results are also checked
// for bit-identity, so a silent divergence shows up here too; exit is
// nonzero on any mismatch. Not registered with ctest.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matchforge/dataset_io.h"
#include "matchforge/learning.h"
#include "matchforge/parallel.h"
#include "matchforge/rank_stats.h"
#include "matchforge/scoring.h"
#include "matchforge/serial_ref.h"
#include "matchforge/synthetic.h"
#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace mf = matchforge;

namespace {

const std::string kData = MATCHFORGE_SOURCE_DIR "/data";

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool g_all_equal = true;

void row(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
  if (!equal) g_all_equal = false;
  std::cout << std::left << std::setw(44) << kernel << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << std::setw(12) << parallel_ms
            << std::setw(9) << std::setprecision(2) << (serial_ms / parallel_ms) << "x   "
            << (equal ? "identical" : "MISMATCH") << "\n";
}

// Ternary forest, a few components cut loose so unreachable pairs occur.
mf::TaxonomyGraph big_graph(int node_count) {
  std::ostringstream text;
  for (int i = 0; i < node_count; ++i)
    text << "N n" << i << " skills Node " << i << "\n";
  for (int i = 1; i < node_count; ++i)
    if (i % 97 != 0) text << "E n" << i << " n" << (i - 1) / 3 << "\n";
  return mf::TaxonomyGraph::load(text.str());
}

}  // namespace

int main() {
  const auto stats = mf::load_domain_stats_file(kData + "/domain_stats.json");
  const auto truth = mf::load_model_file(kData + "/truth_model.json");
  auto graph = mf::TaxonomyGraph::load_file(kData + "/toy_taxonomy.txt");
  graph.build_path_cache();

  const auto ds = mf::generate_synthetic_dataset(stats, graph, truth, 24, 16, 1);
  std::cout << "workload: " << ds.offers.size() << " offers, " << ds.profiles.size()
            << " profiles, " << ds.cases.size() << " cases; threads: " << mf::max_threads()
            << "\n\n";
  std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(12) << "parallel" << std::setw(10) << "speedup" << "\n";

  {
    std::vector<double> serial, parallel;
    const double s = time_ms(20, [&] {
      serial = mf::serial::profile_costs(ds.offers.front(), ds.profiles, truth, graph);
    });
    const double p = time_ms(20, [&] {
      parallel = mf::profile_costs(ds.offers.front(), ds.profiles, truth, graph);
    });
    row("profile_costs, 1536 profiles, x20", s, p, serial == parallel);
  }

  {
    std::vector<double> serial, parallel;
    const double s = time_ms(10, [&] {
      serial = mf::serial::per_case_rhos(ds.cases, ds.offers, ds.profiles, truth, graph);
    });
    const double p = time_ms(10, [&] {
      parallel = mf::per_case_rhos(ds.cases, ds.offers, ds.profiles, truth, graph);
    });
    row("per_case_rhos, 96 cases, x10", s, p, serial == parallel);
  }

  {
    const mf::MonteCarlo mc{4000000, 3};
    double serial = 0.0, parallel = 0.0;
    const double s = time_ms(1, [&] { serial = mf::serial::permutation_p_value(0.4, 12, mc); });
    const double p = time_ms(1, [&] { parallel = mf::permutation_p_value(0.4, 12, mc); });
    row("permutation_p_value, 4M samples, n=12", s, p, serial == parallel);
  }

  {
    const auto big = big_graph(4000);
    std::vector<std::int32_t> reference;
    const double s = time_ms(1, [&] { reference = mf::serial::all_pairs_path_lengths(big); });
    auto cached = big_graph(4000);
    const double p = time_ms(1, [&] { cached.build_path_cache(); });

    const auto& nodes = cached.nodes();
    const std::size_t n = nodes.size();
    bool equal = reference.size() == n * n;
    for (std::size_t i = 0; equal && i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cached.shortest_path_len(nodes[i].id, nodes[j].id) != reference[i * n + j]) {
          equal = false;
          break;
        }
    row("all-pairs path lengths, 4000 nodes", s, p, equal);
  }

  std::cout << "\n" << (g_all_equal ? "all kernels bit-identical to the serial reference"
                                    : "MISMATCH: parallel output diverged") << "\n";
  return g_all_equal ? 0 : 1;
}
