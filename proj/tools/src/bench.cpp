#include <algorithm>

#include "jkprove/prover.hpp"
#include "jkprove_cli/cli.hpp"

namespace jkprove::cli {

std::vector<Index> default_bench_set() {
  std::vector<Index> ks;
  for (int e = 10; e <= 15; ++e) ks.push_back((Index{1} << e) + 1);
  return ks;
}

BenchRow bench_one(Index k, int repeats) {
  ProverOptions options;
  options.full_run = true;
  BenchRow row;
  row.k = k;
  row.step2_ms = 1e300;
  row.step7_ms = 1e300;
  // Best of several runs: the minimum is the least noisy estimate.
  for (int i = 0; i < std::max(repeats, 1); ++i) {
    const ProverTrace trace = run_prover(k, options);
    row.step2_ms = std::min(row.step2_ms, trace.stats.step2_time.count());
    row.step7_ms = std::min(row.step7_ms, trace.stats.step7_time.count());
    row.step7_products = trace.stats.step7.products();
    row.total_products = trace.stats.total.products();
  }
  return row;
}

}  // namespace jkprove::cli
