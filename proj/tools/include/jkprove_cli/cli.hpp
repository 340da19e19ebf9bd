#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jkprove/types.hpp"

namespace jkprove::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // selftest only
  kExitUsage = 2,
  kExitIo = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SelftestLine {
  std::string module;
  bool passed = false;
  std::string detail;
};

/// Fast invariant checks, one entry per library module.
std::vector<SelftestLine> run_selftest();

struct BenchRow {
  Index k = 0;
  double step2_ms = 0;
  double step7_ms = 0;
  std::uint64_t step7_products = 0;
  std::uint64_t total_products = 0;
};

/// Full runs of the prover (composite J_k included) timing steps 2 and 7.
BenchRow bench_one(Index k, int repeats = 1);

std::vector<Index> default_bench_set();

}  // namespace jkprove::cli
