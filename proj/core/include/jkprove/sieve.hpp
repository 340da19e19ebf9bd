#pragma once

// Removes k from [1, n] when J_k has a prime factor l <= L with l < J_k, by
// running the recurrence for J_k modulo each small prime.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "jkprove/types.hpp"

namespace jkprove {

enum class SieveStrategy {
  kDirect,      // stream all n residues for every prime
  kPeriodFold,  // stop at the period of J_k mod l when it is shorter than n
};

struct SieveOptions {
  unsigned workers = 1;
  SieveStrategy strategy = SieveStrategy::kDirect;
};

struct SieveReport {
  Index n = 0;
  std::uint64_t limit = 0;
  std::vector<bool> survivor;  // indexed by k; entry 0 unused
  std::vector<std::pair<std::uint64_t, std::uint64_t>> eliminations;  // (l, count), count > 0
  std::vector<Index> small_j;  // k with J_k <= limit; never eliminated by J_k itself
};

/// Calls visit(l) for every odd prime l <= limit other than 7, in increasing
/// order. Segmented, so memory stays O(sqrt(limit)).
void for_each_sieving_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit);

/// Throws std::invalid_argument for n < 1.
SieveReport sieve_range(Index n, std::uint64_t limit, const SieveOptions& options = {});

/// Surviving k in increasing order.
std::vector<Index> survivors(const SieveReport& report);

}  // namespace jkprove
