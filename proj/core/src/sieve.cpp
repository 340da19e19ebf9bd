#include "jkprove/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "jkprove/jk_sequence.hpp"

namespace jkprove {

namespace {

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Marks zeros of J_k mod ell in `eliminated`; returns how many k were marked.
std::uint64_t sieve_one(std::uint64_t ell, Index n, SieveStrategy strategy,
                        const std::map<Index, BigInt>& small_values, std::vector<bool>& eliminated) {
  const auto keep = [&](Index k) {
    const auto it = small_values.find(k);
    return it != small_values.end() && it->second == ell;
  };

  std::uint64_t count = 0;
  const auto mark = [&](Index k) {
    if (keep(k)) return;
    eliminated[static_cast<std::size_t>(k)] = true;
    ++count;
  };

  const ResidueWindow start = initial_residue_window(ell);
  ResidueWindow window = start;
  std::vector<Index> zeros;
  for (Index k = 1; k <= n; ++k) {
    if (window.values[0] == 0) {
      mark(k);
      zeros.push_back(k);
    }
    advance(window, ell);
    if (strategy == SieveStrategy::kPeriodFold && window.values == start.values) {
      // k is the period: the zero pattern on [1, k] repeats
      const Index period = k;
      for (Index z : zeros)
        for (Index j = z + period; j <= n; j += period) mark(j);
      break;
    }
  }
  return count;
}

}  // namespace

void for_each_sieving_prime(std::uint64_t limit,
                            const std::function<void(std::uint64_t)>& visit) {
  if (limit < 3) return;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> base = small_primes(root);
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;
  std::vector<bool> composite(kSegment);
  for (std::uint64_t low = 3; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(limit, low + kSegment - 1);
    std::fill(composite.begin(), composite.end(), false);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t first = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = first; j <= high; j += p) composite[j - low] = true;
    }
    for (std::uint64_t m = low; m <= high; ++m) {
      if (composite[m - low] || m % 2 == 0 || m == 7) continue;
      visit(m);
    }
  }
}

SieveReport sieve_range(Index n, std::uint64_t limit, const SieveOptions& options) {
  if (n < 1) throw std::invalid_argument("sieve_range: n must be >= 1");
  if (limit > kMaxResidueModulus) throw std::invalid_argument("sieve_range: limit too large");

  SieveReport report;
  report.n = n;
  report.limit = limit;

  // J_k > 2^(k+1) once k >= 3, so only the first few k can have J_k <= limit.
  std::map<Index, BigInt> small_values;
  {
    const BigInt bound(static_cast<unsigned long>(limit));
    ExactWindow window = initial_exact_window();
    for (Index k = 1; k <= n && k <= 66; ++k) {
      if (window.values[0] <= bound) {
        report.small_j.push_back(k);
        small_values.emplace(k, window.values[0]);
      }
      advance(window);
    }
  }

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<bool>> masks(workers,
                                       std::vector<bool>(static_cast<std::size_t>(n) + 1, false));

  // primes are handled in batches so that huge limits do not materialize the prime list
  constexpr std::size_t kBatch = std::size_t{1} << 16;
  std::vector<std::uint64_t> batch;
  std::vector<std::uint64_t> counts;
  const auto flush = [&] {
    counts.assign(batch.size(), 0);
    const auto work = [&](unsigned w) {
      for (std::size_t i = w; i < batch.size(); i += workers)
        counts[i] = sieve_one(batch[i], n, options.strategy, small_values, masks[w]);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::size_t i = 0; i < batch.size(); ++i)
      if (counts[i] > 0) report.eliminations.emplace_back(batch[i], counts[i]);
    batch.clear();
  };
  for_each_sieving_prime(limit, [&](std::uint64_t ell) {
    batch.push_back(ell);
    if (batch.size() == kBatch) flush();
  });
  if (!batch.empty()) flush();

  std::vector<bool> eliminated(static_cast<std::size_t>(n) + 1, false);
  for (const auto& mask : masks)
    for (std::size_t k = 1; k < mask.size(); ++k)
      if (mask[k]) eliminated[k] = true;

  report.survivor.assign(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 1; k < eliminated.size(); ++k) report.survivor[k] = !eliminated[k];
  return report;
}

std::vector<Index> survivors(const SieveReport& report) {
  std::vector<Index> out;
  for (std::size_t k = 1; k < report.survivor.size(); ++k)
    if (report.survivor[k]) out.push_back(static_cast<Index>(k));
  return out;
}

}  // namespace jkprove
