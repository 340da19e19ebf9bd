#pragma once

// Deterministic primality test for J_k: J_k is prime iff 2^(k+1) P_a is zero
// mod J_k and 2^k P_a is strongly nonzero mod J_k (k > 1, k not forced
// composite), evaluated with x-only Montgomery doublings.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jkprove/mont_curve.hpp"
#include "jkprove/twist_tables.hpp"
#include "jkprove/types.hpp"

namespace jkprove {

enum class ZeroTestMode {
  kStrongGcd,      // gcd(z_k, J_k) == 1
  kSimpleNonzero,  // z_k != 0 (mod J_k); only valid for k >= 6
};

enum class VerdictKind {
  kPrime,
  kCompositeForcedCongruence,  // step 1
  kCompositeNoSqrtMinus7,      // step 3
  kCompositeGcdWitness,        // non-invertible denominator in step 5
  kCompositeCurveTest,         // step 8
};

struct Verdict {
  VerdictKind kind = VerdictKind::kCompositeCurveTest;
  std::optional<BigInt> witness;  // set for kCompositeGcdWitness

  bool is_prime() const { return kind == VerdictKind::kPrime; }

  /// "Prime" or "Composite:<reason>".
  std::string label() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

using Duration = std::chrono::duration<double, std::milli>;

struct RunStats {
  OpCounters total;
  OpCounters step2;  // square root of -7
  OpCounters step7;  // doubling chain
  Duration elapsed{};
  Duration step2_time{};
  Duration step7_time{};
  int step_reached = 0;   // last algorithm step executed, 1..8
  bool truncated = false; // doubling chain stopped early on z = 0
};

struct ProverOptions {
  ZeroTestMode mode = ZeroTestMode::kStrongGcd;
  /// Keep iterate s of the doubling chain (0 = starting point).
  std::optional<std::uint64_t> keep_at;
  /// Run steps 4-8 even when step 3 already proved N composite, and never stop
  /// the chain early. The verdict still reports the first failure. Used to time
  /// the doubling chain on composite J_k.
  bool full_run = false;
};

/// Everything a run produced, for certificates and cross-checks.
struct ProverTrace {
  Verdict verdict;
  RunStats stats;
  BigInt n;
  std::optional<TwistChoice> twist;
  std::optional<Montgomerized> start;
  std::optional<XZPoint> kept;
  std::optional<XZPoint> z_k_point;      // iterate k
  std::optional<XZPoint> z_k1_point;     // iterate k + 1
};

struct TestResult {
  Verdict verdict;
  RunStats stats;
};

/// Throws std::invalid_argument for k < 2, or kSimpleNonzero with k < 6.
ProverTrace run_prover(Index k, const ProverOptions& options = {});

TestResult test_jk(Index k, ZeroTestMode mode = ZeroTestMode::kStrongGcd);

/// As test_jk, but first checks that n equals J_k; throws std::invalid_argument if not.
TestResult test_jk(Index k, const BigInt& n, ZeroTestMode mode = ZeroTestMode::kStrongGcd);

struct SearchRecord {
  Index k = 0;
  Verdict verdict;
  RunStats stats;
};

/// Sieves [1, k_max] with primes <= sieve_limit and runs test_jk on the
/// survivors in [k_min, k_max]. Output is sorted by k and independent of workers.
std::vector<SearchRecord> search(Index k_min, Index k_max, std::uint64_t sieve_limit,
                                 unsigned workers = 1,
                                 ZeroTestMode mode = ZeroTestMode::kStrongGcd);

}  // namespace jkprove
