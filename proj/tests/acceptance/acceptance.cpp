// Acceptance checks. Prints one line per criterion and exits nonzero if any
// gating criterion fails. Pass --long to also run the hours-scale sieve count.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "jkprove/certificate.hpp"
#include "jkprove/jk_sequence.hpp"
#include "jkprove/mont_curve.hpp"
#include "jkprove/prover.hpp"
#include "jkprove/refcheck.hpp"
#include "jkprove/sieve.hpp"
#include "jkprove/twist_tables.hpp"
#include "oracles.hpp"

#ifdef JKPROVE_HAVE_CLI
#include "jkprove_cli/cli.hpp"
#endif

namespace {

using namespace jkprove;

struct Outcome {
  bool passed = false;
  std::string detail;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

BigInt mod_p(BigInt value, const BigInt& p) {
  value %= p;
  if (value < 0) value += p;
  return value;
}

Outcome table_reproduction(std::vector<SearchRecord>& records) {
  records = search(2, 3000, 100000, workers());
  std::vector<long> primes;
  for (const SearchRecord& r : records) {
    if (r.verdict.is_prime()) primes.push_back(r.k);
  }
  std::ostringstream detail;
  detail << "survivors=" << records.size() << " primes=" << primes.size();
  return {primes == testing::kPrimeIndicesTo3000, detail.str()};
}

Outcome exact_values() {
  const bool ok = jk_closed(17).value == 524087 && jk_closed(18).value == 1046579 &&
                  jk_closed(1).value == 11 && jk_closed(2).value == 11 &&
                  jk_closed(3).value == 23 && jk_closed(4).value == 67;
  return {ok, "J_17=" + to_decimal(jk_closed(17).value) + " J_18=" + to_decimal(jk_closed(18).value)};
}

Outcome oracle_equivalence() {
  int mismatches = 0;
  int primes = 0;
  for (Index k = 2; k <= 400; ++k) {
    const BigInt j = jk_closed(k).value;
    const auto factor = refcheck::trial_division(j, 1000000);
    const bool oracle = (factor ? BigInt(*factor) == j : true) && refcheck::probable_prime(j);
    const bool verdict = test_jk(k).verdict.is_prime();
    if (oracle != verdict) ++mismatches;
    if (verdict) ++primes;
  }
  return {mismatches == 0,
          "k in [2,400], primes=" + std::to_string(primes) + " mismatches=" + std::to_string(mismatches)};
}

Outcome operation_counts(const std::vector<SearchRecord>& records) {
  std::size_t checked = 0;
  bool exact = true;
  const auto check_step7 = [&](Index k, const RunStats& stats) {
    if (stats.step_reached < 7 || stats.truncated) return;
    ++checked;
    const auto expected = static_cast<std::uint64_t>(k + 1);
    exact = exact && stats.step7.products() == 5 * expected && stats.step7.additions == 4 * expected &&
            stats.step7.squarings == 2 * expected;
  };
  for (const SearchRecord& r : records) check_step7(r.k, r.stats);

  bool budget = true;
  std::ostringstream detail;
  ProverOptions options;
  options.full_run = true;
  for (Index k : {4097, 5537, 8193, 10007, 16385}) {
    const ProverTrace trace = run_prover(k, options);
    check_step7(k, trace.stats);
    const double ratio = static_cast<double>(trace.stats.total.products()) / static_cast<double>(k);
    budget = budget && ratio <= 6.5;
    detail << " total/k(" << k << ")=" << ratio;
  }
  return {exact && budget, "step7 exact on " + std::to_string(checked) + " runs;" + detail.str()};
}

Outcome periods() {
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {
      {3, 8}, {5, 24}, {7, 3}, {17, 144}, {37, 36}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [p, m] : expected) {
    const std::uint64_t got = period_mod(p);
    ok = ok && got == m;
    detail << "m_" << p << "=" << got << ' ';
  }
  return {ok, detail.str()};
}

Outcome sieve_soundness() {
  const SieveReport report = sieve_range(1000, 10000, {workers(), SieveStrategy::kDirect});
  std::size_t eliminated = 0;
  bool ok = true;
  for (Index k = 1; k <= 1000; ++k) {
    if (report.survivor[k]) continue;
    ++eliminated;
    const BigInt j = jk_closed(k).value;
    const auto factor = refcheck::trial_division(j, 10000);
    ok = ok && factor && BigInt(*factor) != j;
  }
  for (long k : testing::kPrimeIndicesTo3000) {
    if (k <= 1000) ok = ok && report.survivor[k];
  }
  return {ok, "eliminated=" + std::to_string(eliminated)};
}

Certificate tamper(const Certificate& cert, std::mt19937_64& rng) {
  Certificate bad = cert;
  const auto random_residue = [&](const BigInt& current) {
    for (;;) {
      BigInt value = BigInt(static_cast<unsigned long>(rng())) % cert.n;
      if (value != current) return value;
    }
  };
  switch (rng() % 8) {
    case 0: bad.k += 1 + static_cast<Index>(rng() % 5); break;
    case 1: bad.n += 2 * (1 + static_cast<long>(rng() % 100)); break;
    case 2: {
      int a = cert.a;
      while (a == cert.a) a = kTwists[rng() % kTwists.size()];
      bad.a = a;
      break;
    }
    case 3: bad.d = random_residue(cert.d); break;
    case 4: bad.r = rng() % 2 == 0 ? cert.r - 1 : cert.r + 1; break;
    case 5: bad.x = random_residue(cert.x); break;
    case 6:
      // y and N - y describe the same x-only chain; both are valid proofs.
      do bad.y = random_residue(cert.y); while (bad.y == cert.n - cert.y);
      break;
    default: bad.z = random_residue(cert.z); break;
  }
  return bad;
}

Outcome certificates() {
  std::vector<Certificate> certs;
  bool round_trip = true;
  bool cost = true;
  std::uint64_t worst = 0;
  for (long k : testing::kPrimeIndicesTo3000) {
    auto built = build_certificate(k);
    if (!std::holds_alternative<Certificate>(built)) return {false, "no certificate for k=" + std::to_string(k)};
    const Certificate parsed = parse_certificate(serialize(std::get<Certificate>(built)));
    const VerifyResult result = verify_certificate(parsed);
    round_trip = round_trip && result.valid && parsed == std::get<Certificate>(built);
    if (k >= 100) {
      cost = cost && static_cast<double>(result.counters.products()) <= 2.6 * static_cast<double>(k) + 64;
      worst = std::max(worst, result.counters.products() * 1000 / static_cast<std::uint64_t>(k));
    }
    certs.push_back(parsed);
  }
  std::mt19937_64 rng(20261015);
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    const Certificate bad = tamper(certs[rng() % certs.size()], rng);
    if (!verify_certificate(bad).valid) ++rejected;
  }
  std::ostringstream detail;
  detail << "valid=" << (round_trip ? 40 : 0) << "/40 tampered rejected=" << rejected
         << "/100 max verify mults/k=" << static_cast<double>(worst) / 1000;
  return {round_trip && cost && rejected == 100, detail.str()};
}

Outcome montgomery_weierstrass() {
  for (Index k : {2, 3, 4, 5, 7, 9, 10, 17, 18}) {
    const BigInt n = jk_closed(k).value;
    const TwistChoice twist = select_twist(k);
    ModulusCtx ctx(n);
    const auto d = sqrt_minus7(ctx);
    if (!d) return {false, "no sqrt(-7) at k=" + std::to_string(k)};
    const auto mapped = std::get<Montgomerized>(
        montgomerize(twist.a, BigInt(twist.x0), BigInt(twist.y0), *d, ctx));
    const auto p0 = refcheck::AffinePoint::at(mod_p(twist.x0, n), mod_p(twist.y0, n));
    XZPoint mont = mapped.start;
    XZDoubler doubler(mapped.curve, ctx);
    BigInt scalar = 1;
    for (Index i = 0; i <= k + 1; ++i) {
      if (i > 0) {
        doubler(mont);
        scalar *= 2;
      }
      const auto w = refcheck::weier_scalar_mult(scalar, p0, twist.a, n);
      if (w.infinity != is_zero_mod(mont, ctx)) {
        return {false, "zero pattern at k=" + std::to_string(k) + " i=" + std::to_string(i)};
      }
      if (!w.infinity && mod_p(mapped.curve.B * (w.x - mapped.curve.r_shift) * mont.z - mont.x, n) != 0) {
        return {false, "x mismatch at k=" + std::to_string(k) + " i=" + std::to_string(i)};
      }
      if (i == k && !is_strongly_nonzero(mont, ctx)) return {false, "z_k not a unit"};
      if (i == k + 1 && !w.infinity) return {false, "z_{k+1} not zero"};
    }
  }
  return {true, "k in {2,3,4,5,7,9,10,17,18}"};
}

Outcome invariant_suites() {
#ifdef JKPROVE_HAVE_CLI
  std::ostringstream detail;
  bool ok = true;
  for (const auto& line : cli::run_selftest()) {
    ok = ok && line.passed;
    if (!line.passed) detail << line.module << ":" << line.detail << ' ';
  }
  return {ok, ok ? "all module checks pass" : detail.str()};
#else
  return {false, "built without the CLI library"};
#endif
}

double best_step7_ms(Index k, int repeats) {
  ProverOptions options;
  options.full_run = true;
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    best = std::min(best, run_prover(k, options).stats.step7_time.count());
  }
  return best;
}

Outcome scaling() {
  const double small = best_step7_ms((1 << 14) + 1, 3);
  const double large = best_step7_ms((1 << 15) + 1, 3);
  const double ratio = large / small;
  std::ostringstream detail;
  detail << "step7 " << small << " ms -> " << large << " ms, ratio=" << ratio;
  return {ratio >= 3.5 && ratio <= 7.0, detail.str()};
}

Outcome long_sieve() {
  const SieveReport report =
      sieve_range(1000000, std::uint64_t{1} << 35, {workers(), SieveStrategy::kPeriodFold});
  const auto count = survivors(report).size();
  return {count == 93707, "survivors=" + std::to_string(count)};
}

void report(const char* id, const char* title, const Outcome& outcome, bool& all) {
  std::cout << "criterion " << id << " [" << (outcome.passed ? "PASS" : "FAIL") << "] " << title
            << ": " << outcome.detail << std::endl;
  all = all && outcome.passed;
}

}  // namespace

int main(int argc, char** argv) {
  bool run_long = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) run_long = true;
  }
  bool all = true;
  std::vector<SearchRecord> records;
  report("1", "prime indices up to 3000", table_reproduction(records), all);
  report("2", "exact values", exact_values(), all);
  report("3", "oracle equivalence", oracle_equivalence(), all);
  report("4", "operation counts", operation_counts(records), all);
  report("5", "periods", periods(), all);
  report("6", "sieve soundness", sieve_soundness(), all);
  report("7", "certificates", certificates(), all);
  report("8", "Montgomery/Weierstrass equivalence", montgomery_weierstrass(), all);
  report("9a", "module invariants", invariant_suites(), all);
  report("9b", "doubling-chain scaling", scaling(), all);
  if (run_long) {
    bool ignored = true;
    report("9c", "survivors for n=10^6, L=2^35 (not gating)", long_sieve(), ignored);
  } else {
    std::cout << "criterion 9c [SKIP] survivors for n=10^6, L=2^35: pass --long to run" << std::endl;
  }
  return all ? 0 : 1;
}
