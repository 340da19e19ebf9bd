#include "jkprove/prover.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "jkprove/jk_sequence.hpp"
#include "jkprove/sieve.hpp"

namespace jkprove {

std::string Verdict::label() const {
  switch (kind) {
    case VerdictKind::kPrime: return "Prime";
    case VerdictKind::kCompositeForcedCongruence: return "Composite:ForcedCongruence";
    case VerdictKind::kCompositeNoSqrtMinus7: return "Composite:NoSqrtMinus7";
    case VerdictKind::kCompositeGcdWitness: return "Composite:GcdWitness";
    case VerdictKind::kCompositeCurveTest: return "Composite:CurveTest";
  }
  return "Composite:Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

Verdict make_verdict(VerdictKind kind) { return Verdict{kind, std::nullopt}; }

}  // namespace

ProverTrace run_prover(Index k, const ProverOptions& options) {
  if (k < 2) throw std::invalid_argument("run_prover: k must be >= 2");
  if (options.mode == ZeroTestMode::kSimpleNonzero && k < 6)
    throw std::invalid_argument("run_prover: nonzero test requires k >= 6");
  if (options.keep_at && *options.keep_at > static_cast<std::uint64_t>(k) + 1)
    throw std::invalid_argument("run_prover: keep_at beyond k + 1");

  const auto started = Clock::now();
  ProverTrace trace;
  RunStats& stats = trace.stats;
  const auto finish = [&](ModulusCtx* ctx) {
    if (ctx != nullptr) stats.total = ctx->counters();
    stats.elapsed = Clock::now() - started;
    return std::move(trace);
  };

  // 1
  stats.step_reached = 1;
  trace.n = jk_closed(k).value;
  if (forced_composite(k)) {
    trace.verdict = make_verdict(VerdictKind::kCompositeForcedCongruence);
    return finish(nullptr);
  }

  // 2-3
  ModulusCtx ctx(trace.n);
  stats.step_reached = 2;
  const auto step2_start = Clock::now();
  const OpCounters before2 = ctx.counters();
  const BigInt exponent = (trace.n + 1) / 4;
  BigInt d = ctx.pow(BigInt(7), exponent);
  stats.step2 = ctx.counters() - before2;
  stats.step2_time = Clock::now() - step2_start;

  stats.step_reached = 3;
  BigInt d_sq;
  ctx.sqr(d_sq, d);
  std::optional<Verdict> failure;
  if (d_sq != ctx.reduce(BigInt(-7))) {
    failure = make_verdict(VerdictKind::kCompositeNoSqrtMinus7);
    if (!options.full_run) {
      trace.verdict = *failure;
      return finish(&ctx);
    }
  }

  // 4-6
  stats.step_reached = 4;
  const TwistChoice twist = select_twist(k);
  trace.twist = twist;
  stats.step_reached = 5;
  auto mapped = montgomerize(twist.a, BigInt(twist.x0), BigInt(twist.y0), d, ctx);
  if (auto* witness = std::get_if<GcdWitness>(&mapped)) {
    trace.verdict = failure.value_or(Verdict{VerdictKind::kCompositeGcdWitness, witness->divisor});
    return finish(&ctx);
  }
  stats.step_reached = 6;
  trace.start = std::get<Montgomerized>(std::move(mapped));
  const MontCurve& curve = trace.start->curve;

  // 7: iterates 1 .. k+1
  stats.step_reached = 7;
  const auto step7_start = Clock::now();
  const OpCounters before7 = ctx.counters();
  const auto last = static_cast<std::uint64_t>(k) + 1;
  XZDoubler doubler(curve, ctx);
  XZPoint point = trace.start->start;
  if (options.keep_at && *options.keep_at == 0) trace.kept = point;
  bool early_zero = false;
  for (std::uint64_t i = 1; i <= last; ++i) {
    doubler(point);
    if (options.keep_at && *options.keep_at == i) trace.kept = point;
    if (i == last - 1) trace.z_k_point = point;
    if (i + 1 < last && !options.full_run && is_zero_mod(point, ctx)) {
      // zero before iterate k stays zero, so z_k = 0 and the test fails
      early_zero = true;
      break;
    }
  }
  stats.step7 = ctx.counters() - before7;
  stats.step7_time = Clock::now() - step7_start;
  if (early_zero) {
    stats.truncated = true;
    trace.verdict = failure.value_or(make_verdict(VerdictKind::kCompositeCurveTest));
    return finish(&ctx);
  }
  trace.z_k1_point = point;

  // 8
  stats.step_reached = 8;
  const XZPoint& zk = *trace.z_k_point;
  const bool nonzero_at_k = options.mode == ZeroTestMode::kStrongGcd
                                ? is_strongly_nonzero(zk, ctx)
                                : !is_zero_mod(zk, ctx);
  const bool passes = nonzero_at_k && is_zero_mod(point, ctx);
  if (failure) {
    trace.verdict = *failure;
  } else {
    trace.verdict = make_verdict(passes ? VerdictKind::kPrime : VerdictKind::kCompositeCurveTest);
  }
  return finish(&ctx);
}

TestResult test_jk(Index k, ZeroTestMode mode) {
  ProverOptions options;
  options.mode = mode;
  ProverTrace trace = run_prover(k, options);
  return TestResult{std::move(trace.verdict), trace.stats};
}

TestResult test_jk(Index k, const BigInt& n, ZeroTestMode mode) {
  if (k < 2) throw std::invalid_argument("test_jk: k must be >= 2");
  if (jk_closed(k).value != n) throw std::invalid_argument("test_jk: supplied N is not J_k");
  return test_jk(k, mode);
}

std::vector<SearchRecord> search(Index k_min, Index k_max, std::uint64_t sieve_limit,
                                 unsigned workers, ZeroTestMode mode) {
  if (k_min < 2 || k_min > k_max) throw std::invalid_argument("search: need 2 <= k_min <= k_max");
  if (mode == ZeroTestMode::kSimpleNonzero && k_min < 6)
    throw std::invalid_argument("search: nonzero test requires k >= 6");

  const SieveReport report = sieve_range(std::max<Index>(k_max, 4), sieve_limit);
  std::vector<Index> candidates;
  for (Index k : survivors(report))
    if (k >= k_min && k <= k_max) candidates.push_back(k);

  std::vector<SearchRecord> records(candidates.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
      TestResult result = test_jk(candidates[i], mode);
      records[i] = SearchRecord{candidates[i], std::move(result.verdict), result.stats};
    }
  };

  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return records;
}

}  // namespace jkprove
