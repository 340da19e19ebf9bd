#include <benchmark/benchmark.h>

#include "jkprove/certificate.hpp"
#include "jkprove/jk_sequence.hpp"
#include "jkprove/mont_curve.hpp"
#include "jkprove/prover.hpp"
#include "jkprove/sieve.hpp"

namespace {

using namespace jkprove;

// Full prover run, including the chain on composite J_k.
void BM_Prover(benchmark::State& state) {
  const Index k = state.range(0);
  ProverOptions options;
  options.full_run = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_prover(k, options));
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_Prover)->Arg(1025)->Arg(2049)->Arg(4097)->Arg(8193)->Unit(benchmark::kMillisecond);

void BM_SqrtMinus7(benchmark::State& state) {
  const BigInt n = jk_closed(state.range(0)).value;
  for (auto _ : state) {
    ModulusCtx ctx(n);
    benchmark::DoNotOptimize(sqrt_minus7(ctx));
  }
}
BENCHMARK(BM_SqrtMinus7)->Arg(1025)->Arg(4097)->Unit(benchmark::kMillisecond);

void BM_Doubling(benchmark::State& state) {
  const Index k = state.range(0);
  const BigInt n = jk_closed(k).value;
  ModulusCtx ctx(n);
  MontCurve curve;
  curve.C = 12345;
  XZPoint point{BigInt(7), BigInt(1)};
  XZDoubler dbl(curve, ctx);
  for (auto _ : state) {
    dbl(point);
    benchmark::DoNotOptimize(point);
  }
}
BENCHMARK(BM_Doubling)->Arg(1025)->Arg(4097)->Arg(16385);

void BM_Verify(benchmark::State& state) {
  const auto built = build_certificate(state.range(0));
  const Certificate cert = std::get<Certificate>(built);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_certificate(cert));
  }
}
BENCHMARK(BM_Verify)->Arg(1129)->Arg(2259)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  const auto strategy = state.range(1) == 0 ? SieveStrategy::kDirect : SieveStrategy::kPeriodFold;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_range(state.range(0), 100000, {1, strategy}));
  }
}
BENCHMARK(BM_Sieve)->Args({3000, 0})->Args({3000, 1})->Args({30000, 0})->Args({30000, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
