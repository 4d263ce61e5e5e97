#include "supercong/catalog.hpp"
#include "supercong/identities.hpp"
#include "supercong/special.hpp"
#include "supercong/sums.hpp"

#include <benchmark/benchmark.h>

using namespace supercong;

static void BM_sieve_primes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(5, state.range(0)));
}
BENCHMARK(BM_sieve_primes)->Arg(1000)->Arg(100000);

static void BM_eval_sum_central_cubes(benchmark::State& state) {
  SumSpec spec{.range = SumRange::FullPa, .c0 = Rat(8), .c1 = Rat(21),
               .factors = {{BinomKind::CentralBinom, 3}}};
  long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_sum(spec, p, 1, 3, 2));
}
BENCHMARK(BM_eval_sum_central_cubes)->Arg(199)->Arg(499);

static void BM_central_binom_stream(benchmark::State& state) {
  for (auto _ : state) {
    CentralBinomStream s(499, 4);
    PadicTracked last;
    for (long k = 0; k < 499; ++k) last = s.next();
    benchmark::DoNotOptimize(last);
  }
}
BENCHMARK(BM_central_binom_stream);

static void BM_harmonic_padic(benchmark::State& state) {
  long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_padic(p - 1, p, 4));
}
BENCHMARK(BM_harmonic_padic)->Arg(199)->Arg(997);

static void BM_search_exceptional(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_exceptional(state.range(0)));
}
BENCHMARK(BM_search_exceptional)->Arg(300)->Arg(1000);

static void BM_check_entry(benchmark::State& state) {
  const auto* spec = find_spec("1.11");
  for (auto _ : state) benchmark::DoNotOptimize(check(*spec, 199, 1, 2));
}
BENCHMARK(BM_check_entry);

static void BM_s_value(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s_value(state.range(0)));
}
BENCHMARK(BM_s_value)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
