// Serial reference vs OpenMP kernels on the two parallel axes.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "zcong/bernoulli.hpp"
#include "zcong/identities.hpp"
#include "zcong/sweep.hpp"

using namespace zcong;

namespace {

SweepConfig padic_sweep(unsigned long hi) {
  SweepConfig cfg;
  cfg.ids = resolve_claim_ids("all");
  cfg.lo = 5;
  cfg.hi = hi;
  cfg.backend = BackendSelection::Padic;
  cfg.jobs = omp_get_max_threads();
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  auto cfg = padic_sweep(static_cast<unsigned long>(state.range(0)));
  BernoulliCache::global().ensure(bernoulli_demand(cfg.hi));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
  auto cfg = padic_sweep(static_cast<unsigned long>(state.range(0)));
  BernoulliCache::global().ensure(bernoulli_demand(cfg.hi));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(cfg));
  state.counters["threads"] = cfg.jobs;
}

void BM_IdentitySerial(benchmark::State& state) {
  const auto& c = identity_case("I-WZ16");
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_serial(c, static_cast<int>(state.range(0))));
}

void BM_IdentityParallel(benchmark::State& state) {
  const auto& c = identity_case("I-WZ16");
  const int jobs = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(run_identity(c, static_cast<int>(state.range(0)), jobs));
  state.counters["threads"] = jobs;
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitySerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
