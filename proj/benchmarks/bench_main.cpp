#include <benchmark/benchmark.h>

#include <numbers>

#include "luttflow/effective_model.hpp"
#include "luttflow/free_baseline.hpp"
#include "luttflow/hubbard_rg.hpp"
#include "luttflow/scale_flow.hpp"

using namespace luttflow;

static void BM_G1Iterate(benchmark::State& st) {
  const auto sched = FlowSchedule::constant(0.22064);
  for (auto _ : st) benchmark::DoNotOptimize(iterate_g1(0.01, sched, st.range(0)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_G1Iterate)->Arg(1 << 16)->Arg(1 << 20);

static void BM_HubbardFlow(benchmark::State& st) {
  ModelInputs in;
  in.lambda = 0.01;
  const CouplingVector v0 = init_couplings(in);
  for (auto _ : st) benchmark::DoNotOptimize(run_flow(v0, in, -st.range(0)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_HubbardFlow)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_ExponentGrid(benchmark::State& st) {
  for (auto _ : st)
    for (int i = 0; i < 50; ++i)
      benchmark::DoNotOptimize(exponents(tune_to_hubbard(0.001 * i, 1.0, 1.0, std::numbers::pi / 3)));
}
BENCHMARK(BM_ExponentGrid);

static void BM_PropagatorLimit(benchmark::State& st) {
  LatticeSpec s;
  s.L = static_cast<int>(st.range(0));
  s.beta = s.L;
  int x = 1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(propagator_limit(x, 0.5, s));
    x = x % (s.L / 2) + 1;
  }
}
BENCHMARK(BM_PropagatorLimit)->Arg(64)->Arg(512);

static void BM_WardBubbles(benchmark::State& st) {
  LatticeSpec s;
  s.L = static_cast<int>(st.range(0));
  s.beta = s.L;
  for (auto _ : st) benchmark::DoNotOptimize(ward_residual(1, 1, s));
}
BENCHMARK(BM_WardBubbles)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
