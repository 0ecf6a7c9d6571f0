// Serial against parallel timings for the counting kernels.

#include <benchmark/benchmark.h>

#include "vmvt/congruence.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/waring.hpp"

using namespace vmvt;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_CountJ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_J(3, 3, 40, {}, exec_of(state)).count);
}
BENCHMARK(BM_CountJ)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_WeylMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_weyl_moment(3, 3, 60, {}, exec_of(state)).count);
}
BENCHMARK(BM_WeylMoment)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_MaxB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_B(3, 3, 2, 5, 0, 1, {}, exec_of(state)).observed_max);
}
BENCHMARK(BM_MaxB)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_RepTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rep_table(8, 3, 100000, {}, exec_of(state)).size());
}
BENCHMARK(BM_RepTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
