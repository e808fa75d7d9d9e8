#include <benchmark/benchmark.h>

#include "cpda/constructions.hpp"
#include "cpda/pda.hpp"
#include "cpda/resolvable.hpp"
#include "cpda/transform.hpp"

namespace {

using namespace cpda;

void bm_man_pda(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PdaArray array = man_pda({k, k / 2});
    benchmark::DoNotOptimize(array);
  }
}
BENCHMARK(bm_man_pda)->Arg(8)->Arg(12);

void bm_lemma1_pda(benchmark::State& state) {
  for (auto _ : state) {
    PdaArray array = lemma1_pda({4, 3});
    benchmark::DoNotOptimize(array);
  }
}
BENCHMARK(bm_lemma1_pda);

void bm_cutset_array_b(benchmark::State& state) {
  for (auto _ : state) {
    CpdaScheme scheme = cutset_array_b(8, 4);
    benchmark::DoNotOptimize(scheme);
  }
}
BENCHMARK(bm_cutset_array_b);

void bm_check_pda(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  PdaArray array = man_pda({k, k / 2});
  for (auto _ : state) {
    PdaReport report = check_pda(array);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(bm_check_pda)->Arg(8)->Arg(12);

void bm_parallel_classes(benchmark::State& state) {
  int h = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ParallelClassPartition partition = parallel_classes(h, 4);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(bm_parallel_classes)->Arg(8)->Arg(12);

void bm_transform(benchmark::State& state) {
  PdaArray base = man_pda({35, 2});
  auto partition = parallel_classes(8, 4);
  for (auto _ : state) {
    CpdaScheme scheme = transform_to_cpda({base, 8, 4, partition});
    benchmark::DoNotOptimize(scheme);
  }
}
BENCHMARK(bm_transform);

}  // namespace

BENCHMARK_MAIN();
