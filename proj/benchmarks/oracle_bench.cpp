#include <shiftcat/fixtures.hpp>
#include <shiftcat/oracle.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace shiftcat;

void BM_Words_Full2(benchmark::State& state) {
  const auto s = validate(fixtures::full_shift(2));
  for (auto _ : state) benchmark::DoNotOptimize(words(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Words_Full2)->DenseRange(4, 10, 2);

void BM_CrossCheck_Reducible(benchmark::State& state) {
  const auto s = validate(fixtures::reducible());
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CrossCheck_Reducible)->DenseRange(2, 6, 2);

void BM_SmallGraphCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(small_essential_graphs(3, 5));
}
BENCHMARK(BM_SmallGraphCensus);

}  // namespace

BENCHMARK_MAIN();
