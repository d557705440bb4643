#include <shiftcat/af_core.hpp>
#include <shiftcat/fixtures.hpp>
#include <shiftcat/ideal_catalog.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace shiftcat;

// A ring of n vertices with an extra loop at every vertex: strongly connected,
// so the lattice is tiny but every predicate walks the whole graph.
GraphPresentation looped_ring(std::size_t n) {
  auto g = fixtures::cycle(n);
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({"l" + std::to_string(i), g.vertices[i], g.vertices[i]});
  return g;
}

// n disjoint loops: the lattice is the full Boolean lattice on n atoms.
GraphPresentation loops(std::size_t n) {
  GraphPresentation g;
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.push_back("v" + std::to_string(i));
    g.edges.push_back({"e" + std::to_string(i), g.vertices[i], g.vertices[i]});
  }
  return g;
}

void BM_Catalog_Ring(benchmark::State& state) {
  const auto s = validate(looped_ring(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(s));
}
BENCHMARK(BM_Catalog_Ring)->RangeMultiplier(2)->Range(4, 64);

void BM_Lattice_Loops(benchmark::State& state) {
  const auto s = validate(loops(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_invariant_sets(s));
}
BENCHMARK(BM_Lattice_Loops)->DenseRange(2, 8, 2);

void BM_Primes_Loops(benchmark::State& state) {
  const auto s = validate(loops(static_cast<std::size_t>(state.range(0))));
  const auto lat = enumerate_invariant_sets(s);
  for (auto _ : state) benchmark::DoNotOptimize(primes(s, lat));
}
BENCHMARK(BM_Primes_Loops)->DenseRange(2, 6, 2);

void BM_Trace_GoldenMean(benchmark::State& state) {
  const auto s = validate(fixtures::golden_mean());
  for (auto _ : state) benchmark::DoNotOptimize(trace_obstruction_sequence(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Trace_GoldenMean)->Arg(22)->Arg(100);

void BM_AfStable_Ring(benchmark::State& state) {
  const auto s = validate(looped_ring(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(af_stable_lattice(s));
}
BENCHMARK(BM_AfStable_Ring)->DenseRange(4, 12, 4);

}  // namespace
