#include <benchmark/benchmark.h>

#include <vector>

#include "numsgp/numsgp.hpp"

using namespace numsgp;

namespace {

void BM_FromGenerators(benchmark::State& state) {
  const Value m = static_cast<Value>(state.range(0));
  const std::vector<Value> gens{m, m + 3, 2 * m + 5, 3 * m + 1};
  for (auto _ : state) benchmark::DoNotOptimize(from_generators(gens));
}
BENCHMARK(BM_FromGenerators)->RangeMultiplier(4)->Range(8, 2048);

void BM_MinGenerators(benchmark::State& state) {
  const Value m = static_cast<Value>(state.range(0));
  const std::vector<Value> gens{m, m + 3, 2 * m + 5, 3 * m + 1};
  for (auto _ : state) {
    const auto s = from_generators(gens);
    benchmark::DoNotOptimize(s.min_generators().size());
  }
}
BENCHMARK(BM_MinGenerators)->RangeMultiplier(4)->Range(8, 512);

// Apery set of a quotient by the closed form versus building the quotient table.
void BM_AperyOfQuotient(benchmark::State& state) {
  const Value a = static_cast<Value>(state.range(0));
  const auto s = from_generators({a, a + 1});
  const auto ap = apery(s, a);
  for (auto _ : state) benchmark::DoNotOptimize(apery_of_quotient(ap, 7));
}
BENCHMARK(BM_AperyOfQuotient)->RangeMultiplier(4)->Range(8, 512);

void BM_AperyOfQuotientByTable(benchmark::State& state) {
  const Value a = static_cast<Value>(state.range(0));
  const auto s = from_generators({a, a + 1});
  for (auto _ : state) benchmark::DoNotOptimize(apery(quotient(s, 7), a));
}
BENCHMARK(BM_AperyOfQuotientByTable)->RangeMultiplier(4)->Range(8, 512);

void BM_PmFrobeniusGenus(benchmark::State& state) {
  const Value a = static_cast<Value>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pm_frobenius(a, 2 * a + 1));
    benchmark::DoNotOptimize(pm_genus(a, 2 * a + 1));
  }
}
BENCHMARK(BM_PmFrobeniusGenus)->RangeMultiplier(4)->Range(8, 2048);

void BM_ArithmeticExtensions(benchmark::State& state) {
  // <m, m+1, ..., 2m-1> has genus m-1.
  const Value m = static_cast<Value>(state.range(0));
  std::vector<Value> gens;
  for (Value x = m; x < 2 * m; ++x) gens.push_back(x);
  const auto s = from_generators(gens);
  for (auto _ : state) benchmark::DoNotOptimize(arithmetic_extensions(s, m).size());
}
BENCHMARK(BM_ArithmeticExtensions)->DenseRange(4, 20, 4);

void BM_ArithmeticExtensionsSparse(benchmark::State& state) {
  const Value a = static_cast<Value>(state.range(0));
  const auto s = from_generators({a, a + 1});
  for (auto _ : state) benchmark::DoNotOptimize(arithmetic_extensions(s, a * a).size());
}
BENCHMARK(BM_ArithmeticExtensionsSparse)->DenseRange(3, 7, 1);

void BM_EnumerateOversemigroups(benchmark::State& state) {
  const auto s = from_gaps({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_oversemigroups(s).size());
}
BENCHMARK(BM_EnumerateOversemigroups);

}  // namespace

BENCHMARK_MAIN();
