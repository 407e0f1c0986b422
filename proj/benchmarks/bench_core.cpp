#include <benchmark/benchmark.h>

#include "tq/compat.hpp"
#include "tq/quandle.hpp"
#include "tq/topology.hpp"

namespace {

void BM_EnumerateQuandles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto quandles = tq::enumerate_quandles(n, true);
    benchmark::DoNotOptimize(quandles);
  }
}
BENCHMARK(BM_EnumerateQuandles)->DenseRange(3, 6);

void BM_EnumerateQuandlesLabeled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto quandles = tq::enumerate_quandles(n, false);
    benchmark::DoNotOptimize(quandles);
  }
}
BENCHMARK(BM_EnumerateQuandlesLabeled)->DenseRange(3, 6);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto labeled = tq::enumerate_quandles(n, false);
  for (auto _ : state)
    for (const tq::QuandleTable& q : labeled)
      benchmark::DoNotOptimize(tq::canonical_form(q));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(labeled.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 5);

void BM_EnumeratePreorders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto preorders = tq::enumerate_preorders(n, false);
    benchmark::DoNotOptimize(preorders);
  }
}
BENCHMARK(BM_EnumeratePreorders)->DenseRange(3, 5);

void BM_IsCompatible(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto quandles = tq::enumerate_quandles(n, true);
  auto preorders = tq::enumerate_preorders(n, false);
  for (auto _ : state)
    for (const tq::QuandleTable& q : quandles)
      for (const tq::Preorder& p : preorders)
        benchmark::DoNotOptimize(tq::is_compatible(q, p));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(quandles.size()) *
                          static_cast<int64_t>(preorders.size()));
}
BENCHMARK(BM_IsCompatible)->DenseRange(3, 4);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = tq::classify(n);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Classify)->DenseRange(3, 4);

}  // namespace

BENCHMARK_MAIN();
