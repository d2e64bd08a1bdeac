#include <benchmark/benchmark.h>

#include "fincat/comma.hpp"
#include "fincat/enumcat.hpp"
#include "fincat/instances.hpp"
#include "fincat/ran.hpp"

using namespace fincat;

namespace {

void BM_CanonicalPoset(benchmark::State& state) {
  const auto posets = enumerate_posets(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : posets) benchmark::DoNotOptimize(canonical_poset(p));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * posets.size()));
}
BENCHMARK(BM_CanonicalPoset)->DenseRange(3, 5);

void BM_EnumeratePosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateMonotone(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FinPoset x = FinPoset::antichain(FinSet::canonical(n));
  const FinPoset y = FinPoset::chain(FinSet::canonical(n));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monotone(x, y));
}
BENCHMARK(BM_EnumerateMonotone)->DenseRange(3, 6);

void BM_CoequalizerPos(benchmark::State& state) {
  const FinPoset c = FinPoset::chain(FinSet::canonical(6));
  const MonotoneMap f(FinPoset::chain(FinSet::canonical(1)), c, {1});
  const MonotoneMap g(FinPoset::chain(FinSet::canonical(1)), c, {4});
  for (auto _ : state) benchmark::DoNotOptimize(coequalizer_pos(f, g));
}
BENCHMARK(BM_CoequalizerPos);

void BM_AuditFinSet(benchmark::State& state) {
  const FinSetCat cat(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_regularity(cat).report.clean());
}
BENCHMARK(BM_AuditFinSet)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_AuditFinPos(benchmark::State& state) {
  const FinPosCat cat(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_regularity(cat).report.clean());
}
BENCHMARK(BM_AuditFinPos)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_AuditComma(benchmark::State& state) {
  const CommaCat cat(FinSet::canonical(1), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_regularity(cat).report.clean());
}
BENCHMARK(BM_AuditComma)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_RanAudit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(an_implies_ran_check(n, n).passed());
}
BENCHMARK(BM_RanAudit)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
