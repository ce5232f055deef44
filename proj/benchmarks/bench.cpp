#include <benchmark/benchmark.h>

#include <map>

#include "cmdual/dual.hpp"
#include "cmdual/walsh.hpp"

namespace {

const cm::FieldCtx& field(int n) {
    static std::map<int, cm::FieldCtx*> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new cm::FieldCtx(n)).first;
    return *it->second;
}

void BM_FastSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    const auto& ctx = field(n);
    const int k = n % 2 == 0 ? n - 1 : n - 2; // largest valid odd k < n
    const auto tab = cm::cm_table(ctx, ctx.generator(), k);
    for (auto _ : state)
        benchmark::DoNotOptimize(cm::fast_spectrum(ctx, tab, threads));
    state.SetItemsProcessed(state.iterations() * ctx.size());
}
BENCHMARK(BM_FastSpectrum)
    ->Args({8, 1})
    ->Args({10, 1})
    ->Args({12, 1})
    ->Args({12, 2})
    ->Args({12, 4})
    ->Args({12, 8})
    ->Unit(benchmark::kMillisecond);

void BM_DualTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& ctx = field(n);
    const int k = n % 2 == 0 ? n - 1 : n - 2;
    const auto rep = cm::dual_representation(ctx, ctx.generator(), k);
    for (auto _ : state)
        benchmark::DoNotOptimize(cm::dual_table(ctx, rep));
    state.SetItemsProcessed(state.iterations() * ctx.size());
}
BENCHMARK(BM_DualTable)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BruteSets(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = n % 2 == 0 ? n - 1 : n - 2;
    const auto p = cm::derive_params(n, k);
    for (auto _ : state)
        benchmark::DoNotOptimize(cm::brute_S0_S1(p));
}
BENCHMARK(BM_BruteSets)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& ctx = field(n);
    const int k = n % 2 == 0 ? n - 1 : n - 2;
    const auto a = ctx.generator();
    const auto rep = cm::dual_representation(ctx, a, k);
    for (auto _ : state)
        benchmark::DoNotOptimize(cm::verify_weak_regularity(ctx, a, k, rep));
}
BENCHMARK(BM_VerifyAll)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
