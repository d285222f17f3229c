#include <benchmark/benchmark.h>

#include <qconv/arith.hpp>
#include <qconv/generators.hpp>
#include <qconv/identity.hpp>
#include <qconv/series.hpp>

using namespace qconv;

static void BM_SeriesMultiply(benchmark::State& state) {
    const std::size_t order = std::size_t(state.range(0));
    const Series a = gen::build(gen::SeriesName::Q, order);
    const Series b = gen::build(gen::SeriesName::R, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMultiply)->Range(64, 1024)->Complexity();

static void BM_Sieve(benchmark::State& state) {
    const std::size_t limit = std::size_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(arith::sieve({arith::Family::wt, 3}, limit));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sieve)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_VerifySuite(benchmark::State& state) {
    const auto registry = ident::builtin_series_registry();
    for (auto _ : state)
        benchmark::DoNotOptimize(ident::run_suite(registry, std::size_t(state.range(0))));
}
BENCHMARK(BM_VerifySuite)->Arg(100)->Arg(300);

static void BM_Convolution(benchmark::State& state) {
    const auto wt = arith::sieve({arith::Family::wt, 1}, std::size_t(state.range(0)));
    for (auto _ : state) {
        Rat acc{0};
        for (long long n = 1; n <= state.range(0); ++n)
            acc += arith::convolution(wt, wt, arith::ConvShape::plain, n);
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Convolution)->Range(64, 512)->Complexity();

BENCHMARK_MAIN();
