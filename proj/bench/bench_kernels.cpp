// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>

#include <omp.h>

#include "ncpart/bijection.hpp"
#include "ncpart/kernels.hpp"
#include "ncpart/oracles.hpp"

using namespace ncpart;

static void BM_SspHistogramSerial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::ssp_block_histogram(m));
}
BENCHMARK(BM_SspHistogramSerial)->Arg(16)->Arg(19)->Unit(benchmark::kMillisecond);

static void BM_SspHistogramOmp(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int threads = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::ssp_block_histogram(m, threads));
    state.counters["threads"] = threads;
}
BENCHMARK(BM_SspHistogramOmp)->Arg(16)->Arg(19)->Unit(benchmark::kMillisecond)->UseRealTime();

static const std::vector<Partition>& specials(int n) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_special(n)).first;
    return it->second;
}

static bool roundtrips(const std::vector<Partition>& parts, std::size_t i) {
    return inverse(forward(parts[i])) == parts[i];
}

static void BM_RoundTripSerial(benchmark::State& state) {
    const auto& parts = specials(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::serial::first_failure(
            parts.size(), [&](std::size_t i) { return roundtrips(parts, i); }));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_RoundTripSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_RoundTripOmp(benchmark::State& state) {
    const auto& parts = specials(static_cast<int>(state.range(0)));
    const int threads = omp_get_max_threads();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::omp::first_failure(
            parts.size(), [&](std::size_t i) { return roundtrips(parts, i); }, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
    state.counters["threads"] = threads;
}
BENCHMARK(BM_RoundTripOmp)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
