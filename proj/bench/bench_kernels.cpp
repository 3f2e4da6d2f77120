// Serial reference against the OpenMP kernel for the Verma product slices.
#include "gl11/characters.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_slices_serial(benchmark::State &state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gl11::verma_product_slices_serial(depth));
}

void BM_slices_parallel(benchmark::State &state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gl11::verma_product_slices(depth));
}

} // namespace

// Coefficients leave int64 range just past depth 140.
BENCHMARK(BM_slices_serial)->Arg(50)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_slices_parallel)->Arg(50)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
