#include <benchmark/benchmark.h>

#include "ccx/busemann.hpp"
#include "ccx/farey.hpp"
#include "ccx/mcg.hpp"
#include "ccx/surfaces.hpp"

using namespace ccx;

static void BM_distance_deep(benchmark::State& state) {
    Slope x(1, 0), y(355, 113);
    for (auto _ : state) benchmark::DoNotOptimize(farey::distance(x, y));
}
BENCHMARK(BM_distance_deep);

static void BM_geodesics(benchmark::State& state) {
    Slope x(1, 0), y(static_cast<long long>(state.range(0)), 113);
    for (auto _ : state) benchmark::DoNotOptimize(farey::geodesics(x, y).size());
}
BENCHMARK(BM_geodesics)->Arg(355)->Arg(89);

static void BM_separating_edges(benchmark::State& state) {
    Slope x(1, 0), y(6765, 10946);
    for (auto _ : state) benchmark::DoNotOptimize(farey::separating_edges(x, y).size());
}
BENCHMARK(BM_separating_edges);

static void BM_decomp_enum(benchmark::State& state) {
    // rotate more surface types than the enumeration cache holds
    const surfaces::SurfaceType types[6] = {{0, 5}, {0, 6}, {1, 2}, {1, 3}, {2, 0}, {2, 1}};
    size_t i = 0;
    int cap = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            surfaces::enumerate_decompositions(types[i % 6], cap).size());
        ++i;
    }
}
BENCHMARK(BM_decomp_enum)->Arg(2)->Arg(4);

static void BM_bernoulli(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(surfaces::bernoulli(24));
}
BENCHMARK(BM_bernoulli);

static void BM_classify_pa(benchmark::State& state) {
    SL2Matrix m(2, 1, 1, 1);
    for (int i = 0; i < 4; ++i) m = m * SL2Matrix(2, 1, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(mcg::classify(m).kind);
}
BENCHMARK(BM_classify_pa);

static void BM_busemann_alpha(benchmark::State& state) {
    busemann::FareyBusemann fb;
    busemann::Engine<busemann::FareyBusemann> eng(fb, 3);
    BoundaryPoint a = BoundaryPoint::golden();
    Slope x(1, 2), y(1, 1);
    int horizon = farey::distance(x, y) + 8;
    for (auto _ : state) benchmark::DoNotOptimize(eng.alpha(a, x, y, horizon).value);
}
BENCHMARK(BM_busemann_alpha);

static void BM_geodesic_sphere(benchmark::State& state) {
    BoundaryPoint a = BoundaryPoint::golden();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            geodesic_sphere(Slope(0, 1), a, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_geodesic_sphere)->Arg(4)->Arg(10);

BENCHMARK_MAIN();
