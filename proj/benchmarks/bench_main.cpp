#include <benchmark/benchmark.h>

#include "tifs/dynamics.hpp"
#include "tifs/fixtures.hpp"
#include "tifs/geometry.hpp"
#include "tifs/symbolic.hpp"
#include "tifs/tiling.hpp"

namespace {

using namespace tifs;

void BM_OmegaEnumeration(benchmark::State& state) {
    const System& system = fixtures::fib();
    for (auto _ : state) {
        SymbolicTiling tiling = omega(system, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(tiling.words.data());
    }
}
BENCHMARK(BM_OmegaEnumeration)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_AttractorDeterministic(benchmark::State& state) {
    const System& system = fixtures::sier();
    for (auto _ : state) {
        PointCloud cloud = attractor_deterministic(system, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(cloud.parts.data());
    }
}
BENCHMARK(BM_AttractorDeterministic)->Arg(6)->Arg(9)->Arg(12);

void BM_ChaosGame(benchmark::State& state) {
    const System& system = fixtures::sier();
    for (auto _ : state) {
        PointCloud cloud = chaos_game(system, static_cast<std::size_t>(state.range(0)), 0.0, 7);
        benchmark::DoNotOptimize(cloud.parts.data());
    }
}
BENCHMARK(BM_ChaosGame)->Arg(10000)->Arg(100000);

void BM_CanonicalTiling(benchmark::State& state) {
    const System& system = fixtures::fib();
    for (auto _ : state) {
        Tiling tiling = canonical_tiling(system, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(tiling.tiles.data());
    }
}
BENCHMARK(BM_CanonicalTiling)->Arg(6)->Arg(10)->Arg(14);

void BM_DeflateCanonical(benchmark::State& state) {
    const System& system = fixtures::fib();
    Tiling tiling = canonical_tiling(system, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Tiling deflated = deflate(system, tiling);
        benchmark::DoNotOptimize(deflated.tiles.data());
    }
}
BENCHMARK(BM_DeflateCanonical)->Arg(6)->Arg(10)->Arg(14);

void BM_HausdorffDimension(benchmark::State& state) {
    const System& system = fixtures::gd2();
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff_dimension_osc(system));
}
BENCHMARK(BM_HausdorffDimension);

} // namespace

BENCHMARK_MAIN();
