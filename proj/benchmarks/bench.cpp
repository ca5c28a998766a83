#include <benchmark/benchmark.h>

#include "egr/dataset.hpp"
#include "egr/enumerate.hpp"
#include "egr/galois.hpp"
#include "egr/heights.hpp"
#include "egr/lattice.hpp"
#include "egr/units.hpp"

using namespace egr;

static void BM_EnumerateGolden(benchmark::State& state) {
    NFPtr K = field_real_quadratic(5);
    UnitGroup U = unit_group(K);
    Q B(state.range(0));
    for (auto _ : state) {
        auto r = enumerate_bounded_height(K, B, U);
        benchmark::DoNotOptimize(r.elements.size());
    }
    state.counters["elements"] =
        (double)enumerate_bounded_height(K, B, U).elements.size();
}
BENCHMARK(BM_EnumerateGolden)->Arg(4)->Arg(10)->Arg(20);

static void BM_HeightCompare(benchmark::State& state) {
    NFPtr K = field_real_quadratic(353);
    NFElement x(K, {Q(3, 7), Q(5, 7)});
    for (auto _ : state) benchmark::DoNotOptimize(height_compare(x, Q(2)));
}
BENCHMARK(BM_HeightCompare);

static void BM_HeightBall(benchmark::State& state) {
    NFPtr K = field_real_quadratic(353);
    NFElement x(K, {Q(3, 7), Q(5, 7)});
    unsigned prec = (unsigned)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(height_ball(x, prec).mid_d());
}
BENCHMARK(BM_HeightBall)->Arg(96)->Arg(192)->Arg(384);

static void BM_FundamentalUnit(benchmark::State& state) {
    for (auto _ : state) {
        NFPtr F;
        benchmark::DoNotOptimize(fundamental_unit_quadratic(Z(1597), &F));
    }
}
BENCHMARK(BM_FundamentalUnit);

static void BM_UnitsUpTo(benchmark::State& state) {
    NFPtr K = field_sqrt(2);
    UnitGroup U = unit_group(K);
    Q B = qpow(Q(10), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(units_of_height_up_to(U, B).size());
}
BENCHMARK(BM_UnitsUpTo)->Arg(3)->Arg(6)->Arg(9);

static void BM_IdealsOfNorm(benchmark::State& state) {
    NFPtr K = field_gauss();
    for (auto _ : state)
        benchmark::DoNotOptimize(ideals_of_norm_up_to(K, state.range(0)).size());
}
BENCHMARK(BM_IdealsOfNorm)->Arg(50)->Arg(200);

static void BM_CycleTypeScan(benchmark::State& state) {
    QPoly f = qpoly_from_z({Z(2), Z(0), Z(-19), Z(19), Z(1), Z(-2), Z(1)});
    for (auto _ : state)
        benchmark::DoNotOptimize(cycle_type_scan(f, (uint64_t)state.range(0)).primes_used);
}
BENCHMARK(BM_CycleTypeScan)->Arg(2000)->Arg(10000);

BENCHMARK_MAIN();
