#include <benchmark/benchmark.h>

#include "snres/cocycles.hpp"
#include "snres/complex_p.hpp"
#include "snres/h3.hpp"
#include "snres/rewrite.hpp"

static void BM_NormalFormPerm(benchmark::State& state) {
    const auto G = snres::all_perms(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& g : G) benchmark::DoNotOptimize(snres::normal_form_perm(g));
}
BENCHMARK(BM_NormalFormPerm)->Arg(5)->Arg(7);

static void BM_DSquared(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(snres::check_d_squared(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DSquared)->Arg(6)->Arg(8);

static void BM_EssentialBoundaries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(snres::q_complex(n, 3));
}
BENCHMARK(BM_EssentialBoundaries)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TwistedHomology(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const snres::FreeComplex P = snres::p_complex(n);
    const snres::CoefficientModule M = snres::CoefficientModule::permutation(n, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(snres::homology(P, M, 2));
}
BENCHMARK(BM_TwistedHomology)->Args({6, 2})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_CocycleCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const snres::FreeComplex P = snres::p_complex(n);
    const snres::Cochain f = snres::build_cocycle("beta_hat", 1, n, n / 2, snres::RingSpec::Zmod(2));
    for (auto _ : state) benchmark::DoNotOptimize(snres::verify_cocycle(P, f));
}
BENCHMARK(BM_CocycleCheck)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_H3ViaQ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(snres::h3_via_q(n));
}
BENCHMARK(BM_H3ViaQ)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_D8Suite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(snres::d8_suite());
}
BENCHMARK(BM_D8Suite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
