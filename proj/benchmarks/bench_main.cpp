#include <benchmark/benchmark.h>

#include "griess/griess.hpp"

using namespace griess;

static void BM_BuildA(benchmark::State& state) {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("A" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(build_A(rs).dim());
}
BENCHMARK(BM_BuildA)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FindIdentity(benchmark::State& state) {
    const RootAlgebra ra = build_A(RootSystem::build("A" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(find_identity(ra.algebra()));
}
BENCHMARK(BM_FindIdentity)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BuildBPlus(benchmark::State& state) {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("E8"));
    for (auto _ : state) benchmark::DoNotOptimize(build_bplus(rs).dim());
}
BENCHMARK(BM_BuildBPlus)->Unit(benchmark::kMillisecond);

static void BM_PhiSweep(benchmark::State& state) {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build(state.range(0) == 0 ? "D5" : "E6"));
    const PhiMap phi = build_phi(build_A(rs), build_bplus(rs));
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_3_1(phi, 1).ok());
}
BENCHMARK(BM_PhiSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Multiply(benchmark::State& state) {
    const RootAlgebra ra = build_A(RootSystem::build("E8"));
    const auto d = delta(ra);
    const auto e = epsilon(ra);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(d, e));
}
BENCHMARK(BM_Multiply)->Unit(benchmark::kMicrosecond);

static void BM_CosetChain(benchmark::State& state) {
    const RootAlgebra ra = build_A(RootSystem::build("A" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(coset_chain_decompose(ra, false).ok());
}
BENCHMARK(BM_CosetChain)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Lagrangians(benchmark::State& state) {
    const F2QuadSpace s(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_lagrangians(s));
}
BENCHMARK(BM_Lagrangians)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
