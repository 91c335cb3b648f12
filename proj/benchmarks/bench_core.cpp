#include <benchmark/benchmark.h>

#include "jackweight/jackpoly.hpp"
#include "jackweight/localseries.hpp"
#include "jackweight/odeflow.hpp"
#include "jackweight/torusquad.hpp"
#include "jackweight/weightsolve.hpp"

using namespace jw;

namespace {

const IrrepData& irrep21() {
    static const IrrepData ir = build_irrep(parse_partition("2,1"));
    return ir;
}

void BM_BuildIrrep(benchmark::State& state) {
    Partition tau = parse_partition("4,2");
    for (auto _ : state) benchmark::DoNotOptimize(build_irrep(tau));
}
BENCHMARK(BM_BuildIrrep);

void BM_Nsjp(benchmark::State& state) {
    IrrepData ir = build_irrep(parse_partition("3,1"));
    for (auto _ : state) benchmark::DoNotOptimize(nsjp(ir, 0.1, {1, 0, 1, 0}, 1));
}
BENCHMARK(BM_Nsjp);

void BM_FlowL(benchmark::State& state) {
    TorusPoint x = TorusPoint::from_angles({0.1, 2.0, 4.5});
    for (auto _ : state) benchmark::DoNotOptimize(flow_L(irrep21(), 0.25, x));
}
BENCHMARK(BM_FlowL);

void BM_MatchingConstant(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(matching_constant(irrep21(), 0.25));
}
BENCHMARK(BM_MatchingConstant)->Unit(benchmark::kMillisecond);

void BM_SolveH(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_H(irrep21(), 0.25));
}
BENCHMARK(BM_SolveH)->Unit(benchmark::kMillisecond);

void BM_GridL(benchmark::State& state) {
    QuadratureGrid g{3, static_cast<int>(state.range(0)), 0.0};
    FlowOptions fo;
    fo.tol = 1e-10;
    for (auto _ : state) {
        clear_grid_cache();
        benchmark::DoNotOptimize(grid_L(irrep21(), 0.25, g, fo, 1));
    }
    state.SetItemsProcessed(state.iterations() * g.P * g.P);
}
BENCHMARK(BM_GridL)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Pairing(benchmark::State& state) {
    WeightModel m{&irrep21(), 0.25, solve_H(irrep21(), 0.25).H};
    QuadratureOptions q;
    q.P = 24;
    q.threads = 1;
    LaurentVPoly f = nsjp(irrep21(), 0.25, {1, 0, 1}, 0);
    LaurentVPoly g = nsjp(irrep21(), 0.25, {0, 1, 1}, 1);
    pairing(m, f, g, q);
    for (auto _ : state) benchmark::DoNotOptimize(pairing(m, f, g, q));
}
BENCHMARK(BM_Pairing)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
