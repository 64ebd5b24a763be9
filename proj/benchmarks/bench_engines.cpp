#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "liquidpower/behavior.hpp"
#include "liquidpower/counting.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/ld.hpp"
#include "liquidpower/netgen.hpp"
#include "liquidpower/oracle.hpp"
#include "liquidpower/pv.hpp"
#include "liquidpower/sampler.hpp"

using namespace liquidpower;

namespace {

std::vector<std::int64_t> mixed_weights(int n) {
    std::vector<std::int64_t> ws(n, 1);
    for (int v = 0; v < n; v += 3) ws[v] = 2;
    for (int v = 0; v < n; v += 7) ws[v] = 3;
    return ws;
}

} // namespace

static void BM_PartitionCounter4(benchmark::State& state) {
    const auto ws = mixed_weights(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PartitionCounter counter(ws, 4);
        benchmark::DoNotOptimize(counter.state_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionCounter4)->RangeMultiplier(2)->Range(4, 16)->Complexity();

static void BM_ForestTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const double pd = 0.5;
        benchmark::DoNotOptimize(pld(n - 1, 0.25, n, pd));
    }
}
BENCHMARK(BM_ForestTable)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

static void BM_LdMeasure13(benchmark::State& state) {
    std::vector<std::int64_t> ws(13, 1);
    ws[0] = 3;
    ws[1] = 2;
    ws[3] = 2;
    const WeightedVotingGame game(ws, Rational(1, 2));
    for (auto _ : state) {
        const CompletePowerSolver solver(game, Rational(1, 2));
        benchmark::DoNotOptimize(solver.measure(0));
    }
}
BENCHMARK(BM_LdMeasure13);

static void BM_PvMeasureUnit100(benchmark::State& state) {
    const WeightedVotingGame game(std::vector<std::int64_t>(100, 1), Rational(1, 2));
    std::vector<int> delegatees(static_cast<int>(state.range(0)));
    for (int v = 0; v < state.range(0); ++v) delegatees[v] = v;
    for (auto _ : state) {
        const ProxyPowerSolver solver(ProxyInstance(game, delegatees, Rational(1, 2)));
        benchmark::DoNotOptimize(solver.measure(0));
    }
}
BENCHMARK(BM_PvMeasureUnit100)->Arg(20)->Arg(50);

static void BM_SamplerComplete100(benchmark::State& state) {
    const auto graph = DelegationGraph::complete(100);
    const WeightedVotingGame game(mixed_weights(100), Rational(1, 2));
    const auto model = BehaviorModel::constant_pd(graph, Rational(1, 2));
    for (auto _ : state) {
        const auto report =
            estimate_measures(graph, game, model, SamplingPlan::fixed_k(10'000, 42));
        benchmark::DoNotOptimize(report.measure[0]);
    }
    state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_SamplerComplete100);

static void BM_SamplerGnp(benchmark::State& state) {
    const auto graph = gen_gnp(100, 10.0 / 99.0, 7);
    const WeightedVotingGame game(std::vector<std::int64_t>(100, 1), Rational(1, 2));
    const auto model = BehaviorModel::global_uniformity(graph);
    for (auto _ : state) {
        const auto report =
            estimate_measures(graph, game, model, SamplingPlan::fixed_k(5'000, 42));
        benchmark::DoNotOptimize(report.measure[0]);
    }
    state.SetItemsProcessed(state.iterations() * 5'000);
}
BENCHMARK(BM_SamplerGnp);

static void BM_OracleComplete(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto graph = DelegationGraph::complete(n);
    const WeightedVotingGame game(mixed_weights(n), Rational(1, 2));
    const auto model = BehaviorModel::global_uniformity(graph);
    for (auto _ : state) {
        const auto result = exact_measure_bruteforce(graph, game, model);
        benchmark::DoNotOptimize(result.measure[0]);
    }
}
BENCHMARK(BM_OracleComplete)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
