#include <benchmark/benchmark.h>

#include "neyman/distributions.hpp"
#include "neyman/estimators.hpp"
#include "neyman/rng.hpp"
#include "neyman/simulate.hpp"
#include "neyman/theory.hpp"

namespace {

const neyman::ProblemInstance kInstance{
    neyman::OutcomeDistribution::bernoulli(0.4),
    neyman::OutcomeDistribution::bernoulli(0.1)};

void BM_RngNextUnit(benchmark::State& state) {
    neyman::RngStream rng(1, 2);
    double acc = 0.0;
    for (auto _ : state) acc += rng.next_unit();
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RngNextUnit);

void BM_ClipSmtReplication(benchmark::State& state) {
    const std::int64_t horizon = state.range(0);
    neyman::StrategySpec spec;
    spec.kind = neyman::StrategyKind::ClipSmt;
    std::uint64_t stream = 0;
    for (auto _ : state) {
        auto res = neyman::run_replication(kInstance, spec, horizon,
                                           neyman::RngStream(7, stream++));
        benchmark::DoNotOptimize(res.ledger.cumulative);
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_ClipSmtReplication)->Arg(1000)->Arg(20000);

void BM_ClipOgdReplication(benchmark::State& state) {
    const std::int64_t horizon = state.range(0);
    neyman::StrategySpec spec;
    spec.kind = neyman::StrategyKind::ClipOgd;
    std::uint64_t stream = 0;
    for (auto _ : state) {
        auto res = neyman::run_replication(kInstance, spec, horizon,
                                           neyman::RngStream(7, stream++));
        benchmark::DoNotOptimize(res.ledger.cumulative);
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_ClipOgdReplication)->Arg(20000);

void BM_AhtEstimate(benchmark::State& state) {
    neyman::StrategySpec spec;
    spec.kind = neyman::StrategyKind::ClipSmt;
    const auto res =
        neyman::run_replication(kInstance, spec, 20000, neyman::RngStream(7, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(neyman::aht_estimate(res.trace));
    }
}
BENCHMARK(BM_AhtEstimate);

void BM_PredictClipPhase(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            neyman::predict_clip_phase(kInstance, 1.0 / 3.0, 0.05));
    }
}
BENCHMARK(BM_PredictClipPhase);

}  // namespace

BENCHMARK_MAIN();
