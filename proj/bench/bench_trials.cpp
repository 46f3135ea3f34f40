// Serial reference vs OpenMP trial runner, plus the two contact oracles.

#include <benchmark/benchmark.h>

#include "cayley/jet.hpp"
#include "cayley/trials.hpp"

using namespace cayley;

namespace {

void BM_TrialsSerial(benchmark::State& state) {
    TrialConfig cfg{1, static_cast<std::size_t>(state.range(0)), 16, state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg, all_strata()));
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(all_strata().size()));
}

void BM_TrialsParallel(benchmark::State& state) {
    TrialConfig cfg{1, static_cast<std::size_t>(state.range(0)), 16, state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_parallel(cfg, all_strata()));
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(all_strata().size()));
}

void BM_ContactOrderH(benchmark::State& state) {
    CurveParams c(Rational(1, 3), Rational(3, 2), Rational(2, 7)), d(Rational(-5, 4), Rational(3, 2), Rational(2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(contact_order(c, d));
}

void BM_ContactOrderJet(benchmark::State& state) {
    CurveParams c(Rational(1, 3), Rational(3, 2), Rational(2, 7)), d(Rational(-5, 4), Rational(3, 2), Rational(2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(jet_contact_order(c, d, Mode::primal));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Args({50, 0})->Args({50, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Args({50, 0})->Args({50, 1})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ContactOrderH)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ContactOrderJet)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
