#include <benchmark/benchmark.h>

#include "pqbern/pqbern.hpp"

namespace {

using pqbern::OperatorConfig;
using pqbern::OperatorEvaluator;
using pqbern::PQParams;

// Per-point basis evaluation after setup; O(n) per x.
void BM_BasisEval(benchmark::State& state) {
    const long long n = state.range(0);
    const OperatorEvaluator<double> op(OperatorConfig<double>(n, PQParams<double>(0.9, 0.7)));
    double x = 0.0;
    for (auto _ : state) {
        x = x < 0.99 ? x + 1.0 / 1024.0 : 0.0;
        benchmark::DoNotOptimize(op.basis(x));
    }
    state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_BasisEval)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oN);

// One-time evaluator setup; O(n^2) from the Gaussian binomial row.
void BM_EvaluatorSetup(benchmark::State& state) {
    const long long n = state.range(0);
    const OperatorConfig<double> config(n, PQParams<double>(0.9, 0.7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(OperatorEvaluator<double>(config));
    }
    state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_EvaluatorSetup)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oNSquared);

void BM_ApplyKink(benchmark::State& state) {
    const long long n = state.range(0);
    const OperatorEvaluator<double> op(OperatorConfig<double>(
        n, PQParams<double>(0.99, 0.9), pqbern::StancuShift<double>(1.0, 2.0)));
    const auto f = pqbern::FunctionSpec::parse("abs:1/2").realize<double>();
    double x = 0.0;
    for (auto _ : state) {
        x = x < 0.99 ? x + 1.0 / 1024.0 : 0.0;
        benchmark::DoNotOptimize(op.apply(f, x));
    }
}
BENCHMARK(BM_ApplyKink)->RangeMultiplier(4)->Range(8, 512);

void BM_PqBinomialFloat(benchmark::State& state) {
    const PQParams<double> params(0.9, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pqbern::pq_binomial(64, 32, params));
    }
}
BENCHMARK(BM_PqBinomialFloat);

void BM_SweepRow(benchmark::State& state) {
    const long long n = state.range(0);
    const auto schedule = pqbern::ParameterSchedule::default_schedule();
    const pqbern::StancuShift<double> shift(1.0, 2.0);
    const auto f = pqbern::FunctionSpec::monomial(2).realize<double>();
    for (auto _ : state) {
        benchmark::DoNotOptimize(pqbern::sup_error(f, n, schedule, shift, 257));
    }
}
BENCHMARK(BM_SweepRow)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
