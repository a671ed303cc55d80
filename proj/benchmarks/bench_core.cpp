#include <benchmark/benchmark.h>

#include <cmath>

#include "nchydro/corrections.hpp"
#include "nchydro/monte_carlo.hpp"
#include "nchydro/quadrature.hpp"
#include "nchydro/regularized_series.hpp"
#include "nchydro/special_functions.hpp"

using namespace nchydro;

static void BM_Laguerre(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(laguerre(degree, 0.5, 2.5));
}
BENCHMARK(BM_Laguerre)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Hyp2f1Sum(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hyp2f1_neg_sum(k));
}
BENCHMARK(BM_Hyp2f1Sum)->Arg(10)->Arg(30);

static void BM_Hyp2f1Integral(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hyp2f1_neg_integral(k));
}
BENCHMARK(BM_Hyp2f1Integral)->Arg(30)->Arg(400);

static void BM_SemiInfiniteGaussian(benchmark::State& state) {
    for (auto _ : state) {
        const auto r = integrate_semi_infinite(
            [](double z) { return std::exp(-0.75 * z * z); }, 1e-11);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SemiInfiniteGaussian);

static void BM_DifferenceClosedForm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(difference_closed_form(1.0));
}
BENCHMARK(BM_DifferenceClosedForm);

static void BM_DifferenceSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(difference_series_eta(0.99, 400));
}
BENCHMARK(BM_DifferenceSeries);

static void BM_AbelRoute(benchmark::State& state) {
    for (auto _ : state) {
        const auto r = abel_extrapolate(
            EtaSchedule::default_schedule(),
            [](double eta) { return difference_series_eta(eta, 400); });
        benchmark::DoNotOptimize(r.extrapolated);
    }
}
BENCHMARK(BM_AbelRoute);

static void BM_McThetaPrime(benchmark::State& state) {
    const long long samples = state.range(0);
    for (auto _ : state) {
        const auto est = theta_prime_mean(samples, 1);
        benchmark::DoNotOptimize(est.mean);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_McThetaPrime)->Arg(100'000)->Arg(1'000'000);

BENCHMARK_MAIN();
