#include <benchmark/benchmark.h>

#include "ccb/averaging.hpp"
#include "ccb/blocks.hpp"
#include "ccb/hyp.hpp"
#include "ccb/scalar.hpp"

namespace {

void BM_LogGamma(benchmark::State& state) {
    ccb::Complex z{0.25, 40.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ccb::log_gamma(z));
        z += ccb::Complex{0.0, 1e-9};
    }
}
BENCHMARK(BM_LogGamma);

void BM_BarnesContourBuild(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        ccb::BarnesContour contour(t, 1e-3, 1.0);
        benchmark::DoNotOptimize(contour);
    }
}
BENCHMARK(BM_BarnesContourBuild)->Arg(20)->Arg(75);

void BM_BarnesContourEval(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    ccb::BarnesContour contour(t, 1e-3, 1.0);
    ccb::Complex z{0.02, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(contour.eval(z));
    }
}
BENCHMARK(BM_BarnesContourEval)->Arg(20)->Arg(75);

void BM_ConnectionEval(benchmark::State& state) {
    const ccb::SpectralPoint s(0.5, static_cast<double>(state.range(0)));
    ccb::Complex z{1e-3, 0.01};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ccb::hyp2f1_connection_t(s, z));
    }
}
BENCHMARK(BM_ConnectionEval)->Arg(20)->Arg(75);

void BM_WeightWExact(benchmark::State& state) {
    const ccb::SpectralPoint s(0.5, static_cast<double>(state.range(0)));
    const ccb::WeightParams params(1, 75.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ccb::weight_W_exact(s, params));
    }
}
BENCHMARK(BM_WeightWExact)->Arg(20)->Arg(75)->Unit(benchmark::kMillisecond);

void BM_WeightWcheckExact(benchmark::State& state) {
    const ccb::SpectralPoint s(0.5, static_cast<double>(state.range(0)));
    const ccb::WeightParams params(1, 75.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ccb::weight_Wcheck_exact(s, params));
    }
}
BENCHMARK(BM_WeightWcheckExact)->Arg(20)->Arg(75)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
