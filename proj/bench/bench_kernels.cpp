// OpenMP kernels against their serial references
#include "olpuc/moments.hpp"
#include "olpuc/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace olpuc;

namespace {

Measure bench_measure() {
    Factor f{FactorKind::toda_exp, {}, 0.0, 0.0};
    f.times.t1 = {cplx(0.3, 0.1)};
    f.times.t2 = {cplx(-0.2, 0.05)};
    return Measure::exp_cos(512).decorated(f);
}

void BM_moments_parallel(benchmark::State& st) {
    const Measure m = bench_measure();
    const Ordering ord(2, 1);
    for (auto _ : st) benchmark::DoNotOptimize(build_moments(m, ord, static_cast<int>(st.range(0))));
}

void BM_moments_serial(benchmark::State& st) {
    const Measure m = bench_measure();
    const Ordering ord(2, 1);
    for (auto _ : st) benchmark::DoNotOptimize(build_moments_serial(m, ord, static_cast<int>(st.range(0))));
}

const ZFunc integrand = [](cplx z) { return std::exp(z) * std::pow(z, 3) + 1.0 / (z - 2.0); };

void BM_integrate_parallel(benchmark::State& st) {
    const Measure m = bench_measure();
    for (auto _ : st) benchmark::DoNotOptimize(integrate(m, integrand, static_cast<int>(st.range(0))));
}

void BM_integrate_serial(benchmark::State& st) {
    const Measure m = bench_measure();
    for (auto _ : st) benchmark::DoNotOptimize(integrate_serial(m, integrand, static_cast<int>(st.range(0))));
}

} // namespace

BENCHMARK(BM_moments_parallel)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_moments_serial)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_integrate_parallel)->Arg(4096)->Arg(65536)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_integrate_serial)->Arg(4096)->Arg(65536)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
