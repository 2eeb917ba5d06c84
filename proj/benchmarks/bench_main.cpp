#include <benchmark/benchmark.h>

#include "closegap/arithmetic.hpp"
#include "closegap/class_group.hpp"
#include "closegap/rmt.hpp"
#include "closegap/zeros.hpp"
#include "closegap/zeta.hpp"

namespace {

void BM_HardyZ(benchmark::State& state) {
    double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closegap::hardy_z(t));
        t += 0.01;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HardyZ)->Arg(100)->Arg(10000)->Arg(1000000)->Arg(5000000);

void BM_FindZeros(benchmark::State& state) {
    const double lo = static_cast<double>(state.range(0));
    closegap::FindZerosOptions opts;
    opts.threads = 1;
    std::size_t n = 0;
    for (auto _ : state) n += closegap::find_zeros(lo, lo + 1000, 1e-9, opts).size();
    state.SetItemsProcessed(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FindZeros)->Arg(100000)->Arg(4000000)->Unit(benchmark::kMillisecond);

void BM_EnumerateClasses(benchmark::State& state) {
    const auto D = closegap::make_fundamental_discriminant(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closegap::enumerate_classes(D));
}
BENCHMARK(BM_EnumerateClasses)->Arg(9999991)->Arg(99999971);

void BM_GenusReport(benchmark::State& state) {
    const auto D = closegap::make_fundamental_discriminant(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closegap::genus_report(D));
}
BENCHMARK(BM_GenusReport)->Arg(5460)->Arg(9995);

void BM_DirichletL1(benchmark::State& state) {
    const auto D = closegap::make_fundamental_discriminant(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closegap::dirichlet_L1(D));
}
BENCHMARK(BM_DirichletL1)->Arg(499)->Arg(1000003);

void BM_SineKernelDeterminant(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closegap::sine_kernel_determinant(1.5, order));
}
BENCHMARK(BM_SineKernelDeterminant)->Arg(40)->Arg(80)->Arg(160);

void BM_GaudinPdf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(closegap::gaudin_pdf(1.0));
}
BENCHMARK(BM_GaudinPdf);

}  // namespace
BENCHMARK_MAIN();
