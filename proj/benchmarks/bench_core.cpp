// Microbenchmarks for the hot paths: special functions, quadrature weights,
// kernel evaluation, system assembly, the direct solve, and basis sampling.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "hfbem/geometry.hpp"
#include "hfbem/kernels.hpp"
#include "hfbem/nystrom.hpp"
#include "hfbem/spaces.hpp"
#include "hfbem/specfun.hpp"

namespace {

void bm_bessel01(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::bessel01(x));
    }
}
BENCHMARK(bm_bessel01)->Arg(5)->Arg(50)->Arg(400);

void bm_bessel_table(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    const int order = static_cast<int>(hfbem::series_truncation(x));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::bessel_table(x, order));
    }
}
BENCHMARK(bm_bessel_table)->Arg(50)->Arg(400);

void bm_log_weights(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::log_quadrature_weights(n, 2.0 * 3.14159265358979));
    }
}
BENCHMARK(bm_log_weights)->Arg(600)->Arg(2400);

void bm_kernel_eval(benchmark::State& state) {
    const hfbem::ParametricBoundary curve = hfbem::make_ellipse(1.5, 0.5, 0.0);
    const hfbem::KernelSplit kernel(curve, static_cast<double>(state.range(0)));
    const auto target = kernel.extended_sample(0.37);
    const auto source = kernel.extended_sample(2.11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.evaluate(target, source));
    }
}
BENCHMARK(bm_kernel_eval)->Arg(50)->Arg(400);

void bm_assemble(benchmark::State& state) {
    const double k = static_cast<double>(state.range(0));
    const hfbem::ParametricBoundary curve = hfbem::make_circle(1.0);
    const hfbem::IncidentWave wave(hfbem::Vec2(1.0, 0.0), k);
    const hfbem::KernelSplit kernel(curve, k);
    const hfbem::PeriodicGrid grid = hfbem::build_grid(curve, k, 12.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::assemble(kernel, wave, grid));
    }
}
BENCHMARK(bm_assemble)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void bm_lu_solve(benchmark::State& state) {
    const double k = static_cast<double>(state.range(0));
    const hfbem::ParametricBoundary curve = hfbem::make_circle(1.0);
    const hfbem::IncidentWave wave(hfbem::Vec2(1.0, 0.0), k);
    const hfbem::KernelSplit kernel(curve, k);
    const hfbem::NystromSystem system =
        hfbem::assemble(kernel, wave, hfbem::build_grid(curve, k, 12.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::solve_reference(system));
    }
}
BENCHMARK(bm_lu_solve)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void bm_basis_eval(benchmark::State& state) {
    const double k = 100.0;
    const hfbem::ParametricBoundary circle = hfbem::make_circle(1.0);
    const hfbem::Vec2 alpha(1.0, 0.0);
    const hfbem::ShadowResult shifted = hfbem::shadow_geometry(circle, alpha);
    const hfbem::IncidentWave wave(alpha, k);
    const hfbem::Space space =
        hfbem::make_cov_space(shifted.curve, wave, shifted.shadow, 8);
    const int dim = hfbem::dimension(space);
    double t = 0.0;
    int index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfbem::eval_basis(space, index, t));
        index = (index + 1) % dim;
        t += 0.37;
        if (t > space.partition.period) t -= space.partition.period;
    }
}
BENCHMARK(bm_basis_eval);

} // namespace

BENCHMARK_MAIN();
