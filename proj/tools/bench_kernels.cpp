// Serial reference vs OpenMP kernels: brute-force lattice sums and the
// q-grid sweep evaluation used by the limit engine.

#include <benchmark/benchmark.h>

#include "qbarnes/grid.hpp"
#include "qbarnes/qzeta.hpp"

using namespace qbarnes;

namespace {

void BM_lattice_sum_serial(benchmark::State& state) {
    const Weights om({1.0, std::sqrt(2.0)});
    const long N = state.range(0);
    for (auto _ : state) {
        auto r = par::lattice_sum_serial(om, Complex(1.0), Complex(4.0), N);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetItemsProcessed(state.iterations() * N * N);
}

void BM_lattice_sum_omp(benchmark::State& state) {
    const Weights om({1.0, std::sqrt(2.0)});
    const long N = state.range(0);
    for (auto _ : state) {
        auto r = par::lattice_sum(om, Complex(1.0), Complex(4.0), N);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetItemsProcessed(state.iterations() * N * N);
}

std::vector<double> bench_grid() {
    std::vector<double> g;
    for (int k = 3; k <= 11; ++k) g.push_back(1.0 - std::pow(2.0, -k));
    return g;
}

Complex sweep_point(double q) {
    TruncationPolicy pol;
    pol.tol = 1e-10;
    pol.max_terms = 2000000;
    return qzeta::qzeta_binomial_ac(2, QParam(q), Complex(3.5), Complex(2.5), Complex(1.0),
                                    Weights::ones(2), pol)
        .value;
}

void BM_sweep_grid_serial(benchmark::State& state) {
    const std::vector<double> grid = bench_grid();
    for (auto _ : state) {
        auto vals = par::map_indexed_serial<Complex>(grid.size(),
                                                     [&](std::size_t i) { return sweep_point(grid[i]); });
        benchmark::DoNotOptimize(vals.data());
    }
}

void BM_sweep_grid_omp(benchmark::State& state) {
    const std::vector<double> grid = bench_grid();
    for (auto _ : state) {
        auto vals =
            par::map_indexed<Complex>(grid.size(), [&](std::size_t i) { return sweep_point(grid[i]); });
        benchmark::DoNotOptimize(vals.data());
    }
}

} // namespace

BENCHMARK(BM_lattice_sum_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lattice_sum_omp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_grid_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_grid_omp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
