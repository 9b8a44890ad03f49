// Serial reference kernels against the OpenMP versions on cyclotomic matrices
// shaped like the catalog workloads (tensor squares of 16-dimensional algebras).
#include <random>

#include <benchmark/benchmark.h>

#include "ncgauge/foundation/kernels.hpp"

namespace {

ncg::Matrix random_sparse(std::size_t rows, std::size_t cols, double density, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-3, 3);
    ncg::Matrix m(rows, cols);
    const ncg::Scalar i4 = ncg::Scalar::root_of_unity(4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) < density) m(r, c) = ncg::Scalar(val(rng)) + ncg::Scalar(val(rng)) * i4;
    return m;
}

void BM_MatmulSerial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.1, 1);
    auto b = random_sparse(n, n, 0.1, 2);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::serial::matmul(a, b));
}

void BM_MatmulParallel(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.1, 1);
    auto b = random_sparse(n, n, 0.1, 2);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::matmul(a, b));
}

void BM_RrefSerial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.05, 3);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::serial::rref(a));
}

void BM_RrefParallel(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.05, 3);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::rref(a));
}

void BM_KronSerial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.3, 4);
    auto b = random_sparse(n, n, 0.3, 5);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::serial::kron(a, b));
}

void BM_KronParallel(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto a = random_sparse(n, n, 0.3, 4);
    auto b = random_sparse(n, n, 0.3, 5);
    for (auto _ : st) benchmark::DoNotOptimize(ncg::kernels::kron(a, b));
}

}  // namespace

BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_RrefSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_RrefParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_KronSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_KronParallel)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
