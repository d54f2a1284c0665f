#include <benchmark/benchmark.h>

#include <random>

#include "pirac/gf2.hpp"
#include "pirac/rng.hpp"

using namespace pirac;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    BitMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (std::size_t i = 0; i < rows; ++i) {
        BitVec v(cols);
        for (std::size_t j = 0; j < cols; ++j)
            if (g() & 1) v.set(j, true);
        m.row.push_back(std::move(v));
    }
    return m;
}

void BM_mat_vec_mul(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    BitMatrix H = random_matrix(n, n, 7);
    BitVec y(n);
    for (std::size_t j = 0; j < n; j += 3) y.set(j, true);
    for (auto _ : state) benchmark::DoNotOptimize(mat_vec_mul(H, y));
}
BENCHMARK(BM_mat_vec_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_rank(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    BitMatrix H = random_matrix(n, n, 11);
    for (auto _ : state) benchmark::DoNotOptimize(rank(H));
}
BENCHMARK(BM_rank)->Arg(16)->Arg(64)->Arg(256);

void BM_solve_any(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    BitMatrix H = random_matrix(n, 2 * n, 13);
    BitVec s(n);
    s.set(0, true);
    for (auto _ : state) benchmark::DoNotOptimize(solve_any(H, s));
}
BENCHMARK(BM_solve_any)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
