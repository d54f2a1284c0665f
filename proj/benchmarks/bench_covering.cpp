#include <benchmark/benchmark.h>

#include "pirac/covering.hpp"
#include "pirac/database.hpp"
#include "pirac/schemes.hpp"

using namespace pirac;

namespace {

void BM_build_code_hamming(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    BitMatrix H = hamming_parity(m);
    for (auto _ : state) benchmark::DoNotOptimize(build_code(H));
}
BENCHMARK(BM_build_code_hamming)->Arg(3)->Arg(4)->Arg(5);

void BM_build_code_sum_augmented(benchmark::State& state) {
    const std::size_t r = std::size_t(state.range(0));
    BitMatrix H = sum_augmented_identity(r);
    for (auto _ : state) benchmark::DoNotOptimize(build_code(H));
}
BENCHMARK(BM_build_code_sum_augmented)->Arg(8)->Arg(12)->Arg(16);

void BM_answer_query(benchmark::State& state) {
    const std::size_t m = 4;
    Database db = Database::random(m, 64, 3);  // one unit per syndrome bit
    EncodedStorage st = encode_storage(columns_matrix(db.files), build_code(hamming_parity(m)));
    std::uint64_t s = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(answer_query(st, BitVec::from_index(s, m)));
        s = (s + 1) & ((1u << m) - 1);
    }
}
BENCHMARK(BM_answer_query);

void BM_two_server_run(benchmark::State& state) {
    Database db = Database::random(12, 128, 5);
    TwoServerScheme ctx(db, true);
    std::uint64_t a = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.run(1 + (a % 12), BitVec::from_index(a & 0xfff, 12)));
        ++a;
    }
}
BENCHMARK(BM_two_server_run);

}  // namespace

BENCHMARK_MAIN();
