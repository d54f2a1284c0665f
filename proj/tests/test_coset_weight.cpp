#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "pirac/coset_weight.hpp"
#include "pirac/covering.hpp"
#include "pirac/errors.hpp"
#include "pirac/gf2.hpp"

using namespace pirac;

namespace {

BitMatrix random_full_rank(std::size_t r, std::size_t l, std::mt19937_64& g) {
    for (;;) {
        BitMatrix m;
        m.rows = r;
        m.cols = l;
        for (std::size_t i = 0; i < r; ++i) {
            BitVec v(l);
            for (std::size_t j = 0; j < l; ++j)
                if (g() & 1) v.set(j, true);
            m.row.push_back(std::move(v));
        }
        if (rank(m) == r) return m;
        m.row.clear();
    }
}

// oracle: the span of a column subset, materialized as a set of values
std::set<std::uint64_t> span_of(const std::vector<std::uint64_t>& colsyn, std::uint64_t colmask) {
    std::set<std::uint64_t> span{0};
    for (std::size_t j = 0; j < colsyn.size(); ++j) {
        if (!((colmask >> j) & 1)) continue;
        std::set<std::uint64_t> next = span;
        for (std::uint64_t s : span) next.insert(s ^ colsyn[j]);
        span = std::move(next);
    }
    return span;
}

std::size_t oracle_min_spanning(const std::vector<std::uint64_t>& colsyn,
                                const std::vector<std::uint64_t>& targets) {
    const std::size_t l = colsyn.size();
    std::size_t best = l + 1;
    for (std::uint64_t colmask = 0; colmask < (std::uint64_t(1) << l); ++colmask) {
        std::size_t size = std::popcount(colmask);
        if (size >= best) continue;
        auto span = span_of(colsyn, colmask);
        bool all = true;
        for (std::uint64_t t : targets)
            if (!span.count(t)) {
                all = false;
                break;
            }
        if (all) best = size;
    }
    return best;
}

// oracle: max over all tau-subsets of syndromes, by recursive tuple choice
void oracle_tuples(std::uint64_t nsyn, std::size_t tau, std::uint64_t from,
                   std::vector<std::uint64_t>& cur,
                   const std::vector<std::uint64_t>& colsyn, std::size_t& worst) {
    if (cur.size() == tau) {
        worst = std::max(worst, oracle_min_spanning(colsyn, cur));
        return;
    }
    for (std::uint64_t v = from; v < nsyn; ++v) {
        cur.push_back(v);
        oracle_tuples(nsyn, tau, v + 1, cur, colsyn, worst);
        cur.pop_back();
    }
}

std::size_t oracle_max_tau(const BitMatrix& H, std::size_t tau) {
    std::vector<std::uint64_t> colsyn;
    for (std::size_t j = 0; j < H.cols; ++j) colsyn.push_back(H.col(j).index());
    std::vector<std::uint64_t> cur;
    std::size_t worst = 0;
    oracle_tuples(std::uint64_t(1) << H.rows, tau, 0, cur, colsyn, worst);
    return worst;
}

}  // namespace

TEST_CASE("max_tau_coset_weight matches the exhaustive oracle on small codes") {
    std::mt19937_64 g(211);
    for (int it = 0; it < 10; ++it) {
        std::size_t r = 2 + g() % 2;         // 2..3
        std::size_t l = r + 1 + g() % 3;     // r+1..r+3
        BitMatrix H = random_full_rank(r, l, g);
        for (std::size_t tau = 1; tau <= 3; ++tau)
            CHECK(max_tau_coset_weight(H, tau) == oracle_max_tau(H, tau));
    }
}

TEST_CASE("Hamming parity checks have R_tau == tau") {
    for (std::size_t m = 2; m <= 3; ++m) {
        BitMatrix H = hamming_parity(m);
        for (std::size_t tau = 1; tau <= m; ++tau) CHECK(max_tau_coset_weight(H, tau) == tau);
    }
}

TEST_CASE("extended Hamming m=3 has R_tau == tau + 1") {
    BitMatrix H = extended_hamming_parity(3);
    for (std::size_t tau = 1; tau <= 3; ++tau) CHECK(max_tau_coset_weight(H, tau) == tau + 1);
}

TEST_CASE("R_tau is bounded by n - k and monotone in tau") {
    std::mt19937_64 g(223);
    for (int it = 0; it < 8; ++it) {
        std::size_t r = 2 + g() % 3;       // 2..4
        std::size_t l = r + 1 + g() % 4;
        BitMatrix H = random_full_rank(r, l, g);
        std::size_t prev = 0;
        for (std::size_t tau = 1; tau <= 3 && tau <= (std::size_t(1) << r); ++tau) {
            std::size_t rt = max_tau_coset_weight(H, tau);
            CHECK(rt <= r);  // n - k == r for full-row-rank H
            CHECK(rt >= prev);
            prev = rt;
        }
    }
}

TEST_CASE("coset_weight on explicit syndrome sets") {
    BitMatrix H = hamming_parity(3);
    // each nonzero syndrome is a column, so singletons cost 1
    for (std::uint64_t s = 1; s < 8; ++s)
        CHECK(coset_weight(H, {BitVec::from_index(s, 3)}) == 1);
    CHECK(coset_weight(H, {BitVec(3)}) == 0);  // zero syndrome needs nothing
    // two independent syndromes need at least two columns
    CHECK(coset_weight(H, {BitVec::from_index(1, 3), BitVec::from_index(2, 3)}) == 2);
    // a dependent triple still needs only two columns
    CHECK(coset_weight(H, {BitVec::from_index(1, 3), BitVec::from_index(2, 3),
                           BitVec::from_index(3, 3)}) == 2);
}

TEST_CASE("coset_weight validates input") {
    BitMatrix H = hamming_parity(3);
    CHECK_THROWS_AS(coset_weight(H, {}), std::invalid_argument);
    CHECK_THROWS_AS(coset_weight(H, {BitVec(4)}), std::invalid_argument);
    CHECK_THROWS_AS(coset_weight(H, {BitVec::from_index(1, 3), BitVec::from_index(1, 3)}),
                    std::invalid_argument);
    // a syndrome outside the column span is rejected
    BitMatrix thin = BitMatrix::from_rows({"11", "00"});
    CHECK_THROWS_AS(coset_weight(thin, {BitVec::from_index(2, 2)}), std::invalid_argument);
}

TEST_CASE("max_tau_coset_weight guards") {
    BitMatrix H = hamming_parity(3);
    CHECK_THROWS_AS(max_tau_coset_weight(H, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_tau_coset_weight(H, 9), std::invalid_argument);  // > 2^3 syndromes
    BitMatrix deficient = BitMatrix::from_rows({"110", "110"});
    CHECK_THROWS_AS(max_tau_coset_weight(deficient, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_tau_coset_weight(hamming_parity(5), 5), feasibility_error);
}
