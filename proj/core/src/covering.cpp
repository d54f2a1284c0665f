#include "pirac/covering.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "pirac/errors.hpp"
#include "pirac/gf2.hpp"

namespace pirac {

namespace {

// next same-weight mask in increasing numeric order (Gosper's hack)
std::uint64_t gosper_next(std::uint64_t x) {
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

std::vector<std::uint64_t> column_syndromes(const BitMatrix& H) {
    std::vector<std::uint64_t> syn(H.cols);
    for (std::size_t j = 0; j < H.cols; ++j) syn[j] = H.col(j).index();
    return syn;
}

std::uint64_t mask_syndrome(const std::vector<std::uint64_t>& colsyn, std::uint64_t mask) {
    std::uint64_t s = 0;
    while (mask) {
        s ^= colsyn[std::countr_zero(mask)];
        mask &= mask - 1;
    }
    return s;
}

constexpr std::uint64_t kUnset = ~std::uint64_t(0);

}  // namespace

CoveringCode build_code(const BitMatrix& H) {
    const std::size_t r = H.rows, l = H.cols;
    if (r > TABLE_LIMIT)
        throw feasibility_error("build_code: redundancy " + std::to_string(r) +
                                " exceeds TABLE_LIMIT=" + std::to_string(TABLE_LIMIT));
    if (l > LENGTH_LIMIT)
        throw feasibility_error("build_code: length " + std::to_string(l) +
                                " exceeds the 64-column word representation");
    if (rank(H) != r)
        throw std::invalid_argument("build_code: parity-check matrix must have full row rank");

    CoveringCode code;
    code.H = H;
    code.r = r;
    code.l = l;
    const std::uint64_t total = std::uint64_t(1) << r;
    code.leader.assign(total, kUnset);
    code.leader[0] = 0;
    std::uint64_t found = 1;
    const std::vector<std::uint64_t> colsyn = column_syndromes(H);

    std::size_t w = 0;
    while (found < total) {
        ++w;
        // full row rank guarantees completion by weight r
        if (w > l) throw std::logic_error("build_code: syndrome sweep did not complete");
        std::uint64_t mask = (std::uint64_t(1) << w) - 1;
        const std::uint64_t last = mask << (l - w);
        for (;;) {
            std::uint64_t s = mask_syndrome(colsyn, mask);
            if (code.leader[s] == kUnset) {
                code.leader[s] = mask;
                if (++found == total) break;
            }
            if (mask == last) break;
            mask = gosper_next(mask);
        }
    }
    code.radius = w;
    return code;
}

BitMatrix hamming_parity(std::size_t m) {
    if (m < 2) throw std::invalid_argument("hamming_parity: m must be at least 2");
    if (m > TABLE_LIMIT) throw feasibility_error("hamming_parity: m exceeds TABLE_LIMIT");
    const std::size_t l = (std::size_t(1) << m) - 1;
    BitMatrix H(m, l);
    for (std::size_t j = 1; j <= l; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if ((j >> i) & 1u) H.set(i, j - 1, true);
    return H;
}

BitMatrix extended_hamming_parity(std::size_t m) {
    if (m < 2) throw std::invalid_argument("extended_hamming_parity: m must be at least 2");
    BitMatrix base = hamming_parity(m);
    BitMatrix H(m + 1, base.cols + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < base.cols; ++j)
            if (base.get(i, j)) H.set(i, j, true);
    // the appended column is zero in the Hamming rows; the overall-parity row
    // covers every column
    for (std::size_t j = 0; j < H.cols; ++j) H.set(m, j, true);
    return H;
}

BitMatrix sum_augmented_identity(std::size_t r) {
    if (r < 1) throw std::invalid_argument("sum_augmented_identity: r must be at least 1");
    BitMatrix H(r, r + 1);
    for (std::size_t i = 0; i < r; ++i) {
        H.set(i, i, true);
        H.set(i, r, true);
    }
    return H;
}

CoveringCode direct_sum(const CoveringCode& A, const CoveringCode& B) {
    if (A.r + B.r > TABLE_LIMIT)
        throw feasibility_error("direct_sum: combined redundancy exceeds TABLE_LIMIT=" +
                                std::to_string(TABLE_LIMIT));
    if (A.l + B.l > LENGTH_LIMIT)
        throw feasibility_error("direct_sum: combined length exceeds the word representation");
    BitMatrix H(A.r + B.r, A.l + B.l);
    for (std::size_t i = 0; i < A.r; ++i)
        for (std::size_t j = 0; j < A.l; ++j)
            if (A.H.get(i, j)) H.set(i, j, true);
    for (std::size_t i = 0; i < B.r; ++i)
        for (std::size_t j = 0; j < B.l; ++j)
            if (B.H.get(i, j)) H.set(A.r + i, A.l + j, true);
    CoveringCode out = build_code(H);
    if (out.radius != A.radius + B.radius)
        throw std::logic_error("direct_sum: rebuilt radius does not equal the sum of parts");
    return out;
}

namespace {

// marks all syndromes reachable by column subsets of size <= R; returns the
// number covered
std::uint64_t covered_within(const std::vector<std::uint64_t>& colsyn, std::size_t R,
                             std::vector<std::uint64_t>& seen, std::uint64_t& count) {
    // depth-first over increasing column index
    struct Frame {
        std::size_t next_col;
        std::uint64_t syn;
        std::size_t depth;
    };
    const std::size_t l = colsyn.size();
    auto mark = [&](std::uint64_t s) {
        std::uint64_t word = s >> 6, bit = std::uint64_t(1) << (s & 63);
        if (!(seen[word] & bit)) {
            seen[word] |= bit;
            ++count;
        }
    };
    mark(0);
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == R) continue;
        for (std::size_t j = f.next_col; j < l; ++j) {
            std::uint64_t s = f.syn ^ colsyn[j];
            mark(s);
            if (f.depth + 1 < R) stack.push_back({j + 1, s, f.depth + 1});
        }
    }
    return count;
}

}  // namespace

std::optional<CoveringCode> random_search(std::size_t l, std::size_t r, std::size_t R,
                                          std::uint64_t budget, std::uint64_t seed) {
    if (r >= l) throw std::invalid_argument("random_search: requires r < l");
    if (r > TABLE_LIMIT)
        throw feasibility_error("random_search: redundancy exceeds TABLE_LIMIT=" +
                                std::to_string(TABLE_LIMIT));
    if (l > LENGTH_LIMIT)
        throw feasibility_error("random_search: length exceeds the word representation");

    const std::uint64_t total = std::uint64_t(1) << r;
    const std::uint64_t colmask = total - 1;
    std::mt19937_64 gen(seed);
    std::vector<std::uint64_t> colsyn(l);
    for (std::size_t i = 0; i < r; ++i) colsyn[i] = std::uint64_t(1) << i;
    std::vector<std::uint64_t> seen((total + 63) / 64);

    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        for (std::size_t j = r; j < l; ++j) colsyn[j] = gen() & colmask;
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t count = 0;
        if (covered_within(colsyn, R, seen, count) == total) {
            std::vector<BitVec> cols;
            cols.reserve(l);
            for (std::size_t j = 0; j < l; ++j) cols.push_back(BitVec::from_index(colsyn[j], r));
            return build_code(BitMatrix::from_columns(cols));
        }
    }
    return std::nullopt;
}

EncodedStorage encode_storage(const BitMatrix& x, CoveringCode code) {
    if (x.cols != code.r)
        throw std::invalid_argument("encode_storage: source matrix columns must equal code.r");
    EncodedStorage st;
    st.symbol_len = x.rows;
    st.symbols.reserve(code.l);
    for (std::size_t i = 0; i < code.l; ++i) st.symbols.push_back(mat_vec_mul(x, code.H.col(i)));
    st.code = std::move(code);
    return st;
}

Answer answer_query(const EncodedStorage& storage, const BitVec& s) {
    if (s.len != storage.code.r)
        throw std::invalid_argument("answer_query: syndrome length must equal code.r");
    Answer a;
    a.value = BitVec(storage.symbol_len);
    std::uint64_t mask = storage.code.leader[s.index()];
    while (mask) {
        std::size_t i = std::countr_zero(mask);
        a.accessed.push_back(i);
        a.value ^= storage.symbols[i];
        mask &= mask - 1;
    }
    return a;
}

}  // namespace pirac
