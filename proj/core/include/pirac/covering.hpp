#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pirac/bitmatrix.hpp"
#include "pirac/bitvec.hpp"

namespace pirac {

// Leader tables hold 2^r entries; beyond this the exact-table approach stops
// being desk-scale.
inline constexpr std::size_t TABLE_LIMIT = 24;
// Leaders are stored as one 64-bit support mask per syndrome.
inline constexpr std::size_t LENGTH_LIMIT = 64;

// A parity-check matrix with a verified covering radius and a full
// coset-leader table indexed by syndrome value (bit i of the syndrome is
// weighted 2^i).
struct CoveringCode {
    BitMatrix H;                        // r x l, full row rank
    std::size_t r = 0;                  // redundancy
    std::size_t l = 0;                  // length
    std::size_t radius = 0;             // verified covering radius
    std::vector<std::uint64_t> leader;  // 2^r support masks

    BitVec leader_vec(std::uint64_t syndrome) const {
        BitVec v(l);
        std::uint64_t m = leader[syndrome];
        while (m) {
            v.set(std::countr_zero(m), true);
            m &= m - 1;
        }
        return v;
    }
};

// Builds the coset-leader table by a breadth-first sweep over error vectors
// in increasing weight (ties broken by increasing numeric bit-pattern value);
// the first vector reaching each syndrome wins, so leaders are
// weight-minimal and the construction is deterministic.
CoveringCode build_code(const BitMatrix& H);

// m x (2^m - 1) matrix whose columns are the nonzero binary m-vectors in
// increasing numeric order (bit i of column value = row i).
BitMatrix hamming_parity(std::size_t m);

// (m+1) x 2^m: hamming_parity(m) plus a zero column, then an all-ones row.
BitMatrix extended_hamming_parity(std::size_t m);

// r x (r+1) matrix [I_r | all-ones column].
BitMatrix sum_augmented_identity(std::size_t r);

// Block-diagonal combination; the rebuilt radius equals the sum of the
// component radii.
CoveringCode direct_sum(const CoveringCode& A, const CoveringCode& B);

// Samples systematic matrices [I_r | A] with A uniform, returning the first
// whose covering radius is <= R; nullopt after budget attempts. Deterministic
// given seed: attempts draw the r-bit value of each non-identity column in
// ascending column order, one mt19937_64 output per column.
std::optional<CoveringCode> random_search(std::size_t l, std::size_t r, std::size_t R,
                                          std::uint64_t budget, std::uint64_t seed);

// One server's stored symbols z_1..z_l, each z_i = x * h_i for the t x r
// source matrix x.
struct EncodedStorage {
    CoveringCode code;
    std::size_t symbol_len = 0;  // t
    std::vector<BitVec> symbols;
};

EncodedStorage encode_storage(const BitMatrix& x, CoveringCode code);

struct Answer {
    BitVec value;
    std::vector<std::size_t> accessed;  // stored-symbol indices, ascending
};

// Answers the linear-combination query with syndrome s by looking up the
// coset leader: the value is x*s and at most `radius` symbols are touched.
Answer answer_query(const EncodedStorage& storage, const BitVec& s);

}  // namespace pirac
