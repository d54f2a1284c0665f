#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pirac/bitmatrix.hpp"
#include "pirac/bitvec.hpp"

namespace pirac {

// H * y^T over GF(2): the sum of the columns of H selected by y.
BitVec mat_vec_mul(const BitMatrix& H, const BitVec& y);

// GF(2) rank via Gaussian elimination.
std::size_t rank(const BitMatrix& m);

// Some y with H * y^T == s, or nullopt when s is outside the column span.
// No weight guarantee; weight-minimal solving lives in the covering-code
// layer.
std::optional<BitVec> solve_any(const BitMatrix& H, const BitVec& s);

struct SystematicForm {
    BitMatrix mat;                   // [I_r | A]
    std::vector<std::size_t> perm;   // perm[j] = input column behind column j of mat
};

// Column-permuted row reduction of a full-row-rank H into [I_r | A].
SystematicForm systematic_form(const BitMatrix& H);

// Row-reduces rows in place to reduced echelon form; returns the pivot
// columns in order. Shared by rank/solve_any/systematic_form.
std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows);

}  // namespace pirac
