#include "pirac/gf2.hpp"

#include <stdexcept>

namespace pirac {

BitVec mat_vec_mul(const BitMatrix& H, const BitVec& y) {
    if (y.len != H.cols)
        throw std::invalid_argument("mat_vec_mul: vector length does not match column count");
    BitVec s(H.rows);
    for (std::size_t i = 0; i < H.rows; ++i)
        if (H.row[i].dot(y)) s.set(i, true);
    return s;
}

std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].len;
    std::size_t next = 0;  // next pivot row slot
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && rows[i].get(c)) rows[i] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVec> rows = m.row;
    return row_reduce(rows).size();
}

std::optional<BitVec> solve_any(const BitMatrix& H, const BitVec& s) {
    if (s.len != H.rows)
        throw std::invalid_argument("solve_any: syndrome length does not match row count");
    // reduce the augmented system [H | s]
    std::vector<BitVec> rows;
    rows.reserve(H.rows);
    for (std::size_t i = 0; i < H.rows; ++i) {
        BitVec r(H.cols + 1);
        for (std::size_t j = 0; j < H.cols; ++j)
            if (H.row[i].get(j)) r.set(j, true);
        if (s.get(i)) r.set(H.cols, true);
        rows.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots = row_reduce(rows);
    BitVec y(H.cols);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == H.cols) return std::nullopt;  // pivot in the rhs column
        if (rows[p].get(H.cols)) y.set(pivots[p], true);
    }
    return y;
}

SystematicForm systematic_form(const BitMatrix& H) {
    std::vector<BitVec> rows = H.row;
    std::vector<std::size_t> pivots = row_reduce(rows);
    if (pivots.size() != H.rows)
        throw std::invalid_argument("systematic_form: matrix is rank deficient");
    SystematicForm out;
    out.perm.reserve(H.cols);
    for (std::size_t p : pivots) out.perm.push_back(p);
    std::vector<bool> is_pivot(H.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < H.cols; ++c)
        if (!is_pivot[c]) out.perm.push_back(c);
    out.mat = BitMatrix(H.rows, H.cols);
    for (std::size_t j = 0; j < H.cols; ++j) {
        std::size_t src = out.perm[j];
        for (std::size_t i = 0; i < H.rows; ++i)
            if (rows[i].get(src)) out.mat.set(i, j, true);
    }
    return out;
}

}  // namespace pirac
