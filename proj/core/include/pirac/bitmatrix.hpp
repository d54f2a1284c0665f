#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pirac/bitvec.hpp"

namespace pirac {

// Dense row-major matrix over GF(2); every row has len == cols.
struct BitMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    // one string of '0'/'1' per row; all rows equally long
    static BitMatrix from_rows(const std::vector<std::string>& lines) {
        BitMatrix m;
        m.rows = lines.size();
        m.cols = lines.empty() ? 0 : lines[0].size();
        m.row.reserve(m.rows);
        for (const auto& s : lines) {
            if (s.size() != m.cols)
                throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
            m.row.push_back(BitVec::from_string(s));
        }
        return m;
    }

    static BitMatrix from_columns(const std::vector<BitVec>& columns) {
        BitMatrix m;
        m.cols = columns.size();
        m.rows = columns.empty() ? 0 : columns[0].len;
        m.row.assign(m.rows, BitVec(m.cols));
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (columns[j].len != m.rows)
                throw std::invalid_argument("BitMatrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < m.rows; ++i)
                if (columns[j].get(i)) m.set(i, j, true);
        }
        return m;
    }

    bool get(std::size_t i, std::size_t j) const { return row[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { row[i].set(j, b); }

    BitVec col(std::size_t j) const {
        if (j >= cols) throw std::out_of_range("BitMatrix::col: column out of range");
        BitVec c(rows);
        for (std::size_t i = 0; i < rows; ++i)
            if (row[i].get(j)) c.set(i, true);
        return c;
    }

    std::vector<BitVec> columns() const {
        std::vector<BitVec> cs;
        cs.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) cs.push_back(col(j));
        return cs;
    }

    bool operator==(const BitMatrix&) const = default;
};

}  // namespace pirac
