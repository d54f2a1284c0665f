#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pirac/bitvec.hpp"
#include "pirac/rng.hpp"

namespace pirac {

// M files of equal length L bits.
struct Database {
    std::size_t M = 0, L = 0;
    std::vector<BitVec> files;

    static Database random(std::size_t M, std::size_t L, std::uint64_t seed) {
        Database db;
        db.M = M;
        db.L = L;
        std::mt19937_64 g(seed);
        db.files.reserve(M);
        for (std::size_t m = 0; m < M; ++m) {
            BitVec f(L);
            for (std::size_t k = 0; k < f.w.size(); ++k) f.w[k] = g();
            if (L % 64) f.w.back() &= (std::uint64_t(1) << (L % 64)) - 1;
            db.files.push_back(std::move(f));
        }
        return db;
    }

    void validate() const {
        if (files.size() != M) throw std::invalid_argument("Database: file count mismatch");
        for (const auto& f : files)
            if (f.len != L) throw std::invalid_argument("Database: file length mismatch");
    }
};

}  // namespace pirac
