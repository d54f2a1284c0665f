#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pirac {

// All randomness goes through mt19937_64 with explicit masking/rejection:
// the raw engine stream is specified by the standard, so seeded runs are
// byte-identical across platforms (distribution adapters are not).

inline std::uint64_t draw_bits(std::mt19937_64& g, unsigned bits) {
    if (bits == 0) return 0;
    std::uint64_t v = g();
    return bits >= 64 ? v : v & ((std::uint64_t(1) << bits) - 1);
}

inline std::uint64_t draw_below(std::mt19937_64& g, std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        std::uint64_t v = g() & mask;
        if (v < n) return v;
    }
}

template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(g, i)]);
}

}  // namespace pirac
