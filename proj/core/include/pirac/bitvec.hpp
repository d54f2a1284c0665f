#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pirac {

// Bit vector over GF(2). LSB-first packing: bit i lives in w[i/64] at
// position i%64. Unused high bits of the last word are kept zero so that
// operator== and weight() can work wordwise.
struct BitVec {
    std::size_t len = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n) : len(n), w((n + 63) / 64, 0) {}

    // s[0] becomes bit 0.
    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVec::from_string: expected '0' or '1'");
        }
        return v;
    }

    // bit i of value becomes bit i; n <= 64.
    static BitVec from_index(std::uint64_t value, std::size_t n) {
        if (n > 64) throw std::invalid_argument("BitVec::from_index: n > 64");
        if (n < 64 && (value >> n) != 0)
            throw std::invalid_argument("BitVec::from_index: value does not fit in n bits");
        BitVec v(n);
        if (n > 0) v.w[0] = value;
        return v;
    }

    static BitVec unit(std::size_t n, std::size_t i) {
        BitVec v(n);
        v.set(i, true);
        return v;
    }

    bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool b) {
        if (i >= len) throw std::out_of_range("BitVec::set: index out of range");
        if (b)
            w[i / 64] |= std::uint64_t(1) << (i % 64);
        else
            w[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }

    void flip(std::size_t i) {
        if (i >= len) throw std::out_of_range("BitVec::flip: index out of range");
        w[i / 64] ^= std::uint64_t(1) << (i % 64);
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                idx.push_back(64 * k + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return idx;
    }

    bool is_zero() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }

    // numeric value of the bit pattern; len <= 64
    std::uint64_t index() const {
        if (len > 64) throw std::invalid_argument("BitVec::index: len > 64");
        return len == 0 ? 0 : w[0];
    }

    std::string to_string() const {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // bytes LSB-first (bit i in byte i/8 at position i%8), two lowercase hex
    // digits per byte
    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        std::size_t nbytes = (len + 7) / 8;
        s.reserve(2 * nbytes);
        for (std::size_t b = 0; b < nbytes; ++b) {
            unsigned byte = (w[b / 8] >> ((b % 8) * 8)) & 0xff;
            s.push_back(digits[byte >> 4]);
            s.push_back(digits[byte & 0xf]);
        }
        return s;
    }

    BitVec& operator^=(const BitVec& o) {
        if (len != o.len) throw std::invalid_argument("BitVec::operator^=: length mismatch");
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    // GF(2) dot product: parity of the AND
    bool dot(const BitVec& o) const {
        if (len != o.len) throw std::invalid_argument("BitVec::dot: length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
        return std::popcount(acc) & 1u;
    }

    BitVec slice(std::size_t start, std::size_t n) const {
        if (start + n > len) throw std::out_of_range("BitVec::slice: range out of bounds");
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (get(start + i)) v.set(i, true);
        return v;
    }

    bool operator==(const BitVec&) const = default;
};

inline BitVec concat(const std::vector<BitVec>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.len;
    BitVec v(total);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.len; ++i)
            if (p.get(i)) v.set(off + i, true);
        off += p.len;
    }
    return v;
}

}  // namespace pirac
